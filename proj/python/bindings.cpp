#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cdet/characters.hpp"
#include "cdet/cli.hpp"
#include "cdet/combinatorics.hpp"
#include "cdet/compound.hpp"
#include "cdet/errors.hpp"
#include "cdet/macdonald.hpp"

namespace py = pybind11;
using namespace cdet;

namespace {

py::dict to_dict(const VerifyReport& r) {
  py::dict d;
  d["identity"] = r.identity;
  d["s"] = r.s;
  d["n"] = r.n;
  d["mode"] = r.mode;
  d["seed"] = r.seed ? py::object(py::int_(*r.seed)) : py::object(py::none());
  d["params"] = r.params;
  d["equal"] = r.equal;
  d["sign"] = r.sign ? py::object(py::int_(*r.sign)) : py::object(py::none());
  d["lhs_hash"] = r.lhs_hash;
  d["rhs_hash"] = r.rhs_hash;
  d["elapsed_ms"] = r.elapsed_ms;
  d["detail"] = r.detail;
  return d;
}

GramVariant variant_of(const std::string& v) {
  if (v == "lemma1") return GramVariant::lemma1;
  if (v == "lemma2") return GramVariant::lemma2;
  throw UsageError("unknown variant: " + v);
}

std::vector<std::string> strings(const std::vector<Composition>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact verification of compound determinant identities";

  static py::exception<UsageError> usage(m, "UsageError", PyExc_ValueError);
  static py::exception<CapabilityError> capability(m, "CapabilityError", PyExc_RuntimeError);
  static py::exception<DomainError> domain(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const UsageError& e) {
      PyErr_SetString(usage.ptr(), e.what());
    } catch (const CapabilityError& e) {
      PyErr_SetString(capability.ptr(), e.what());
    } catch (const DomainError& e) {
      PyErr_SetString(domain.ptr(), e.what());
    }
  });

  m.def("enumerate_Z", [](int s, int n, bool strict) { return strings(enumerate_Z(s, n, strict)); },
        py::arg("s"), py::arg("n"), py::arg("strict") = false);
  m.def("iota", [](const std::vector<int>& mu, int s, int n) { return iota(Composition(mu), s, n).elements(); },
        py::arg("mu"), py::arg("s"), py::arg("n"));
  m.def("partitions_in_box",
        [](int max_part, int length) {
          std::vector<std::string> out;
          for (const auto& p : enumerate_partitions_in_box(max_part, length)) out.push_back(p.str());
          return out;
        },
        py::arg("max_part"), py::arg("length"));

  m.def("verify_main", [](int s, int n, const std::string& mode, std::uint64_t seed) {
    return to_dict(verify_main(s, n, mode, seed));
  }, py::arg("s"), py::arg("n"), py::arg("mode") = "numeric", py::arg("seed") = 0);
  m.def("verify_sylvester", [](int s, int n, const std::string& mode, std::uint64_t seed) {
    return to_dict(verify_sylvester(s, n, mode, seed));
  }, py::arg("s"), py::arg("n"), py::arg("mode") = "numeric", py::arg("seed") = 0);
  m.def("verify_leading_term", [](int s, int n) { return to_dict(verify_leading_term(s, n)); }, py::arg("s"),
        py::arg("n"));
  m.def("verify_gram", [](int s, int n, const std::string& variant, int k0, const std::string& mode,
                          std::uint64_t seed) {
    return to_dict(verify_gram_structure(s, n, variant_of(variant), k0, mode, seed).report);
  }, py::arg("s"), py::arg("n"), py::arg("variant") = "lemma1", py::arg("k0") = 1, py::arg("mode") = "symbolic",
        py::arg("seed") = 0);
  m.def("verify_denominators", [](int n) { return to_dict(verify_denominators(n)); }, py::arg("n"));
  m.def("verify_schur_det", [](const std::string& family, int s, int n, std::uint64_t seed, bool remark) {
    return to_dict(verify_theorem_schur(parse_family(family), s, n, seed, remark));
  }, py::arg("family"), py::arg("s"), py::arg("n"), py::arg("seed") = 0, py::arg("remark") = false);
  m.def("verify_prop12", [](const std::string& family, int s, int n, std::uint64_t seed) {
    return to_dict(verify_prop_detS(parse_family(family), s, n, seed));
  }, py::arg("family"), py::arg("s"), py::arg("n"), py::arg("seed") = 0);
  m.def("verify_macdonald", [](int s, int n, const std::string& q, const std::string& t, std::uint64_t seed) {
    return to_dict(verify_corollary_macdonald(s, n, QTParams{Rational::parse(q), Rational::parse(t)}, seed).report);
  }, py::arg("s"), py::arg("n"), py::arg("q"), py::arg("t"), py::arg("seed") = 0);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
