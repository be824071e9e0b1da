#include "cdet/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cdet/errors.hpp"

namespace cdet {

std::string sha256_hex(std::string_view text) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw InternalError("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

namespace {

nlohmann::ordered_json run_json(const VerifyReport& r, bool timing) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["s"] = r.s;
  j["n"] = r.n;
  j["mode"] = r.mode;
  j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["equal"] = r.equal;
  j["sign"] = r.sign ? nlohmann::ordered_json(*r.sign) : nlohmann::ordered_json(nullptr);
  j["lhs_hash"] = r.lhs_hash;
  j["rhs_hash"] = r.rhs_hash;
  j["elapsed_ms"] = timing ? r.elapsed_ms : 0;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

}  // namespace

std::string reports_to_json(const std::vector<VerifyReport>& runs, bool timing) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["identity"] = runs.empty() ? std::string() : runs.front().identity;
  bool all = !runs.empty();
  for (const auto& r : runs) all = all && r.equal;
  doc["all_equal"] = all;
  doc["runs"] = nlohmann::ordered_json::array();
  for (const auto& r : runs) doc["runs"].push_back(run_json(r, timing));
  return doc.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<VerifyReport>& runs, bool timing) {
  std::ostringstream os;
  for (const auto& r : runs) {
    os << "identity=" << r.identity << " s=" << r.s << " n=" << r.n << " mode=" << r.mode
       << " seed=" << (r.seed ? std::to_string(*r.seed) : "-");
    for (const auto& [k, v] : r.params) os << ' ' << k << '=' << v;
    os << " equal=" << (r.equal ? "true" : "false");
    if (r.sign) os << " sign=" << *r.sign;
    os << " lhs_hash=" << r.lhs_hash.substr(0, 16) << " rhs_hash=" << r.rhs_hash.substr(0, 16);
    if (timing) os << " elapsed_ms=" << r.elapsed_ms;
    if (!r.detail.empty()) os << " detail=\"" << r.detail << '"';
    os << '\n';
  }
  return os.str();
}

}  // namespace cdet
