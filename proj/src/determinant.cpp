#include "cdet/determinant.hpp"

#include <cstdlib>

namespace cdet {

std::size_t oracle_bound() {
  if (const char* env = std::getenv("COMPOUND_DET_ORACLE_BOUND")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 6;
}

RationalMatrix eval_matrix(const PolyMatrix& m, std::span<const Rational> point) {
  RationalMatrix out(m.rows(), m.cols(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).eval(point);
  return out;
}

}  // namespace cdet
