#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cdet {

/// Outcome of one exact identity check.
struct VerifyReport {
  std::string identity;
  int s = 0;
  int n = 0;
  std::string mode;  // "symbolic" or "numeric"
  std::optional<std::uint64_t> seed;
  std::map<std::string, std::string> params;
  bool equal = false;
  /// Global sign relating lhs to rhs when only equality up to sign is claimed.
  std::optional<int> sign;
  std::string lhs_hash;
  std::string rhs_hash;
  std::int64_t elapsed_ms = 0;
  /// Failure description (offending cell, mismatching family, ...).
  std::string detail;
};

/// Lowercase hex SHA-256 of the bytes of `text`.
std::string sha256_hex(std::string_view text);

/// Versioned JSON document: {"schema":1,"identity":...,"all_equal":...,"runs":[...]}.
/// elapsed_ms is written as recorded; pass timing=false to zero it so that
/// identical runs produce identical bytes.
std::string reports_to_json(const std::vector<VerifyReport>& runs, bool timing);

/// One line per run: "identity=main s=2 n=2 mode=symbolic seed=- equal=true ...".
std::string reports_to_text(const std::vector<VerifyReport>& runs, bool timing);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace cdet
