#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace htensor {

/// Domain error with a stable machine-readable code, used by the CLI to
/// emit structured error reports.
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string message)
      : std::runtime_error(code + ": " + message),
        code_(std::move(code)),
        message_(std::move(message)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string code_;
  std::string message_;
};

namespace errc {
inline constexpr const char* index_out_of_range = "IndexOutOfRange";
inline constexpr const char* duplicate_entry = "DuplicateEntry";
inline constexpr const char* arity_mismatch = "ArityMismatch";
inline constexpr const char* dimension_mismatch = "DimensionMismatch";
inline constexpr const char* zero_vector = "ZeroVector";
inline constexpr const char* not_hermitian = "NotHermitian";
inline constexpr const char* not_matrix = "NotMatrix";
inline constexpr const char* convergence_failure = "ConvergenceFailure";
inline constexpr const char* non_real_diagonal = "NonRealDiagonal";
inline constexpr const char* bad_split = "BadSplit";
inline constexpr const char* nonpositive_bound = "NonpositiveBound";
inline constexpr const char* symmetry_violation = "SymmetryViolation";
inline constexpr const char* shape_mismatch = "ShapeMismatch";
inline constexpr const char* not_hermitian_after_assembly =
    "NotHermitianAfterAssembly";
inline constexpr const char* no_threshold_found = "NoThresholdFound";
inline constexpr const char* parse_error = "ParseError";
}  // namespace errc

}  // namespace htensor
