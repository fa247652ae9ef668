#pragma once

#include <optional>
#include <string>
#include <utility>

#include "htensor/complex_tensor.hpp"

namespace htensor {

enum class Verdict {
  PositiveDefinite,
  PositiveSemidefinite,
  Inconclusive,
  IndefiniteOrNegative,
};

enum class Rule {
  DD,
  StrictDD,
  LLK,
  StrictLLK,
  LL,
  StrictLL,
  BlockCriterion,
  ExtremalEigenvalue,
};

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PositiveDefinite: return "POSITIVE_DEFINITE";
    case Verdict::PositiveSemidefinite: return "POSITIVE_SEMIDEFINITE";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    case Verdict::IndefiniteOrNegative: return "INDEFINITE_OR_NEGATIVE";
  }
  return "?";
}

inline std::string to_string(Rule r) {
  switch (r) {
    case Rule::DD: return "DD";
    case Rule::StrictDD: return "STRICT_DD";
    case Rule::LLK: return "LLK";
    case Rule::StrictLLK: return "STRICT_LLK";
    case Rule::LL: return "LL";
    case Rule::StrictLL: return "STRICT_LL";
    case Rule::BlockCriterion: return "BLOCK_CRITERION";
    case Rule::ExtremalEigenvalue: return "EXTREMAL_EIGENVALUE";
  }
  return "?";
}

/// Constants of the block approximation criterion. `constant_c` is the
/// threshold the ratio K2/K is compared against; `split` is 1-based.
struct BlockData {
  int split = 0;
  double k1 = 0.0;
  double k2 = 0.0;
  double k = 0.0;
  double n_tuples = 0.0;
  double constant_c = 0.0;
};

/// Definiteness verdict plus the rule that produced it and its witnesses.
struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  Rule rule = Rule::ExtremalEigenvalue;
  /// Minimum slack of the firing rule's inequalities (rule-dependent units).
  double slack = 0.0;
  /// For INDEFINITE_OR_NEGATIVE: a vector with f(A)(witness) < 0.
  std::optional<ComplexVector> witness_vector;
  /// For INCONCLUSIVE predicate rules: the first failing index pair, 1-based.
  std::optional<std::pair<int, int>> failing_pair;
  std::optional<double> lambda_min;
  std::optional<BlockData> block;
};

}  // namespace htensor
