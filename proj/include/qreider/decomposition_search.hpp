#pragma once

#include "qreider/cone_oracle.hpp"
#include "qreider/criteria.hpp"
#include "qreider/param_expr.hpp"
#include "qreider/surface_model.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qreider {

/// Open interval (lo, hi).
struct ParamDomain {
  std::string name;
  Rational lo = 0;
  Rational hi = 1;

  bool contains(const Rational& v) const { return lo < v && v < hi; }
  bool empty() const { return lo >= hi; }
};

/// L = B(params) + M(params) with affine coefficients; L must come out
/// parameter-free and integral, and round_up(M) = L is checked per point.
struct ParamFamily {
  std::string name;
  SurfacePtr surface;
  std::vector<ParamDomain> params;  // schedule order: later parameters are taken << earlier ones
  DivisorForm boundary;
  DivisorForm positive;

  /// B + M; throws DomainError when it depends on a parameter or is not integral.
  DivisorForm target() const;
};

enum class GoalKind { freeness, separation, tangent, very_ampleness, very_ampleness_sqrt2 };
const char* to_string(GoalKind k);

struct Goal {
  GoalKind kind = GoalKind::freeness;
  std::vector<std::string> points;  // one for freeness, two for separation
  std::string tangent;
  std::optional<std::vector<ParamExpr>> witness;  // flat tuple, may depend on the parameters
};

/// Builds a witness from a flat tuple for the goal. A two-value separation
/// tuple is used at both points.
BetaWitness witness_from_tuple(GoalKind kind, const std::vector<Rational>& values);

struct GoalEvaluation {
  CriterionVerdict verdict;
  NamedValues values;  // M^2, M.C for test classes, multiplicities, minimal degrees
};

/// Runs the goal's checker for concrete B and M. The trace starts with the
/// nef and bigness conditions on M, then the checker's own entries.
GoalEvaluation evaluate_goal(const QDivisor& boundary, const QDivisor& positive, const ConeDescription& cone,
                             const Goal& goal, const std::optional<BetaWitness>& witness,
                             const SearchOptions& options = {});

struct CandidateResult {
  ParamValues params;
  std::optional<std::string> skipped;  // set when the candidate violates the family invariants
  GoalEvaluation evaluation;

  bool established() const { return !skipped && evaluation.verdict.established(); }
};

CandidateResult evaluate_candidate(const ParamFamily& family, const ConeDescription& cone, const Goal& goal,
                                   const ParamValues& params, const SearchOptions& options = {});

struct Schedule {
  unsigned first_exponent = 1;  // first parameter starts at lo + (hi - lo)/2^first_exponent
  unsigned depth = 24;
  Execution execution = Execution::parallel;
};

struct SearchReport {
  bool found = false;
  ParamValues params;
  CriterionVerdict verdict;
  NamedValues values;
  std::size_t attempts = 0;
  std::size_t skipped = 0;
  std::vector<std::string> notes;
};

/// Walks parameter values p_i = lo_i + (hi_i - lo_i) 2^-(k_1 + ... + k_i) in
/// lexicographic order of (k_1, k_2, ...) and returns the first candidate
/// whose verdict is established. Candidates may be evaluated concurrently;
/// the reported one is always the first in schedule order.
SearchReport search_params(const ParamFamily& family, const ConeDescription& cone, const Goal& goal,
                           const Schedule& schedule = {}, const SearchOptions& options = {});

}  // namespace qreider
