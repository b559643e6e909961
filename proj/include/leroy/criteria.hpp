#ifndef LEROY_CRITERIA_HPP
#define LEROY_CRITERIA_HPP

#include <string>
#include <vector>

#include "leroy/params.hpp"

namespace leroy {

enum class Relation { less, less_equal, greater, greater_equal, equal };

std::string relation_symbol(Relation rel);

/// One hypothesis comparison of a theorem, evaluated at concrete params.
/// margin is the signed distance to the boundary (positive = satisfied):
/// rhs - lhs for {<, <=}, lhs - rhs for {>, >=}, -|lhs - rhs| for {=}.
/// Equality passes within absolute tolerance 1e-12.
struct Clause {
  std::string name;
  double lhs;
  Relation relation;
  double rhs;
  double margin;
  bool pass;
};

/// Builds a clause and evaluates it. `tolerance` loosens the comparison by
/// an absolute slack; the criteria use it only where a boundary case is
/// exact in real arithmetic but jitters in floating point (the unit
/// normalization clause and the Ozaki chain comparisons).
Clause make_clause(std::string name, double lhs, Relation relation, double rhs,
                   double tolerance = 0.0);

/// Clause-by-clause record of one theorem's hypothesis at one parameter
/// point. satisfied is the conjunction of `clauses`; `informational`
/// carries expressions the source states without a usable relation (they
/// never influence satisfied).
struct Certificate {
  std::string theorem_id;
  LeRoyParams params;
  std::vector<Clause> clauses;
  std::vector<Clause> informational;
  bool satisfied;
};

// Exponential subordination, 3-parameter (thm-3-1; exactly one triple).
Certificate check_exp_subordination_3(const LeRoyParams& params);
// Exponential subordination, 3n-parameter (thm-3-2).
Certificate check_exp_subordination_multi(const LeRoyParams& params);

// Exponential starlikeness / convexity, 3-parameter (thm-4-1-star/-cvx).
Certificate check_exp_starlike_3(const LeRoyParams& params);
Certificate check_exp_convex_3(const LeRoyParams& params);

// Exponential starlikeness / convexity, multi-index (thm-4-2-star/-cvx).
// The two share one printed inequality; both checks exist because the
// source names two conclusions.
Certificate check_exp_starlike_multi(const LeRoyParams& params);
Certificate check_exp_convex_multi(const LeRoyParams& params);

// Starlike in the unit disk / convex in the half disk, multi-index
// (thm-5-1-star/-cvx).
Certificate check_starlike_unit_multi(const LeRoyParams& params);
Certificate check_convex_half_multi(const LeRoyParams& params);

// Half-disk starlikeness / convexity under min(alpha,gamma) >= 1
// (thm-5-3a/-3b).
Certificate check_starlike_half(const LeRoyParams& params);
Certificate check_convex_half(const LeRoyParams& params);

/// Ozaki coefficient-chain test for close-to-convexity with respect to
/// -log(1-z). Tries the descending chain 1 >= 2A_2 >= ... >= 0 first, then
/// the ascending chain 1 <= 2A_2 <= ... <= 2; the emitted clause names
/// record which chain was certified. k_max in [3, 1000].
Certificate check_ozaki_close_to_convex(const LeRoyParams& params, int k_max);

/// Stable identifiers of every implemented theorem check, sorted.
const std::vector<std::string>& theorem_ids();

/// Dispatch by identifier. Throws std::invalid_argument for an unknown id
/// and ArityError when the theorem needs exactly one triple.
Certificate check_theorem(const std::string& theorem_id,
                          const LeRoyParams& params, int ozaki_k_max = 50);

}  // namespace leroy

#endif  // LEROY_CRITERIA_HPP
