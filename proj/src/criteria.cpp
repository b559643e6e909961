#include "leroy/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "leroy/constants.hpp"
#include "leroy/errors.hpp"
#include "leroy/gamma.hpp"
#include "leroy/series.hpp"

namespace leroy {

std::string relation_symbol(Relation rel) {
  switch (rel) {
    case Relation::less: return "<";
    case Relation::less_equal: return "<=";
    case Relation::greater: return ">";
    case Relation::greater_equal: return ">=";
    case Relation::equal: return "=";
  }
  return "?";
}

Clause make_clause(std::string name, double lhs, Relation relation, double rhs,
                   double tolerance) {
  double margin = 0.0;
  bool pass = false;
  switch (relation) {
    case Relation::less:
      margin = rhs - lhs;
      pass = lhs < rhs + tolerance;
      break;
    case Relation::less_equal:
      margin = rhs - lhs;
      pass = lhs <= rhs + tolerance;
      break;
    case Relation::greater:
      margin = lhs - rhs;
      pass = lhs > rhs - tolerance;
      break;
    case Relation::greater_equal:
      margin = lhs - rhs;
      pass = lhs >= rhs - tolerance;
      break;
    case Relation::equal:
      margin = -std::abs(lhs - rhs);
      pass = std::abs(lhs - rhs) <= 1e-12;
      break;
  }
  return Clause{std::move(name), lhs, relation, rhs, margin, pass};
}

namespace {

constexpr double kChainTol = 1e-12;  // Ozaki chain comparison slack

double product_gamma_beta(const LeRoyParams& p) {
  double acc = 0.0;
  for (const ParamTriple& t : p.triples()) acc += t.gamma * log_gamma(t.beta);
  return std::exp(acc);
}

double product_gamma_alpha_beta(const LeRoyParams& p) {
  double acc = 0.0;
  for (const ParamTriple& t : p.triples())
    acc += t.gamma * log_gamma(t.alpha + t.beta);
  return std::exp(acc);
}

double min_field(const LeRoyParams& p) {
  double m = std::numeric_limits<double>::infinity();
  for (const ParamTriple& t : p.triples())
    m = std::min({m, t.alpha, t.beta, t.gamma});
  return m;
}

double min_alpha_gamma_product(const LeRoyParams& p) {
  double m = std::numeric_limits<double>::infinity();
  for (const ParamTriple& t : p.triples()) m = std::min(m, t.alpha * t.gamma);
  return m;
}

// min over i of alpha_i^2 gamma_i - beta_i; >= 0 means the hypothesis
// alpha_i^2 gamma_i >= beta_i holds for every index.
double min_alpha2_gamma_minus_beta(const LeRoyParams& p) {
  double m = std::numeric_limits<double>::infinity();
  for (const ParamTriple& t : p.triples())
    m = std::min(m, t.alpha * t.alpha * t.gamma - t.beta);
  return m;
}

Certificate finish(std::string id, const LeRoyParams& params,
                   std::vector<Clause> clauses,
                   std::vector<Clause> informational = {}) {
  bool all = true;
  for (const Clause& c : clauses) all = all && c.pass;
  return Certificate{std::move(id), params, std::move(clauses),
                     std::move(informational), all};
}

void require_single_triple(const LeRoyParams& params, const char* id) {
  if (params.size() != 1) {
    throw ArityError(std::string(id) + " takes exactly one (alpha,beta,gamma) triple");
  }
}

// alpha gamma log(alpha+gamma) - log 2 - 3/4 - alpha gamma / (alpha+gamma),
// summed over triples; stated in the source without a relation, emitted
// with "< 0" as an informational clause only.
Clause log_hypothesis_clause(const LeRoyParams& p) {
  double acc = 0.0;
  for (const ParamTriple& t : p.triples()) {
    const double ag = t.alpha * t.gamma;
    acc += ag * std::log(t.alpha + t.gamma) - ag / (t.alpha + t.gamma);
  }
  acc -= std::log(2.0) + 0.75;
  return make_clause("log-hypothesis", acc, Relation::less, 0.0);
}

}  // namespace

Certificate check_exp_subordination_3(const LeRoyParams& params) {
  require_single_triple(params, "thm-3-1");
  const ParamTriple& t = params.front();
  const double e = kMathConstants.euler_number;
  const double delta = kMathConstants.euler_mascheroni;
  const double a2g = t.alpha * t.alpha * t.gamma;

  std::vector<Clause> clauses;
  clauses.push_back(make_clause("positive-params",
                                std::min({t.alpha, t.beta, t.gamma}),
                                Relation::greater, 0.0));
  clauses.push_back(make_clause("alpha-beta-below-alpha2gamma",
                                std::max(t.alpha, t.beta), Relation::less, a2g));
  clauses.push_back(make_clause("unit-normalization", product_gamma_beta(params),
                                Relation::equal, 1.0));
  clauses.push_back(make_clause(
      "log-majorant-negative",
      std::log(2.0) - t.alpha * t.gamma * std::log(t.alpha + t.beta) +
          t.alpha * t.gamma * delta,
      Relation::less, 0.0));
  clauses.push_back(make_clause("coefficient-bound",
                                (e - 1.0) * product_gamma_alpha_beta(params),
                                Relation::greater, e * e));
  return finish("thm-3-1", params, std::move(clauses));
}

Certificate check_exp_subordination_multi(const LeRoyParams& params) {
  const double e = kMathConstants.euler_number;
  std::vector<Clause> clauses;
  clauses.push_back(
      make_clause("positive-params", min_field(params), Relation::greater, 0.0));
  clauses.push_back(make_clause("unit-normalization", product_gamma_beta(params),
                                Relation::equal, 1.0));
  clauses.push_back(make_clause("alpha-gamma-at-least-one",
                                min_alpha_gamma_product(params),
                                Relation::greater_equal, 1.0));
  clauses.push_back(make_clause("coefficient-bound",
                                product_gamma_alpha_beta(params),
                                Relation::greater, e * e / (e * e - 1.0)));
  return finish("thm-3-2", params, std::move(clauses));
}

namespace {

// Shared hypothesis clauses of the exponential-class theorems:
// alpha_i gamma_i >= 1 and alpha_i^2 gamma_i >= beta_i.
std::vector<Clause> exp_class_hypotheses(const LeRoyParams& params) {
  std::vector<Clause> clauses;
  if (params.size() == 1) {
    const ParamTriple& t = params.front();
    clauses.push_back(make_clause("alpha-gamma-at-least-one", t.alpha * t.gamma,
                                  Relation::greater_equal, 1.0));
    clauses.push_back(make_clause("alpha2gamma-at-least-beta",
                                  t.alpha * t.alpha * t.gamma,
                                  Relation::greater_equal, t.beta));
  } else {
    clauses.push_back(make_clause("alpha-gamma-at-least-one",
                                  min_alpha_gamma_product(params),
                                  Relation::greater_equal, 1.0));
    clauses.push_back(make_clause("alpha2gamma-at-least-beta",
                                  min_alpha2_gamma_minus_beta(params),
                                  Relation::greater_equal, 0.0));
  }
  return clauses;
}

}  // namespace

Certificate check_exp_starlike_3(const LeRoyParams& params) {
  require_single_triple(params, "thm-4-1-star");
  const double e = kMathConstants.euler_number;
  std::vector<Clause> clauses = exp_class_hypotheses(params);
  clauses.push_back(make_clause("exp-starlike-bound",
                                (2.0 * e - 1.0) * product_gamma_beta(params),
                                Relation::less,
                                2.0 * product_gamma_alpha_beta(params)));
  std::vector<Clause> info{log_hypothesis_clause(params)};
  return finish("thm-4-1-star", params, std::move(clauses), std::move(info));
}

Certificate check_exp_convex_3(const LeRoyParams& params) {
  require_single_triple(params, "thm-4-1-cvx");
  const double e = kMathConstants.euler_number;
  std::vector<Clause> clauses = exp_class_hypotheses(params);
  clauses.push_back(make_clause(
      "exp-convex-bound",
      (4.0 * e * e - 10.0 * e + 2.0) * product_gamma_beta(params),
      Relation::less, product_gamma_alpha_beta(params)));
  // The proof of the statement ends in a different inequality than the
  // statement prints; both are surfaced, only the printed one counts.
  std::vector<Clause> info{log_hypothesis_clause(params)};
  info.push_back(make_clause(
      "variant-from-proof",
      (4.0 * e * e - 3.0 * e + 2.0) * product_gamma_beta(params),
      Relation::less, (e - 1.0) * product_gamma_alpha_beta(params)));
  return finish("thm-4-1-cvx", params, std::move(clauses), std::move(info));
}

namespace {

Certificate exp_class_multi(const char* id, const LeRoyParams& params) {
  const double e = kMathConstants.euler_number;
  std::vector<Clause> clauses = exp_class_hypotheses(params);
  clauses.push_back(make_clause(
      "exp-class-bound", e * (e - 2.0) * product_gamma_beta(params),
      Relation::less, (e - 1.0) * product_gamma_alpha_beta(params)));
  return finish(id, params, std::move(clauses));
}

}  // namespace

Certificate check_exp_starlike_multi(const LeRoyParams& params) {
  return exp_class_multi("thm-4-2-star", params);
}

Certificate check_exp_convex_multi(const LeRoyParams& params) {
  return exp_class_multi("thm-4-2-cvx", params);
}

Certificate check_starlike_unit_multi(const LeRoyParams& params) {
  const double e = kMathConstants.euler_number;
  std::vector<Clause> clauses = exp_class_hypotheses(params);
  clauses.push_back(log_hypothesis_clause(params));
  clauses.push_back(make_clause(
      "starlike-bound", std::sqrt(5.0) * (e - 2.0) * product_gamma_beta(params),
      Relation::less, 2.0 * product_gamma_alpha_beta(params)));
  return finish("thm-5-1-star", params, std::move(clauses));
}

Certificate check_convex_half_multi(const LeRoyParams& params) {
  const double e = kMathConstants.euler_number;
  std::vector<Clause> clauses = exp_class_hypotheses(params);
  clauses.push_back(log_hypothesis_clause(params));
  clauses.push_back(make_clause("convex-bound",
                                (e - 2.0) * product_gamma_beta(params),
                                Relation::less,
                                product_gamma_alpha_beta(params)));
  return finish("thm-5-1-cvx", params, std::move(clauses));
}

namespace {

std::vector<Clause> half_disk_hypotheses(const LeRoyParams& params) {
  double min_ag = std::numeric_limits<double>::infinity();
  double min_beta = std::numeric_limits<double>::infinity();
  double max_ab = -std::numeric_limits<double>::infinity();
  for (const ParamTriple& t : params.triples()) {
    min_ag = std::min({min_ag, t.alpha, t.gamma});
    min_beta = std::min(min_beta, t.beta);
    max_ab = std::max(max_ab, t.alpha + t.beta);
  }
  std::vector<Clause> clauses;
  clauses.push_back(make_clause("min-alpha-gamma-at-least-one", min_ag,
                                Relation::greater_equal, 1.0));
  clauses.push_back(
      make_clause("positive-beta", min_beta, Relation::greater, 0.0));
  clauses.push_back(make_clause("some-alpha-plus-beta-at-least-two", max_ab,
                                Relation::greater_equal, 2.0));
  return clauses;
}

}  // namespace

Certificate check_starlike_half(const LeRoyParams& params) {
  const double e = kMathConstants.euler_number;
  std::vector<Clause> clauses = half_disk_hypotheses(params);
  clauses.push_back(make_clause("starlike-half-bound",
                                (e - 1.0) * product_gamma_beta(params),
                                Relation::less,
                                product_gamma_alpha_beta(params)));
  return finish("thm-5-3a", params, std::move(clauses));
}

Certificate check_convex_half(const LeRoyParams& params) {
  const double e = kMathConstants.euler_number;
  std::vector<Clause> clauses = half_disk_hypotheses(params);
  clauses.push_back(make_clause("convex-half-bound",
                                2.0 * (e - 1.0) * product_gamma_beta(params),
                                Relation::less,
                                product_gamma_alpha_beta(params)));
  double min_beta = std::numeric_limits<double>::infinity();
  for (const ParamTriple& t : params.triples())
    min_beta = std::min(min_beta, t.beta);
  clauses.push_back(
      make_clause("beta-at-least-two", min_beta, Relation::greater_equal, 2.0));
  return finish("thm-5-3b", params, std::move(clauses));
}

Certificate check_ozaki_close_to_convex(const LeRoyParams& params, int k_max) {
  if (k_max < 3 || k_max > 1000) {
    throw std::invalid_argument("check_ozaki_close_to_convex: k_max in [3, 1000]");
  }
  // chain[k] = k * A_k for k = 2..k_max (A_k underflows to 0 harmlessly).
  std::vector<double> chain(k_max + 1, 0.0);
  for (int k = 2; k <= k_max; ++k) {
    chain[k] = k * coefficient(params, CoefficientKind::normalized, k - 1);
  }

  double worst_rise = -std::numeric_limits<double>::infinity();   // descending
  double worst_drop = -std::numeric_limits<double>::infinity();   // ascending
  double min_term = std::numeric_limits<double>::infinity();
  double max_term = -std::numeric_limits<double>::infinity();
  for (int k = 2; k < k_max; ++k) {
    worst_rise = std::max(worst_rise, chain[k + 1] - chain[k]);
    worst_drop = std::max(worst_drop, chain[k] - chain[k + 1]);
  }
  for (int k = 2; k <= k_max; ++k) {
    min_term = std::min(min_term, chain[k]);
    max_term = std::max(max_term, chain[k]);
  }

  // All chain comparisons carry the same 1e-12 slack as the unit clause:
  // the start 2 A_2 = 1 is exact in real arithmetic at boundary params.
  std::vector<Clause> descending;
  descending.push_back(make_clause("descending-start", chain[2],
                                   Relation::less_equal, 1.0, kChainTol));
  descending.push_back(make_clause("descending-monotone", worst_rise,
                                   Relation::less_equal, 0.0, kChainTol));
  descending.push_back(make_clause("descending-floor", min_term,
                                   Relation::greater_equal, 0.0, kChainTol));
  descending.push_back(make_clause("descending-limit", chain[k_max],
                                   Relation::less_equal, 1e-6));

  std::vector<Clause> ascending;
  ascending.push_back(make_clause("ascending-start", chain[2],
                                  Relation::greater_equal, 1.0, kChainTol));
  ascending.push_back(make_clause("ascending-monotone", worst_drop,
                                  Relation::less_equal, 0.0, kChainTol));
  ascending.push_back(make_clause("ascending-cap", max_term,
                                  Relation::less_equal, 2.0, kChainTol));

  const auto all_pass = [](const std::vector<Clause>& cs) {
    for (const Clause& c : cs)
      if (!c.pass) return false;
    return true;
  };

  if (all_pass(descending)) return finish("ozaki", params, std::move(descending));
  if (all_pass(ascending)) return finish("ozaki", params, std::move(ascending));
  // Neither chain holds: emit both so the record shows where each breaks.
  std::vector<Clause> clauses = std::move(descending);
  clauses.insert(clauses.end(), ascending.begin(), ascending.end());
  return finish("ozaki", params, std::move(clauses));
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "ozaki",        "thm-3-1",      "thm-3-2",     "thm-4-1-cvx",
      "thm-4-1-star", "thm-4-2-cvx",  "thm-4-2-star", "thm-5-1-cvx",
      "thm-5-1-star", "thm-5-3a",     "thm-5-3b"};
  return ids;
}

Certificate check_theorem(const std::string& theorem_id,
                          const LeRoyParams& params, int ozaki_k_max) {
  if (theorem_id == "thm-3-1") return check_exp_subordination_3(params);
  if (theorem_id == "thm-3-2") return check_exp_subordination_multi(params);
  if (theorem_id == "thm-4-1-star") return check_exp_starlike_3(params);
  if (theorem_id == "thm-4-1-cvx") return check_exp_convex_3(params);
  if (theorem_id == "thm-4-2-star") return check_exp_starlike_multi(params);
  if (theorem_id == "thm-4-2-cvx") return check_exp_convex_multi(params);
  if (theorem_id == "thm-5-1-star") return check_starlike_unit_multi(params);
  if (theorem_id == "thm-5-1-cvx") return check_convex_half_multi(params);
  if (theorem_id == "thm-5-3a") return check_starlike_half(params);
  if (theorem_id == "thm-5-3b") return check_convex_half(params);
  if (theorem_id == "ozaki")
    return check_ozaki_close_to_convex(params, ozaki_k_max);
  throw std::invalid_argument("unknown theorem id: " + theorem_id);
}

}  // namespace leroy
