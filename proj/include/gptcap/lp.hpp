#ifndef GPTCAP_LP_HPP
#define GPTCAP_LP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gptcap/linalg.hpp"

namespace gptcap {

enum class Sense { GreaterEqual, Equal };

struct LinRow {
    Vec coeffs;
    Sense sense = Sense::GreaterEqual;
    Rational rhs;
};

// minimize objective . x  subject to rows and optional per-variable bounds.
// Variables are free unless a bound says otherwise.
struct LinearProgram {
    Vec objective;
    std::vector<LinRow> rows;
    std::vector<std::optional<Rational>> lower;  // empty or one entry per variable
    std::vector<std::optional<Rational>> upper;

    int num_vars() const { return static_cast<int>(objective.size()); }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

// witness layout:
//   Optimal:    the optimal point x (re-checked exactly against every row).
//   Infeasible: Farkas multipliers z over the expanded row list -- user rows
//               in order, then lower-bound rows by variable index, then
//               upper-bound rows. z_r >= 0 on inequality rows,
//               sum_r z_r * row_r = 0 and sum_r z_r * rhs_r > 0.
//   Unbounded:  a recession ray d with row.d >= 0 (= 0 on equalities, and
//               respecting bound directions) and objective.d < 0.
struct LPOutcome {
    LPStatus status = LPStatus::Infeasible;
    Rational optimum;
    Vec witness;
};

// Two-phase primal simplex over exact rationals with Bland's pivot rule.
// Deterministic: identical inputs produce identical outcomes. Certificates
// are verified by exact re-substitution before the call returns; a
// certificate that fails to verify throws std::logic_error.
LPOutcome solve_lp(const LinearProgram& lp);

// Expanded row list in certificate order (user rows, lower bounds, upper
// bounds). Exposed so callers and tests can verify certificates themselves.
std::vector<LinRow> expanded_rows(const LinearProgram& lp);

struct ConeMembership {
    bool inside = false;
    Vec coefficients;  // inside: nonnegative, sum_i coefficients[i]*rays[i] = v
    Vec separator;     // outside: <separator, ray> >= 0 for all rays, <separator, v> < 0
};

// Conic-combination membership of v in cone(rays), with an exact certificate
// either way.
ConeMembership cone_membership(const Vec& v, const std::vector<Vec>& rays);

struct PolarCounterexample {
    Vec vector;
    bool in_primal_cone = false;
    bool nonneg_on_duals = false;
};

struct PolarReport {
    int trials = 0;
    int failures = 0;
    bool pass = true;
    std::optional<PolarCounterexample> first_counterexample;
};

// Samples pseudorandom rational vectors (entries with numerator and
// denominator at most 10) and checks that membership in cone(primal_rays)
// coincides with nonnegativity against every dual ray. For a model whose two
// descriptions are mutually polar the report passes.
PolarReport polar_consistency_check(const std::vector<Vec>& primal_rays,
                                    const std::vector<Vec>& dual_rays, int dim,
                                    int trials, std::uint64_t seed);

} // namespace gptcap

#endif
