#include "gptcap/lp.hpp"

#include <algorithm>
#include <stdexcept>

#include "gptcap/prng.hpp"

namespace gptcap {

namespace {

// Dense two-phase tableau simplex. Free variables are split as x = xp - xm,
// inequality rows get slacks, and every row carries an artificial column so
// that phase-I dual multipliers can be read off artificial reduced costs
// (y_r = 1 - redcost(a_r)). Artificial columns never enter the basis; rows
// whose artificial cannot be pivoted out after phase I are redundant and get
// dropped.
class Simplex {
  public:
    Simplex(const Vec& objective, const std::vector<LinRow>& rows) : c_orig_(objective) {
        n_ = static_cast<int>(objective.size());
        const int m = static_cast<int>(rows.size());
        n_ge_ = 0;
        for (const auto& r : rows)
            if (r.sense == Sense::GreaterEqual) ++n_ge_;

        slack_col_.assign(m, -1);
        art_col_.assign(m, -1);
        flip_.assign(m, Rational(1));

        ncols_ = 2 * n_ + n_ge_ + m;
        int next_slack = 2 * n_;
        int next_art = 2 * n_ + n_ge_;

        tab_.assign(m, Vec(ncols_ + 1, Rational(0)));
        basis_.assign(m, -1);
        is_artificial_.assign(ncols_, false);
        banned_.assign(ncols_, false);

        for (int r = 0; r < m; ++r) {
            const LinRow& row = rows[r];
            if (static_cast<int>(row.coeffs.size()) != n_)
                throw DimensionMismatch("LP row " + std::to_string(r) + " has length " +
                                        std::to_string(row.coeffs.size()) + ", expected " +
                                        std::to_string(n_));
            for (int j = 0; j < n_; ++j) {
                tab_[r][j] = row.coeffs[j];
                tab_[r][n_ + j] = -row.coeffs[j];
            }
            tab_[r][ncols_] = row.rhs;
            if (row.sense == Sense::GreaterEqual) {
                slack_col_[r] = next_slack++;
                tab_[r][slack_col_[r]] = -1;
            }
            art_col_[r] = next_art++;
            is_artificial_[art_col_[r]] = true;
            banned_[art_col_[r]] = true;

            // Normalize to rhs >= 0; for a >=-row with rhs <= 0 the flip also
            // turns the slack coefficient positive so the slack can start basic.
            bool flip = (row.sense == Sense::GreaterEqual) ? (row.rhs <= 0) : (row.rhs < 0);
            if (flip) {
                for (int j = 0; j <= ncols_; ++j) tab_[r][j] = -tab_[r][j];
                flip_[r] = -1;
            }
            // The artificial column is set after normalization so it is the
            // unit vector e_r of the solved system; phase-I multipliers are
            // then y_r = 1 - redcost(a_r) even for rows where it stays
            // nonbasic.
            tab_[r][art_col_[r]] = 1;
            if (row.sense == Sense::GreaterEqual && tab_[r][slack_col_[r]] == 1) {
                basis_[r] = slack_col_[r];
            } else {
                basis_[r] = art_col_[r];
                needs_artificial_ = true;
            }
        }
        row_ids_.resize(m);
        for (int r = 0; r < m; ++r) row_ids_[r] = r;
    }

    LPStatus run() {
        if (needs_artificial_) {
            install_phase1_costs();
            iterate();
            if (cost_[ncols_] != 0) {
                // -cost_[rhs] is the phase-I objective value; > 0 means infeasible.
                return LPStatus::Infeasible;
            }
            evict_artificials();
        }
        install_phase2_costs();
        return iterate() ? LPStatus::Optimal : LPStatus::Unbounded;
    }

    // Optimal point in the original (free) variables.
    Vec solution() const {
        Vec x(n_, Rational(0));
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            int b = basis_[r];
            if (b < n_)
                x[b] += tab_[r][ncols_];
            else if (b < 2 * n_)
                x[b - n_] -= tab_[r][ncols_];
        }
        return x;
    }

    // Farkas multipliers per original row, mapped back through row flips.
    // Rows deleted as redundant never occur here (eviction happens only when
    // phase I succeeded).
    Vec farkas_certificate() const {
        Vec z(flip_.size(), Rational(0));
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            Rational y = Rational(1) - cost_[art_col_[row_ids_[r]]];
            z[row_ids_[r]] = flip_[row_ids_[r]] * y;
        }
        return z;
    }

    Vec unbounded_ray() const {
        Vec d(ncols_, Rational(0));
        d[ray_col_] = 1;
        for (std::size_t r = 0; r < basis_.size(); ++r) d[basis_[r]] = -tab_[r][ray_col_];
        Vec x(n_, Rational(0));
        for (int j = 0; j < n_; ++j) x[j] = d[j] - d[n_ + j];
        return x;
    }

  private:
    void install_phase1_costs() {
        cost_.assign(ncols_ + 1, Rational(0));
        for (int j = 0; j < ncols_; ++j)
            if (is_artificial_[j]) cost_[j] = 1;
        reduce_costs();
    }

    void install_phase2_costs() {
        cost_.assign(ncols_ + 1, Rational(0));
        for (int j = 0; j < n_; ++j) {
            cost_[j] = c_orig_[j];
            cost_[n_ + j] = -c_orig_[j];
        }
        reduce_costs();
    }

    // cost := cost - sum_r cost[basis_r] * row_r. Basis columns are unit
    // vectors across rows, so one pass suffices.
    void reduce_costs() {
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            Rational f = cost_[basis_[r]];
            if (f == 0) continue;
            for (int j = 0; j <= ncols_; ++j)
                if (tab_[r][j] != 0) cost_[j] -= f * tab_[r][j];
        }
    }

    // Bland: entering column = lowest eligible index with negative reduced
    // cost; leaving row = lowest ratio, ties by lowest basis index. Returns
    // false when an improving column has no blocking row (unbounded).
    bool iterate() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < ncols_; ++j) {
                if (banned_[j]) continue;
                if (cost_[j] < 0) { enter = j; break; }
            }
            if (enter < 0) return true;

            int leave = -1;
            Rational best_ratio;
            for (std::size_t r = 0; r < basis_.size(); ++r) {
                if (tab_[r][enter] <= 0) continue;
                Rational ratio = tab_[r][ncols_] / tab_[r][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leave])) {
                    leave = static_cast<int>(r);
                    best_ratio = ratio;
                }
            }
            if (leave < 0) { ray_col_ = enter; return false; }
            pivot(leave, enter);
        }
    }

    void pivot(int r, int j) {
        Rational p = tab_[r][j];
        for (int k = 0; k <= ncols_; ++k)
            if (tab_[r][k] != 0) tab_[r][k] /= p;
        for (std::size_t i = 0; i < tab_.size(); ++i) {
            if (static_cast<int>(i) == r) continue;
            Rational f = tab_[i][j];
            if (f == 0) continue;
            for (int k = 0; k <= ncols_; ++k)
                if (tab_[r][k] != 0) tab_[i][k] -= f * tab_[r][k];
        }
        Rational f = cost_[j];
        if (f != 0)
            for (int k = 0; k <= ncols_; ++k)
                if (tab_[r][k] != 0) cost_[k] -= f * tab_[r][k];
        basis_[r] = j;
    }

    // After a feasible phase I, pivot basic artificials out; a row whose
    // structural entries are all zero is redundant and gets deleted.
    void evict_artificials() {
        for (std::size_t r = 0; r < basis_.size();) {
            if (!is_artificial_[basis_[r]]) { ++r; continue; }
            int enter = -1;
            for (int j = 0; j < ncols_; ++j) {
                if (is_artificial_[j]) continue;
                if (tab_[r][j] != 0) { enter = j; break; }
            }
            if (enter >= 0) {
                pivot(static_cast<int>(r), enter);
                ++r;
            } else {
                tab_.erase(tab_.begin() + static_cast<long>(r));
                basis_.erase(basis_.begin() + static_cast<long>(r));
                row_ids_.erase(row_ids_.begin() + static_cast<long>(r));
            }
        }
    }

  private:
    int n_ = 0;
    int n_ge_ = 0;
    int ncols_ = 0;
    bool needs_artificial_ = false;
    Vec c_orig_;
    std::vector<Vec> tab_;
    Vec cost_;
    std::vector<int> basis_;
    std::vector<int> slack_col_;
    std::vector<int> art_col_;
    std::vector<int> row_ids_;
    std::vector<Rational> flip_;
    std::vector<bool> is_artificial_;
    std::vector<bool> banned_;
    int ray_col_ = -1;
};

void verify_optimal(const Vec& x, const Rational& optimum, const Vec& c,
                    const std::vector<LinRow>& rows) {
    if (dot(c, x) != optimum) throw std::logic_error("LP: objective mismatch at optimum");
    for (const auto& row : rows) {
        Rational lhs = dot(row.coeffs, x);
        bool ok = (row.sense == Sense::Equal) ? (lhs == row.rhs) : (lhs >= row.rhs);
        if (!ok) throw std::logic_error("LP: optimal witness violates a constraint");
    }
}

void verify_farkas(const Vec& z, const std::vector<LinRow>& rows, int n) {
    if (z.size() != rows.size()) throw std::logic_error("LP: certificate length mismatch");
    Vec combo(n, Rational(0));
    Rational rhs_combo = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].sense == Sense::GreaterEqual && z[r] < 0)
            throw std::logic_error("LP: negative multiplier on inequality row");
        add_scaled(combo, z[r], rows[r].coeffs);
        rhs_combo += z[r] * rows[r].rhs;
    }
    if (!is_zero(combo) || rhs_combo <= 0)
        throw std::logic_error("LP: Farkas certificate does not verify");
}

void verify_ray(const Vec& d, const Vec& c, const std::vector<LinRow>& rows) {
    if (dot(c, d) >= 0) throw std::logic_error("LP: ray does not improve objective");
    for (const auto& row : rows) {
        Rational lhs = dot(row.coeffs, d);
        bool ok = (row.sense == Sense::Equal) ? (lhs == 0) : (lhs >= 0);
        if (!ok) throw std::logic_error("LP: ray leaves the feasible recession cone");
    }
}

} // namespace

std::vector<LinRow> expanded_rows(const LinearProgram& lp) {
    const int n = lp.num_vars();
    if (!lp.lower.empty() && static_cast<int>(lp.lower.size()) != n)
        throw DimensionMismatch("LP lower-bound list length mismatch");
    if (!lp.upper.empty() && static_cast<int>(lp.upper.size()) != n)
        throw DimensionMismatch("LP upper-bound list length mismatch");
    std::vector<LinRow> rows = lp.rows;
    for (int j = 0; j < n && !lp.lower.empty(); ++j) {
        if (!lp.lower[j]) continue;
        LinRow r;
        r.coeffs = zero_vec(n);
        r.coeffs[j] = 1;
        r.sense = Sense::GreaterEqual;
        r.rhs = *lp.lower[j];
        rows.push_back(std::move(r));
    }
    for (int j = 0; j < n && !lp.upper.empty(); ++j) {
        if (!lp.upper[j]) continue;
        LinRow r;
        r.coeffs = zero_vec(n);
        r.coeffs[j] = -1;
        r.sense = Sense::GreaterEqual;
        r.rhs = -*lp.upper[j];
        rows.push_back(std::move(r));
    }
    return rows;
}

LPOutcome solve_lp(const LinearProgram& lp) {
    const int n = lp.num_vars();
    if (n == 0) throw InvalidParameter("LP has no variables");
    std::vector<LinRow> rows = expanded_rows(lp);
    if (rows.empty()) throw InvalidParameter("LP has no constraints or bounds");

    Simplex s(lp.objective, rows);
    LPStatus status = s.run();

    LPOutcome out;
    out.status = status;
    switch (status) {
        case LPStatus::Optimal:
            out.witness = s.solution();
            out.optimum = dot(lp.objective, out.witness);
            verify_optimal(out.witness, out.optimum, lp.objective, rows);
            break;
        case LPStatus::Infeasible:
            out.witness = s.farkas_certificate();
            verify_farkas(out.witness, rows, n);
            break;
        case LPStatus::Unbounded:
            out.witness = s.unbounded_ray();
            verify_ray(out.witness, lp.objective, rows);
            break;
    }
    return out;
}

ConeMembership cone_membership(const Vec& v, const std::vector<Vec>& rays) {
    const int dim = static_cast<int>(v.size());
    for (const auto& ray : rays)
        if (static_cast<int>(ray.size()) != dim)
            throw DimensionMismatch("cone_membership: ray dimension mismatch");

    ConeMembership result;
    if (rays.empty()) {
        result.inside = is_zero(v);
        if (!result.inside) {
            result.separator = scaled(v, Rational(-1));
        }
        return result;
    }

    LinearProgram lp;
    const int k = static_cast<int>(rays.size());
    lp.objective = zero_vec(k);
    for (int d = 0; d < dim; ++d) {
        LinRow row;
        row.coeffs.resize(k);
        for (int i = 0; i < k; ++i) row.coeffs[i] = rays[i][d];
        row.sense = Sense::Equal;
        row.rhs = v[d];
        lp.rows.push_back(std::move(row));
    }
    lp.lower.assign(k, Rational(0));

    LPOutcome lpo = solve_lp(lp);
    if (lpo.status == LPStatus::Optimal) {
        result.inside = true;
        result.coefficients = lpo.witness;
        return result;
    }
    if (lpo.status != LPStatus::Infeasible)
        throw std::logic_error("cone_membership: feasibility LP cannot be unbounded");

    // Multipliers on the dim equality rows give the separating functional.
    result.inside = false;
    result.separator.resize(dim);
    for (int d = 0; d < dim; ++d) result.separator[d] = -lpo.witness[d];
    for (const auto& ray : rays)
        if (dot(result.separator, ray) < 0)
            throw std::logic_error("cone_membership: separator fails on a ray");
    if (dot(result.separator, v) >= 0)
        throw std::logic_error("cone_membership: separator fails on the target");
    return result;
}

PolarReport polar_consistency_check(const std::vector<Vec>& primal_rays,
                                    const std::vector<Vec>& dual_rays, int dim,
                                    int trials, std::uint64_t seed) {
    PolarReport report;
    report.trials = trials;
    SplitMix64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        Vec v(dim);
        for (int d = 0; d < dim; ++d) v[d] = random_small_rational(rng);
        bool in_primal = cone_membership(v, primal_rays).inside;
        bool nonneg = true;
        for (const auto& h : dual_rays)
            if (dot(h, v) < 0) { nonneg = false; break; }
        if (in_primal != nonneg) {
            ++report.failures;
            report.pass = false;
            if (!report.first_counterexample)
                report.first_counterexample = PolarCounterexample{v, in_primal, nonneg};
        }
    }
    return report;
}

} // namespace gptcap
