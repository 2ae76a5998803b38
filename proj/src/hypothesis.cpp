#include "gptcap/hypothesis.hpp"

#include <stdexcept>

namespace gptcap {

HypothesisTestResult dht(const State& rho, const State& sigma, const Rational& eps) {
    if (!same_model(rho.model, sigma.model))
        throw ModelMismatch("dht: states live on different models");
    if (eps < 0 || eps > 1)
        throw InvalidEpsilon("dht: epsilon " + rat_str(eps) + " outside [0,1]");

    const ModelPtr& model = rho.model;

    LinearProgram lp;
    lp.objective = sigma.coords;
    for (const auto& g : model->primal_rays) {
        lp.rows.push_back({g, Sense::GreaterEqual, Rational(0)});
        LinRow upper;
        upper.coeffs = scaled(g, Rational(-1));
        upper.sense = Sense::GreaterEqual;
        upper.rhs = -dot(model->unit, g);
        lp.rows.push_back(std::move(upper));
    }
    lp.rows.push_back({rho.coords, Sense::GreaterEqual, Rational(1) - eps});

    LPOutcome out = solve_lp(lp);
    if (out.status != LPStatus::Optimal)
        throw std::logic_error("dht: effect polytope LP not optimal (status " +
                               std::to_string(static_cast<int>(out.status)) + ")");

    HypothesisTestResult result;
    result.beta_star = out.optimum;
    result.d_value = neg_log2(out.optimum);
    result.epsilon = eps;
    result.optimal_q = Effect::make(model, out.witness);  // re-checks 0 <= q <= u
    if (dot(result.optimal_q.coords, rho.coords) < 1 - eps)
        throw std::logic_error("dht: returned q violates the type-I constraint");
    if (dot(result.optimal_q.coords, sigma.coords) != result.beta_star)
        throw std::logic_error("dht: returned q does not reproduce beta_star");
    return result;
}

DpiReport dpi_check(const State& rho, const State& sigma, const Rational& eps,
                    const Measurement& meas) {
    if (!same_model(rho.model, meas.model))
        throw ModelMismatch("dpi_check: measurement on a different model");

    DpiReport rep;
    HypothesisTestResult before = dht(rho, sigma, eps);
    State rho_out = measurement_channel_apply(meas, rho);
    State sigma_out = measurement_channel_apply(meas, sigma);
    HypothesisTestResult after = dht(rho_out, sigma_out, eps);

    rep.beta_before = before.beta_star;
    rep.beta_after = after.beta_star;
    rep.holds = before.beta_star <= after.beta_star;
    rep.optimal_before = before.optimal_q;
    rep.optimal_after = after.optimal_q;

    // Proof witness: the adjoint pullback of the post-channel optimum is
    // feasible for the pre-channel problem and attains the same type-II value.
    rep.pulled_back = adjoint_apply(meas, after.optimal_q.coords);
    rep.pulled_back_feasible = dot(rep.pulled_back.coords, rho.coords) >= 1 - eps;
    rep.pulled_back_type2 = dot(rep.pulled_back.coords, sigma.coords);
    return rep;
}

MonotonicityReport monotonicity_scan(const State& rho, const State& sigma,
                                     const std::vector<Rational>& eps_grid) {
    MonotonicityReport rep;
    const Rational* prev = nullptr;
    for (const auto& eps : eps_grid) {
        if (!rep.eps_beta.empty() && eps < rep.eps_beta.back().first)
            throw InvalidParameter("monotonicity_scan: epsilon grid not ascending");
        Rational beta = dht(rho, sigma, eps).beta_star;
        if (prev && beta > *prev) rep.monotone = false;
        rep.eps_beta.emplace_back(eps, beta);
        prev = &rep.eps_beta.back().second;
    }
    return rep;
}

ContinuityProbeReport left_continuity_probe(const State& rho, const State& sigma,
                                            const Rational& eps, const Rational& eta,
                                            int npoints) {
    if (eps <= 0 || eps > 1)
        throw InvalidEpsilon("left_continuity_probe: need 0 < eps <= 1");
    if (eta <= 0) throw InvalidParameter("left_continuity_probe: need eta > 0");
    if (npoints < 1) throw InvalidParameter("left_continuity_probe: need npoints >= 1");

    ContinuityProbeReport rep;
    rep.eps = eps;
    rep.eta = eta;
    rep.alpha = dht(rho, sigma, eps).beta_star;
    if (rep.alpha == 1)
        throw DegenerateCase("left_continuity_probe: beta_star(eps) = 1, probe vacuous");

    rep.delta = eps * eta / (1 - rep.alpha);
    Rational reach = rep.delta < eps ? rep.delta : eps;  // keep eps - d' >= 0
    for (int i = 1; i <= npoints; ++i) {
        ContinuityProbeReport::Point pt;
        pt.delta_prime = reach * i / npoints;
        pt.beta = dht(rho, sigma, eps - pt.delta_prime).beta_star;
        pt.gap = pt.beta - rep.alpha;
        pt.ok = pt.gap <= eta;
        if (!pt.ok) rep.pass = false;
        rep.points.push_back(std::move(pt));
    }
    return rep;
}

} // namespace gptcap
