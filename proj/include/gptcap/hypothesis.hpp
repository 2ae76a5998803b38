#ifndef GPTCAP_HYPOTHESIS_HPP
#define GPTCAP_HYPOTHESIS_HPP

#include <vector>

#include "gptcap/model.hpp"

namespace gptcap {

// Result of the hypothesis-testing optimization
//   beta_star = min { <q, sigma> : 0 <= q <= u, <q, rho> >= 1 - eps }.
// d_value = -log2(beta_star) is display-only; every comparison elsewhere in
// the library runs on the exact beta scale.
struct HypothesisTestResult {
    Rational beta_star;
    double d_value = 0.0;  // +inf when beta_star == 0
    Effect optimal_q;
    Rational epsilon;
};

HypothesisTestResult dht(const State& rho, const State& sigma, const Rational& eps);

struct DpiReport {
    Rational beta_before;  // on the original pair
    Rational beta_after;   // after the measurement channel
    bool holds = false;    // beta_before <= beta_after
    Effect optimal_before;
    Effect optimal_after;        // classical effect on the outcome model
    Effect pulled_back;          // adjoint pullback of optimal_after
    bool pulled_back_feasible = false;  // <pullback, rho> >= 1-eps
    Rational pulled_back_type2;         // <pullback, sigma>, equals beta_after
};

// Checks the data-processing inequality for one measurement channel and
// carries the adjoint pullback witness used in its proof.
DpiReport dpi_check(const State& rho, const State& sigma, const Rational& eps,
                    const Measurement& meas);

struct MonotonicityReport {
    std::vector<std::pair<Rational, Rational>> eps_beta;
    bool monotone = true;  // beta non-increasing along the ascending grid
};

MonotonicityReport monotonicity_scan(const State& rho, const State& sigma,
                                     const std::vector<Rational>& eps_grid);

struct ContinuityProbeReport {
    Rational eps, eta;
    Rational alpha;  // beta_star(eps)
    Rational delta;  // eps*eta/(1-alpha)
    struct Point {
        Rational delta_prime;
        Rational beta;  // beta_star(eps - delta_prime)
        Rational gap;   // beta - alpha
        bool ok = false;
    };
    std::vector<Point> points;
    bool pass = true;
};

// Left-continuity probe: with alpha = beta_star(eps) and
// delta = eps*eta/(1-alpha), checks beta_star(eps - d') - beta_star(eps) <= eta
// for d' on a grid in (0, min(delta, eps)]. Throws DegenerateCase when
// alpha = 1. Requires 0 < eps <= 1, eta > 0.
ContinuityProbeReport left_continuity_probe(const State& rho, const State& sigma,
                                            const Rational& eps, const Rational& eta,
                                            int npoints = 8);

} // namespace gptcap

#endif
