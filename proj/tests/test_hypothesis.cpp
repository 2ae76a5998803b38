#include <doctest.h>

#include <cmath>
#include <thread>

#include "gptcap/hypothesis.hpp"
#include "gptcap/random_instances.hpp"
#include "oracle.hpp"

using namespace gptcap;

namespace {

Vec rv(std::initializer_list<long long> vals) {
    Vec v;
    for (long long x : vals) v.push_back(Rational(x));
    return v;
}

} // namespace

TEST_CASE("self-distinguishing gives beta = 1 - eps") {
    // q = (1-eps)u is optimal when rho = sigma.
    for (const ModelPtr& m :
         {classical_model(2), classical_model(3), gbit_model(), polygon_model(5)}) {
        State rho = center_state(m);
        for (const Rational& eps : {ratio(1, 4), ratio(1, 2), ratio(3, 4)}) {
            HypothesisTestResult r = dht(rho, rho, eps);
            CHECK(r.beta_star == 1 - eps);
        }
    }
}

TEST_CASE("classical pair (1,0) vs (1/2,1/2)") {
    ModelPtr cl2 = classical_model(2);
    State rho = State::make(cl2, rv({1, 0}));
    State sigma = State::make(cl2, {ratio(1, 2), ratio(1, 2)});

    HypothesisTestResult r0 = dht(rho, sigma, Rational(0));
    CHECK(r0.beta_star == ratio(1, 2));
    CHECK(r0.d_value == doctest::Approx(1.0));

    // Oracle agreement on the same instance.
    auto oracle_beta = oracle::dht_beta(rho, sigma, Rational(0));
    REQUIRE(oracle_beta.has_value());
    CHECK(*oracle_beta == ratio(1, 2));

    HypothesisTestResult rh = dht(rho, sigma, ratio(1, 2));
    CHECK(rh.beta_star == ratio(1, 4));
}

TEST_CASE("gbit corner against center and against the antipode") {
    ModelPtr gbit = gbit_model();
    State corner = State::make(gbit, rv({1, 1, 1}));
    State center = State::make(gbit, rv({1, 0, 0}));
    State antipode = State::make(gbit, rv({1, -1, -1}));

    HypothesisTestResult r1 = dht(corner, center, Rational(0));
    CHECK(r1.beta_star == ratio(1, 2));
    auto oracle_beta = oracle::dht_beta(corner, center, Rational(0));
    REQUIRE(oracle_beta.has_value());
    CHECK(*oracle_beta == ratio(1, 2));

    // Perfectly distinguishable pair: beta = 0, D = +inf.
    HypothesisTestResult r2 = dht(corner, antipode, Rational(0));
    CHECK(r2.beta_star == 0);
    CHECK(std::isinf(r2.d_value));
}

TEST_CASE("dht validates inputs") {
    ModelPtr gbit = gbit_model();
    State corner = State::make(gbit, rv({1, 1, 1}));
    State cl = State::make(classical_model(2), rv({1, 0}));
    CHECK_THROWS_AS(dht(corner, cl, ratio(1, 2)), ModelMismatch);
    CHECK_THROWS_AS(dht(corner, corner, ratio(3, 2)), InvalidEpsilon);
    CHECK_THROWS_AS(dht(corner, corner, ratio(-1, 2)), InvalidEpsilon);
}

TEST_CASE("returned optimal effect is feasible, exactly") {
    SplitMix64 rng(555);
    std::vector<ModelPtr> models = {classical_model(3), gbit_model(), polygon_model(5)};
    for (int i = 0; i < 40; ++i) {
        const ModelPtr& m = models[i % models.size()];
        State rho = random_state(rng, m);
        State sigma = random_state(rng, m);
        Rational eps = random_unit_rational(rng, 10);
        HypothesisTestResult r = dht(rho, sigma, eps);
        for (const auto& g : m->primal_rays) {
            CHECK(dot(r.optimal_q.coords, g) >= 0);
            CHECK(dot(sub(m->unit, r.optimal_q.coords), g) >= 0);
        }
        CHECK(dot(r.optimal_q.coords, rho.coords) >= 1 - eps);
        CHECK(dot(r.optimal_q.coords, sigma.coords) == r.beta_star);
    }
}

TEST_CASE("dht agrees with vertex enumeration on seeded instances") {
    SplitMix64 rng(777);
    std::vector<ModelPtr> models = {classical_model(2), classical_model(3), gbit_model()};
    int done = 0;
    while (done < 50) {
        const ModelPtr& m = models[static_cast<std::size_t>(done) % models.size()];
        State rho = random_state(rng, m);
        State sigma = random_state(rng, m);
        Rational eps = random_unit_rational(rng, 8);
        std::size_t vertices = 0;
        auto oracle_beta = oracle::dht_beta(rho, sigma, eps, &vertices);
        REQUIRE(oracle_beta.has_value());
        CHECK(dht(rho, sigma, eps).beta_star == *oracle_beta);
        ++done;
    }
}

TEST_CASE("DPI holds on 200 seeded instances") {
    SplitMix64 rng(31337);
    std::vector<ModelPtr> models = {classical_model(3), gbit_model(), polygon_model(5)};
    std::vector<Rational> epsilons = {ratio(1, 10), ratio(1, 2), ratio(9, 10)};
    for (int i = 0; i < 200; ++i) {
        const ModelPtr& m = models[i % models.size()];
        State rho = random_state(rng, m);
        State sigma = random_state(rng, m);
        Measurement meas = random_measurement(rng, m, 2 + static_cast<int>(rng.below(3)));
        DpiReport rep = dpi_check(rho, sigma, epsilons[i % epsilons.size()], meas);
        CHECK(rep.holds);
        CHECK(rep.pulled_back_feasible);
        CHECK(rep.pulled_back_type2 == rep.beta_after);
    }
}

TEST_CASE("DPI edge cases") {
    ModelPtr gbit = gbit_model();
    State corner = State::make(gbit, rv({1, 1, 1}));
    State center = State::make(gbit, rv({1, 0, 0}));

    SUBCASE("trivial measurement collapses to -log2(1-eps)") {
        Measurement trivial = Measurement::make(gbit, {gbit->unit});
        DpiReport rep = dpi_check(corner, center, ratio(1, 4), trivial);
        CHECK(rep.holds);
        CHECK(rep.beta_after == ratio(3, 4));
    }
    SUBCASE("fine-grained classical measurement preserves the value") {
        ModelPtr cl3 = classical_model(3);
        std::vector<Vec> indicators;
        for (int i = 0; i < 3; ++i) {
            Vec e = zero_vec(3);
            e[i] = 1;
            indicators.push_back(e);
        }
        Measurement fine = Measurement::make(cl3, std::move(indicators));
        SplitMix64 rng(4);
        State rho = random_state(rng, cl3);
        State sigma = random_state(rng, cl3);
        DpiReport rep = dpi_check(rho, sigma, ratio(1, 3), fine);
        CHECK(rep.holds);
        CHECK(rep.beta_before == rep.beta_after);
    }
    SUBCASE("two-outcome gbit measurement, verified exactly") {
        Measurement ym = Measurement::make(gbit, {{ratio(1, 2), ratio(1, 2), Rational(0)},
                                                  {ratio(1, 2), ratio(-1, 2), Rational(0)}});
        DpiReport rep = dpi_check(corner, center, Rational(0), ym);
        CHECK(rep.holds);
        CHECK(rep.beta_before == ratio(1, 2));
        CHECK(rep.beta_after == ratio(1, 2));  // the y-measurement is optimal here
    }
}

TEST_CASE("monotonicity of beta in epsilon") {
    ModelPtr cl2 = classical_model(2);
    State rho = State::make(cl2, rv({1, 0}));
    State sigma = State::make(cl2, {ratio(1, 2), ratio(1, 2)});

    SUBCASE("rho = rho on any model walks 1-eps") {
        MonotonicityReport rep = monotonicity_scan(rho, rho, {Rational(0), ratio(1, 4), ratio(1, 2)});
        CHECK(rep.monotone);
        CHECK(rep.eps_beta[0].second == 1);
        CHECK(rep.eps_beta[1].second == ratio(3, 4));
        CHECK(rep.eps_beta[2].second == ratio(1, 2));
    }
    SUBCASE("classical pair at {0, 1/2}") {
        MonotonicityReport rep = monotonicity_scan(rho, sigma, {Rational(0), ratio(1, 2)});
        CHECK(rep.monotone);
        CHECK(rep.eps_beta[0].second == ratio(1, 2));
        CHECK(rep.eps_beta[1].second == ratio(1, 4));
    }
    SUBCASE("eps = 1 admits q = 0") {
        MonotonicityReport rep = monotonicity_scan(rho, sigma, {Rational(1)});
        CHECK(rep.eps_beta[0].second == 0);
    }
    SUBCASE("descending grid rejected") {
        CHECK_THROWS_AS(monotonicity_scan(rho, sigma, {ratio(1, 2), Rational(0)}),
                        InvalidParameter);
    }
}

TEST_CASE("left-continuity probe with the explicit delta") {
    ModelPtr cl2 = classical_model(2);
    State rho = State::make(cl2, rv({1, 0}));
    State sigma = State::make(cl2, {ratio(1, 2), ratio(1, 2)});

    SUBCASE("rho = rho: beta(eps) = 1 - eps, delta = eps*eta/eps' arithmetic") {
        // alpha = 1/2, delta = (1/2)(1/8)/(1/2) = 1/8; gap at d' is exactly d'.
        ContinuityProbeReport rep = left_continuity_probe(rho, rho, ratio(1, 2), ratio(1, 8), 4);
        CHECK(rep.alpha == ratio(1, 2));
        CHECK(rep.delta == ratio(1, 8));
        CHECK(rep.pass);
        for (const auto& pt : rep.points) CHECK(pt.gap == pt.delta_prime);
    }
    SUBCASE("classical pair: beta(eps) = (1-eps)/2") {
        ContinuityProbeReport rep = left_continuity_probe(rho, sigma, ratio(1, 2), ratio(1, 4), 6);
        CHECK(rep.alpha == ratio(1, 4));
        CHECK(rep.pass);
    }
    SUBCASE("delta exceeding eps clips the probe grid") {
        // eta large: delta = eps*eta/(1-alpha) > eps; largest probe point is eps.
        ContinuityProbeReport rep = left_continuity_probe(rho, sigma, ratio(1, 2), Rational(4), 4);
        CHECK(rep.points.back().delta_prime == ratio(1, 2));
        CHECK(rep.pass);
    }
    SUBCASE("tiny eps stays non-degenerate: q = (1-eps)u keeps alpha below 1") {
        ContinuityProbeReport rep =
            left_continuity_probe(rho, rho, ratio(1, 1000000000), ratio(1, 8), 2);
        CHECK(rep.alpha < 1);
        CHECK(rep.pass);
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(left_continuity_probe(rho, sigma, Rational(0), ratio(1, 8), 2),
                        InvalidEpsilon);
        CHECK_THROWS_AS(left_continuity_probe(rho, sigma, ratio(1, 2), Rational(0), 2),
                        InvalidParameter);
    }
}

TEST_CASE("probe bound holds on seeded instances") {
    SplitMix64 rng(90210);
    std::vector<ModelPtr> models = {classical_model(3), gbit_model(), polygon_model(5)};
    int done = 0;
    while (done < 20) {
        const ModelPtr& m = models[static_cast<std::size_t>(done) % models.size()];
        State rho = random_state(rng, m);
        State sigma = random_state(rng, m);
        Rational eps = ratio(1 + static_cast<long long>(rng.below(8)), 10);
        Rational eta = ratio(1, 1 + static_cast<long long>(rng.below(8)));
        Rational alpha = dht(rho, sigma, eps).beta_star;
        if (alpha == 1) continue;
        ContinuityProbeReport rep = left_continuity_probe(rho, sigma, eps, eta, 5);
        CHECK(rep.pass);
        ++done;
    }
}

TEST_CASE("concurrent dht calls on shared immutable models agree") {
    ModelPtr gbit = gbit_model();
    State corner = State::make(gbit, {Rational(1), Rational(1), Rational(1)});
    State center = State::make(gbit, {Rational(1), Rational(0), Rational(0)});
    std::vector<Rational> betas(64);
    std::vector<std::thread> pool;
    for (int w = 0; w < 8; ++w) {
        pool.emplace_back([&, w] {
            for (int i = 0; i < 8; ++i) {
                Rational eps = ratio((w * 8 + i) % 4, 8);
                betas[w * 8 + i] = dht(corner, center, eps).beta_star;
            }
        });
    }
    for (auto& t : pool) t.join();
    for (int k = 0; k < 64; ++k) {
        Rational eps = ratio(k % 4, 8);
        CHECK(betas[k] == dht(corner, center, eps).beta_star);
    }
}

TEST_CASE("zero-beta detection is exact") {
    // d_value is +inf exactly when the rational optimum is 0.
    ModelPtr gbit = gbit_model();
    State corner = State::make(gbit, rv({1, 1, 1}));
    State antipode = State::make(gbit, rv({1, -1, -1}));
    State near = State::make(gbit, {Rational(1), ratio(-99, 100), ratio(-99, 100)});

    CHECK(std::isinf(dht(corner, antipode, Rational(0)).d_value));
    HypothesisTestResult r = dht(corner, near, Rational(0));
    CHECK(r.beta_star > 0);
    CHECK_FALSE(std::isinf(r.d_value));
}
