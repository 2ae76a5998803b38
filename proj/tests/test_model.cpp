#include <doctest.h>

#include "gptcap/model.hpp"
#include "gptcap/random_instances.hpp"

using namespace gptcap;

namespace {

Vec rv(std::initializer_list<long long> vals) {
    Vec v;
    for (long long x : vals) v.push_back(Rational(x));
    return v;
}

State gbit_state(const ModelPtr& m, long long y, long long z) {
    return State::make(m, {Rational(1), Rational(y), Rational(z)});
}

} // namespace

TEST_CASE("library models validate") {
    for (const ModelPtr& m : {classical_model(2), classical_model(3), gbit_model(),
                              polygon_model(5), polygon_model(6), polygon_model(7)}) {
        ValidationReport rep = validate_model(*m, 64, 11);
        CHECK(rep.pass);
        CHECK(rep.polar.failures == 0);
    }
}

TEST_CASE("invalid models are rejected with the violated invariant named") {
    ConeModel m;
    m.name = "broken";
    m.dim = 3;
    m.primal_rays = {rv({1, 1, 1}), rv({1, 1, -1}), rv({1, -1, 1}), rv({1, -1, -1})};
    m.dual_rays = {rv({1, 1, 0}), rv({1, -1, 0}), rv({1, 0, 1}), rv({1, 0, -1})};

    SUBCASE("unit orthogonal to a primal ray is not interior") {
        m.unit = rv({1, 1, 0});  // <u, (1,-1,z)> = 0
        ValidationReport rep = validate_model(m);
        CHECK_FALSE(rep.pass);
        CHECK(rep.first_violation.find("unit not interior") != std::string::npos);
        CHECK_THROWS_AS(make_model(m), InvalidModel);
    }
    SUBCASE("negative pairing detected") {
        m.unit = rv({1, 0, 0});
        m.dual_rays.push_back(rv({0, 1, 0}));
        CHECK_FALSE(validate_model(m).pass);
    }
    SUBCASE("unpointed cone detected") {
        ConeModel line;
        line.name = "line";
        line.dim = 2;
        line.primal_rays = {rv({1, 1}), rv({-1, -1}), rv({1, 0})};
        line.dual_rays = {rv({1, 0})};
        line.unit = rv({1, 0});
        ValidationReport rep = validate_model(line);
        CHECK_FALSE(rep.pass);
    }
    SUBCASE("deleted facet caught by polar sampling") {
        m.unit = rv({1, 0, 0});
        m.dual_rays.pop_back();
        ValidationReport rep = validate_model(m, 300, 9);
        CHECK_FALSE(rep.pass);
        CHECK(rep.first_violation.find("polar") != std::string::npos);
    }
}

TEST_CASE("state and effect invariants enforced") {
    ModelPtr gbit = gbit_model();
    CHECK_THROWS_AS(State::make(gbit, rv({1, 2, 0})), InvalidState);     // outside square
    CHECK_THROWS_AS(State::make(gbit, rv({2, 0, 0})), InvalidState);     // unnormalized
    CHECK_THROWS_AS(Effect::make(gbit, rv({1, 1, 1})), InvalidEffect);   // exceeds u on a corner
    CHECK_THROWS_AS(Effect::make(gbit, rv({-1, 0, 0})), InvalidEffect);  // below zero
    CHECK_NOTHROW(Effect::make(gbit, {ratio(1, 2), ratio(1, 2), Rational(0)}));
}

TEST_CASE("effect order") {
    ModelPtr gbit = gbit_model();
    Effect zero = Effect::make(gbit, rv({0, 0, 0}));
    Effect unit = Effect::make(gbit, gbit->unit);
    CHECK(effect_leq(zero, unit));
    CHECK_FALSE(effect_leq(unit, zero));

    // f - e = (1/4)(1,-1,0), a dual ray, so e <= f.
    Effect e = Effect::make(gbit, {ratio(1, 2), ratio(1, 2), Rational(0)});
    Effect f = Effect::make(gbit, {ratio(3, 4), ratio(1, 4), Rational(0)});
    CHECK(effect_leq(e, f));
    CHECK_FALSE(effect_leq(f, e));

    ModelPtr cl2 = classical_model(2);
    CHECK_THROWS_AS(effect_leq(zero, Effect::make(cl2, rv({0, 0}))), ModelMismatch);
}

TEST_CASE("measurement channel on the gbit") {
    ModelPtr gbit = gbit_model();
    Measurement ym = Measurement::make(
        gbit, {{ratio(1, 2), ratio(1, 2), Rational(0)}, {ratio(1, 2), ratio(-1, 2), Rational(0)}});

    SUBCASE("corner gives a deterministic outcome") {
        State out = measurement_channel_apply(ym, gbit_state(gbit, 1, 1));
        CHECK(out.coords == rv({1, 0}));
    }
    SUBCASE("center gives the uniform distribution") {
        State out = measurement_channel_apply(ym, center_state(gbit));
        CHECK(out.coords == Vec{ratio(1, 2), ratio(1, 2)});
    }
    SUBCASE("trivial measurement gives the one-point distribution") {
        Measurement trivial = Measurement::make(gbit, {gbit->unit});
        State out = measurement_channel_apply(trivial, gbit_state(gbit, -1, 1));
        CHECK(out.coords == rv({1}));
    }
}

TEST_CASE("adjoint examples") {
    ModelPtr gbit = gbit_model();
    Measurement ym = Measurement::make(
        gbit, {{ratio(1, 2), ratio(1, 2), Rational(0)}, {ratio(1, 2), ratio(-1, 2), Rational(0)}});

    CHECK(adjoint_apply(ym, rv({1, 1})).coords == gbit->unit);            // f = classical unit
    CHECK(adjoint_apply(ym, rv({0, 1})).coords == ym.effects[1].coords);  // outcome indicator
    CHECK(adjoint_apply(ym, Vec{ratio(1, 2), ratio(1, 2)}).coords ==
          Vec{ratio(1, 2), Rational(0), Rational(0)});
    CHECK_THROWS_AS(adjoint_apply(ym, rv({2, 0})), InvalidEffect);
}

TEST_CASE("adjoint identity <E'(f), rho> = <f, E(rho)> on 200 random quadruples") {
    std::vector<ModelPtr> models = {classical_model(3), gbit_model(), polygon_model(5)};
    SplitMix64 rng(314);
    for (int i = 0; i < 200; ++i) {
        const ModelPtr& m = models[i % models.size()];
        State rho = random_state(rng, m);
        int outcomes = 2 + static_cast<int>(rng.below(3));
        Measurement meas = random_measurement(rng, m, outcomes);
        Vec f(outcomes);
        for (auto& fj : f) fj = random_unit_rational(rng, 6);

        Effect pulled = adjoint_apply(meas, f);
        State pushed = measurement_channel_apply(meas, rho);
        CHECK(dot(pulled.coords, rho.coords) == dot(f, pushed.coords));

        // Measurement-channel outputs are exact probability vectors.
        Rational total = 0;
        for (const auto& p : pushed.coords) {
            CHECK(p >= 0);
            total += p;
        }
        CHECK(total == 1);
    }
}

TEST_CASE("classical composite structure") {
    SUBCASE("n = 1 is isomorphic to the base") {
        ModelPtr gbit = gbit_model();
        ModelPtr comp = compose_with_classical(1, gbit);
        CHECK(comp->dim == gbit->dim);
        CHECK(comp->primal_rays == gbit->primal_rays);
        CHECK(comp->unit == gbit->unit);
    }
    SUBCASE("classical (x) classical is the orthant") {
        ModelPtr comp = compose_with_classical(2, classical_model(2));
        CHECK(comp->dim == 4);
        CHECK(comp->primal_rays.size() == 4);
        CHECK(validate_model(*comp, 64, 17).pass);
    }
    SUBCASE("classical (x) gbit counts") {
        ModelPtr comp = compose_with_classical(2, gbit_model());
        CHECK(comp->dim == 6);
        CHECK(comp->primal_rays.size() == 8);
        CHECK(comp->dual_rays.size() == 8);
        CHECK(validate_model(*comp, 64, 17).pass);
    }
}

TEST_CASE("ensembles and marginals") {
    ModelPtr gbit = gbit_model();
    ClassicalToGPTChannel ch;
    ch.name = "corners";
    ch.model = gbit;
    ch.alphabet = {"0", "1"};
    ch.outputs = {gbit_state(gbit, 1, 1), gbit_state(gbit, -1, -1)};

    SUBCASE("point mass is a single-term ensemble") {
        EnsembleState ens = build_pi_ab(ch, {Rational(1), Rational(0)});
        CHECK(ens.marginal_classical().coords == rv({1, 0}));
        CHECK(ens.marginal_general().coords == rv({1, 1, 1}));
    }
    SUBCASE("uniform two-corner ensemble averages to the center") {
        EnsembleState ens = build_pi_ab(ch, {ratio(1, 2), ratio(1, 2)});
        CHECK(ens.marginal_classical().coords == Vec{ratio(1, 2), ratio(1, 2)});
        CHECK(ens.marginal_general().coords == rv({1, 0, 0}));
        CHECK(ens.joint_state().model->dim == 6);
    }
    SUBCASE("duplicate classical indices merge in the classical marginal") {
        EnsembleState ens = build_pi_ab(ch, {ratio(1, 2), ratio(1, 2)});
        ens.terms[0].weight = ratio(1, 4);
        ens.terms.push_back({ratio(1, 4), 0, ch.outputs[1].coords});
        State cl = ens.marginal_classical();
        CHECK(cl.coords == Vec{ratio(1, 2), ratio(1, 2)});
    }
    SUBCASE("uniform identity-bit ensemble has the diagonal joint") {
        ClassicalToGPTChannel idbit;
        idbit.model = classical_model(2);
        idbit.alphabet = {"0", "1"};
        idbit.outputs = {State::make(idbit.model, rv({1, 0})),
                         State::make(idbit.model, rv({0, 1}))};
        EnsembleState ens = build_pi_ab(idbit, {ratio(1, 2), ratio(1, 2)});
        CHECK(ens.joint_coords() == Vec{ratio(1, 2), Rational(0), Rational(0), ratio(1, 2)});
        CHECK(ens.product_of_marginals().coords ==
              Vec{ratio(1, 4), ratio(1, 4), ratio(1, 4), ratio(1, 4)});
    }
    SUBCASE("bad distributions rejected") {
        CHECK_THROWS_AS(build_pi_ab(ch, {ratio(1, 2), ratio(1, 4)}), InvalidDistribution);
        CHECK_THROWS_AS(build_pi_ab(ch, {ratio(3, 2), ratio(-1, 2)}), InvalidDistribution);
    }
}

TEST_CASE("marginal consistency against product measurements") {
    // sum_j <e_i (x) e_j, pi> = <e_i, pi^A> and symmetrically, for random
    // ensembles and random product measurements.
    ModelPtr gbit = gbit_model();
    SplitMix64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        ClassicalToGPTChannel ch;
        ch.model = gbit;
        int letters = 2 + static_cast<int>(rng.below(2));
        for (int x = 0; x < letters; ++x) {
            ch.alphabet.push_back(std::to_string(x));
            ch.outputs.push_back(random_state(rng, gbit));
        }
        EnsembleState ens = build_pi_ab(ch, random_distribution(rng, letters));
        Vec joint = ens.joint_coords();
        State margA = ens.marginal_classical();
        State margB = ens.marginal_general();

        Measurement measA = random_measurement(rng, classical_model(letters),
                                               2 + static_cast<int>(rng.below(2)));
        Measurement measB = random_measurement(rng, gbit, 2 + static_cast<int>(rng.below(3)));

        for (const auto& ea : measA.effects) {
            Rational lhs = 0;
            for (const auto& eb : measB.effects) lhs += dot(kron(ea.coords, eb.coords), joint);
            CHECK(lhs == dot(ea.coords, margA.coords));
        }
        for (const auto& eb : measB.effects) {
            Rational lhs = 0;
            for (const auto& ea : measA.effects) lhs += dot(kron(ea.coords, eb.coords), joint);
            CHECK(lhs == dot(eb.coords, margB.coords));
        }
    }
}
