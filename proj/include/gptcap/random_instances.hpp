#ifndef GPTCAP_RANDOM_INSTANCES_HPP
#define GPTCAP_RANDOM_INSTANCES_HPP

#include "gptcap/model.hpp"
#include "gptcap/prng.hpp"

namespace gptcap {

// Seeded exact-rational instance generators. States are convex combinations
// of primal rays with small denominators; effects and measurements are built
// from nonnegative combinations of dual rays rescaled against the unit, so
// every sample satisfies its invariants exactly.

inline State random_state(SplitMix64& rng, const ModelPtr& model) {
    const int k = static_cast<int>(model->primal_rays.size());
    Vec acc = zero_vec(model->dim);
    Rational norm = 0;
    while (norm == 0) {
        acc = zero_vec(model->dim);
        for (int i = 0; i < k; ++i) {
            Rational w = ratio(rng.range(0, 6), 1);
            add_scaled(acc, w, model->primal_rays[i]);
        }
        norm = dot(model->unit, acc);
    }
    return State::make(model, scaled(acc, Rational(1) / norm));
}

// A raw element of K* as a nonnegative combination of dual rays.
inline Vec random_dual_cone_element(SplitMix64& rng, const ModelPtr& model) {
    Vec acc = zero_vec(model->dim);
    for (const auto& h : model->dual_rays) {
        Rational w = ratio(rng.range(0, 4), 1);
        add_scaled(acc, w, h);
    }
    return acc;
}

// Largest lambda with lambda * raw <= u, i.e. 1 / max_g <raw,g>/<u,g>.
// Returns 0 only when raw == 0 on the cone.
inline Rational unit_fit_scale(const Vec& raw, const ModelPtr& model) {
    Rational max_ratio = 0;
    for (const auto& g : model->primal_rays) {
        Rational num = dot(raw, g);
        if (num <= 0) continue;
        Rational r = num / dot(model->unit, g);
        if (r > max_ratio) max_ratio = r;
    }
    return max_ratio == 0 ? Rational(0) : Rational(1) / max_ratio;
}

// Random effect with 0 <= e <= u (possibly 0).
inline Effect random_effect(SplitMix64& rng, const ModelPtr& model) {
    Vec raw = random_dual_cone_element(rng, model);
    Rational fit = unit_fit_scale(raw, model);
    if (fit == 0) return Effect::make(model, zero_vec(model->dim));
    Rational shrink = random_unit_rational(rng, 8);
    return Effect::make(model, scaled(raw, fit * shrink));
}

// Random measurement with `outcomes` effects summing to u: a rescaled batch
// of dual-cone samples plus a probability split of whatever remains below u.
inline Measurement random_measurement(SplitMix64& rng, const ModelPtr& model, int outcomes) {
    if (outcomes < 1) throw InvalidParameter("measurement needs at least one outcome");
    std::vector<Vec> raws(outcomes);
    Vec total = zero_vec(model->dim);
    for (auto& r : raws) {
        r = random_dual_cone_element(rng, model);
        total = add(total, r);
    }
    Rational fit = unit_fit_scale(total, model);
    std::vector<Vec> parts(outcomes);
    Vec used = zero_vec(model->dim);
    if (fit != 0) {
        for (int i = 0; i < outcomes; ++i) parts[i] = scaled(raws[i], fit);
        used = scaled(total, fit);
    } else {
        for (int i = 0; i < outcomes; ++i) parts[i] = zero_vec(model->dim);
    }
    // Split u - used across outcomes with random rational weights.
    Vec rest = sub(model->unit, used);
    std::vector<Rational> w(outcomes);
    Rational wsum = 0;
    for (auto& wi : w) {
        wi = ratio(rng.range(0, 5), 1);
        wsum += wi;
    }
    if (wsum == 0) { w[0] = 1; wsum = 1; }
    for (int i = 0; i < outcomes; ++i) add_scaled(parts[i], w[i] / wsum, rest);
    return Measurement::make(model, std::move(parts));
}

// Random distribution over n letters with small denominators.
inline std::vector<Rational> random_distribution(SplitMix64& rng, int n) {
    std::vector<Rational> p(n);
    Rational total = 0;
    while (total == 0) {
        total = 0;
        for (auto& pi : p) {
            pi = ratio(rng.range(0, 6), 1);
            total += pi;
        }
    }
    for (auto& pi : p) pi /= total;
    return p;
}

} // namespace gptcap

#endif
