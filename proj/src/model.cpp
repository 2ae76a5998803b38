#include "gptcap/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace gptcap {

bool same_model(const ModelPtr& a, const ModelPtr& b) {
    if (!a || !b) return false;
    if (a == b) return true;
    return a->dim == b->dim && a->primal_rays == b->primal_rays &&
           a->dual_rays == b->dual_rays && a->unit == b->unit;
}

ValidationReport validate_model(const ConeModel& m, int polar_trials,
                                std::uint64_t polar_seed) {
    ValidationReport rep;
    auto fail = [&rep](const std::string& why) {
        rep.pass = false;
        rep.first_violation = why;
        return rep;
    };

    if (m.dim <= 0) return fail("dimension must be positive");
    if (m.primal_rays.empty()) return fail("no primal rays");
    if (m.dual_rays.empty()) return fail("no dual rays");
    if (static_cast<int>(m.unit.size()) != m.dim) return fail("unit has wrong dimension");
    for (const auto& g : m.primal_rays)
        if (static_cast<int>(g.size()) != m.dim) return fail("primal ray has wrong dimension");
    for (const auto& h : m.dual_rays)
        if (static_cast<int>(h.size()) != m.dim) return fail("dual ray has wrong dimension");
    for (const auto& g : m.primal_rays)
        if (is_zero(g)) return fail("zero primal ray");
    for (const auto& h : m.dual_rays)
        if (is_zero(h)) return fail("zero dual ray");

    for (const auto& h : m.dual_rays)
        for (const auto& g : m.primal_rays)
            if (dot(h, g) < 0)
                return fail("dual ray " + vec_str(h) + " negative on primal ray " + vec_str(g));

    // u interior to K*: strictly positive on every (nonzero) extreme ray of K.
    for (const auto& g : m.primal_rays)
        if (dot(m.unit, g) <= 0) return fail("unit not interior: <u," + vec_str(g) + "> <= 0");

    if (!cone_membership(m.unit, m.dual_rays).inside)
        return fail("unit not in cone(dual_rays)");

    // K full-dimensional (cone condition: nonempty interior).
    if (rank(m.primal_rays) != m.dim) return fail("primal rays do not span V");

    // Pointedness: no nonzero nonnegative combination of rays sums to zero.
    {
        LinearProgram lp;
        const int k = static_cast<int>(m.primal_rays.size());
        lp.objective = zero_vec(k);
        for (int d = 0; d < m.dim; ++d) {
            LinRow row;
            row.coeffs.resize(k);
            for (int i = 0; i < k; ++i) row.coeffs[i] = m.primal_rays[i][d];
            row.sense = Sense::Equal;
            row.rhs = 0;
            lp.rows.push_back(std::move(row));
        }
        LinRow norm;
        norm.coeffs.assign(k, Rational(1));
        norm.sense = Sense::Equal;
        norm.rhs = 1;
        lp.rows.push_back(std::move(norm));
        lp.lower.assign(k, Rational(0));
        if (solve_lp(lp).status != LPStatus::Infeasible)
            return fail("cone not pointed: K intersects -K nontrivially");
    }

    if (polar_trials > 0) {
        rep.polar = polar_consistency_check(m.primal_rays, m.dual_rays, m.dim,
                                            polar_trials, polar_seed);
        if (!rep.polar.pass)
            return fail("primal/dual ray lists are not mutually polar (sampled counterexample " +
                        vec_str(rep.polar.first_counterexample->vector) + ")");
    }
    return rep;
}

ModelPtr make_model(ConeModel m, int polar_trials, std::uint64_t polar_seed) {
    ValidationReport rep = validate_model(m, polar_trials, polar_seed);
    if (!rep.pass) throw InvalidModel(m.name + ": " + rep.first_violation);
    return std::make_shared<const ConeModel>(std::move(m));
}

PolarReport polar_consistency_check(const ConeModel& m, int trials, std::uint64_t seed) {
    return polar_consistency_check(m.primal_rays, m.dual_rays, m.dim, trials, seed);
}

ModelPtr classical_model(int n) {
    if (n < 1) throw InvalidParameter("classical model needs at least one outcome");
    static std::mutex mu;
    static std::map<int, ModelPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    ConeModel m;
    m.name = "classical" + std::to_string(n);
    m.dim = n;
    for (int i = 0; i < n; ++i) {
        Vec e = zero_vec(n);
        e[i] = 1;
        m.primal_rays.push_back(e);
        m.dual_rays.push_back(e);
    }
    m.unit.assign(n, Rational(1));
    ModelPtr built = make_model(std::move(m), 0);
    cache.emplace(n, built);
    return built;
}

ModelPtr gbit_model() {
    ConeModel m;
    m.name = "gbit";
    m.dim = 3;
    for (int sy : {1, -1})
        for (int sz : {1, -1})
            m.primal_rays.push_back({Rational(1), Rational(sy), Rational(sz)});
    m.dual_rays = {{Rational(1), Rational(1), Rational(0)},
                   {Rational(1), Rational(-1), Rational(0)},
                   {Rational(1), Rational(0), Rational(1)},
                   {Rational(1), Rational(0), Rational(-1)}};
    m.unit = {Rational(1), Rational(0), Rational(0)};
    return make_model(std::move(m), 0);
}

namespace {

// Best rational approximation to x with denominator <= max_den, by
// continued-fraction convergents. Construction-time helper only; the
// resulting model is validated exactly.
Rational approx_rational(double x, long long max_den) {
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        long long a = static_cast<long long>(fl);
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = v - fl;
        if (frac < 1e-12) break;
        v = 1.0 / frac;
    }
    return ratio(p1, q1 == 0 ? 1 : q1);
}

} // namespace

ModelPtr polygon_model(int sides) {
    if (sides < 3) throw InvalidParameter("polygon model needs at least 3 sides");
    if (sides > 16) throw InvalidParameter("polygon model capped at 16 sides");

    // Rational points on the unit circle via the tangent half-angle map
    // t |-> ((1-t^2)/(1+t^2), 2t/(1+t^2)). The vertex near angle pi (even n)
    // is (-1, 0) exactly. Coarse t keeps coordinates small; the resulting
    // polygon is combinatorially regular, which is all the models need.
    std::vector<std::pair<Rational, Rational>> pts;
    const double pi = 3.14159265358979323846;
    const long long max_den = sides <= 8 ? 6 : 16;
    for (int k = 0; k < sides; ++k) {
        double theta = 2.0 * pi * k / sides;
        if (theta > pi) theta -= 2.0 * pi;
        if (sides % 2 == 0 && k == sides / 2) {
            pts.emplace_back(Rational(-1), Rational(0));
            continue;
        }
        Rational t = approx_rational(std::tan(theta / 2.0), max_den);
        Rational t2 = t * t;
        pts.emplace_back((1 - t2) / (1 + t2), 2 * t / (1 + t2));
    }

    ConeModel m;
    m.name = "polygon" + std::to_string(sides);
    m.dim = 3;
    for (const auto& [x, y] : pts) m.primal_rays.push_back({Rational(1), x, y});

    // Facet through consecutive vertices p, q with the origin strictly inside:
    // normal (c, a, b), a(x-px) + b(y-py) = 0 on the edge, c = -(a px + b py) > 0.
    // Rescaled to a primitive integer vector.
    for (int k = 0; k < sides; ++k) {
        const auto& [px, py] = pts[k];
        const auto& [qx, qy] = pts[(k + 1) % sides];
        Rational a = -(qy - py);
        Rational b = qx - px;
        Rational c = -(a * px + b * py);
        if (c == 0) throw std::logic_error("polygon facet through the origin");
        if (c < 0) { a = -a; b = -b; c = -c; }
        Vec h = {c, a, b};
        boost::multiprecision::mpz_int lcm = 1, gcd = 0;
        for (const auto& x : h) lcm = boost::multiprecision::lcm(lcm, denominator(x));
        for (auto& x : h) x *= Rational(lcm);
        for (const auto& x : h) gcd = boost::multiprecision::gcd(gcd, numerator(x));
        if (gcd > 1)
            for (auto& x : h) x /= Rational(gcd);
        m.dual_rays.push_back(std::move(h));
    }
    m.unit = {Rational(1), Rational(0), Rational(0)};
    return make_model(std::move(m), 0);
}

State State::make(ModelPtr model, Vec coords) {
    if (!model) throw InvalidState("state without model");
    if (static_cast<int>(coords.size()) != model->dim)
        throw DimensionMismatch("state coordinates have wrong dimension");
    for (const auto& h : model->dual_rays)
        if (dot(h, coords) < 0)
            throw InvalidState("state outside K: negative against dual ray " + vec_str(h));
    if (dot(model->unit, coords) != 1)
        throw InvalidState("state not normalized: <u,rho> = " +
                           rat_str(dot(model->unit, coords)));
    return State{std::move(model), std::move(coords)};
}

Effect Effect::make(ModelPtr model, Vec coords) {
    if (!model) throw InvalidEffect("effect without model");
    if (static_cast<int>(coords.size()) != model->dim)
        throw DimensionMismatch("effect coordinates have wrong dimension");
    for (const auto& g : model->primal_rays) {
        if (dot(coords, g) < 0)
            throw InvalidEffect("effect not in K*: negative on primal ray " + vec_str(g));
        if (dot(sub(model->unit, coords), g) < 0)
            throw InvalidEffect("effect exceeds unit on primal ray " + vec_str(g));
    }
    return Effect{std::move(model), std::move(coords)};
}

Measurement Measurement::make(ModelPtr model, std::vector<Vec> effect_coords) {
    if (effect_coords.empty()) throw InvalidMeasurement("measurement with no outcomes");
    Vec total = zero_vec(model->dim);
    std::vector<Effect> effects;
    effects.reserve(effect_coords.size());
    for (auto& c : effect_coords) {
        total = add(total, c);
        effects.push_back(Effect::make(model, std::move(c)));
    }
    if (total != model->unit)
        throw InvalidMeasurement("effects sum to " + vec_str(total) + ", not the unit");
    return Measurement{std::move(model), std::move(effects)};
}

bool effect_leq(const Effect& e, const Effect& f) {
    if (!same_model(e.model, f.model)) throw ModelMismatch("effect_leq across models");
    Vec diff = sub(f.coords, e.coords);
    for (const auto& g : e.model->primal_rays)
        if (dot(diff, g) < 0) return false;
    return true;
}

Rational probability(const Effect& e, const State& rho) {
    if (!same_model(e.model, rho.model)) throw ModelMismatch("effect/state model mismatch");
    return dot(e.coords, rho.coords);
}

State measurement_channel_apply(const Measurement& meas, const State& rho) {
    if (!same_model(meas.model, rho.model))
        throw ModelMismatch("measurement applied to a state of another model");
    Vec probs(meas.effects.size());
    for (std::size_t j = 0; j < meas.effects.size(); ++j)
        probs[j] = dot(meas.effects[j].coords, rho.coords);
    return State::make(classical_model(meas.outcomes()), std::move(probs));
}

Effect adjoint_apply(const Measurement& meas, const Vec& classical_effect) {
    if (classical_effect.size() != meas.effects.size())
        throw DimensionMismatch("classical effect length differs from outcome count");
    for (const auto& f : classical_effect)
        if (f < 0 || f > 1)
            throw InvalidEffect("classical effect entry " + rat_str(f) + " outside [0,1]");
    Vec acc = zero_vec(meas.model->dim);
    for (std::size_t j = 0; j < meas.effects.size(); ++j)
        add_scaled(acc, classical_effect[j], meas.effects[j].coords);
    return Effect::make(meas.model, std::move(acc));
}

ModelPtr compose_with_classical(int n, const ModelPtr& m) {
    if (n < 1) throw InvalidParameter("classical factor needs at least one outcome");
    ConeModel comp;
    comp.name = "cl" + std::to_string(n) + "x" + m->name;
    comp.dim = n * m->dim;
    for (int x = 0; x < n; ++x) {
        Vec cx = zero_vec(n);
        cx[x] = 1;
        for (const auto& g : m->primal_rays) comp.primal_rays.push_back(kron(cx, g));
        for (const auto& h : m->dual_rays) comp.dual_rays.push_back(kron(cx, h));
    }
    Vec ones(n, Rational(1));
    comp.unit = kron(ones, m->unit);
    // Polar sampling is left to callers/tests: a classical (x) K composite of
    // an exactly described base passes it, but bases that are themselves
    // minimal tensor products list only a subcone of the true dual.
    return make_model(std::move(comp), 0);
}

Vec EnsembleState::joint_coords() const {
    Vec coords = zero_vec(composite->dim);
    const int d = base->dim;
    for (const auto& term : terms) {
        if (term.index < 0 || term.index >= alphabet_size)
            throw IndexOutOfRange("ensemble term index out of range");
        for (int i = 0; i < d; ++i) coords[term.index * d + i] += term.weight * term.coords[i];
    }
    return coords;
}

State EnsembleState::joint_state() const { return State::make(composite, joint_coords()); }

State EnsembleState::marginal_classical() const {
    Vec p = zero_vec(alphabet_size);
    for (const auto& term : terms) p[term.index] += term.weight;
    return State::make(classical_model(alphabet_size), std::move(p));
}

State EnsembleState::marginal_general() const {
    Vec acc = zero_vec(base->dim);
    for (const auto& term : terms) add_scaled(acc, term.weight, term.coords);
    return State::make(base, std::move(acc));
}

State EnsembleState::product_of_marginals() const {
    Vec p = zero_vec(alphabet_size);
    for (const auto& term : terms) p[term.index] += term.weight;
    Vec b = marginal_general().coords;
    return State::make(composite, kron(p, b));
}

void check_distribution(const std::vector<Rational>& P, int expected_size) {
    if (static_cast<int>(P.size()) != expected_size)
        throw InvalidDistribution("distribution has " + std::to_string(P.size()) +
                                  " entries, expected " + std::to_string(expected_size));
    Rational total = 0;
    for (const auto& p : P) {
        if (p < 0) throw InvalidDistribution("negative probability " + rat_str(p));
        total += p;
    }
    if (total != 1) throw InvalidDistribution("probabilities sum to " + rat_str(total));
}

EnsembleState build_pi_ab(const ClassicalToGPTChannel& channel,
                          const std::vector<Rational>& P) {
    return build_pi_ab(channel, P, compose_with_classical(channel.size(), channel.model));
}

EnsembleState build_pi_ab(const ClassicalToGPTChannel& channel,
                          const std::vector<Rational>& P, ModelPtr composite) {
    check_distribution(P, channel.size());
    if (composite->dim != channel.size() * channel.model->dim)
        throw ModelMismatch("composite dimension does not match |X| * dim");
    EnsembleState ens;
    ens.base = channel.model;
    ens.alphabet_size = channel.size();
    ens.composite = std::move(composite);
    for (int x = 0; x < channel.size(); ++x)
        ens.terms.push_back({P[x], x, channel.outputs[x].coords});
    return ens;
}

State corner_state(const ModelPtr& m, int ray_index) {
    if (ray_index < 0 || ray_index >= static_cast<int>(m->primal_rays.size()))
        throw IndexOutOfRange("ray index out of range");
    const Vec& g = m->primal_rays[ray_index];
    return State::make(m, scaled(g, Rational(1) / dot(m->unit, g)));
}

State center_state(const ModelPtr& m) {
    Vec acc = zero_vec(m->dim);
    for (const auto& g : m->primal_rays) add_scaled(acc, Rational(1), g);
    return State::make(m, scaled(acc, Rational(1) / dot(m->unit, acc)));
}

} // namespace gptcap
