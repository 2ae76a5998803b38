#ifndef GPTCAP_MODEL_HPP
#define GPTCAP_MODEL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gptcap/lp.hpp"

namespace gptcap {

// A polyhedral GPT system: the cone K as its extreme rays, the dual cone K*
// as its extreme rays (equivalently the facet normals of K), and the unit
// effect u. Both descriptions are caller-supplied and cross-validated rather
// than derived from each other.
struct ConeModel {
    std::string name;
    int dim = 0;
    std::vector<Vec> primal_rays;
    std::vector<Vec> dual_rays;
    Vec unit;
};

using ModelPtr = std::shared_ptr<const ConeModel>;

// Pointer identity first, structural equality as fallback so that composites
// built twice still interoperate.
bool same_model(const ModelPtr& a, const ModelPtr& b);

struct ValidationReport {
    bool pass = true;
    std::string first_violation;  // empty when pass
    PolarReport polar;
};

// Checks every ConeModel invariant exactly: dimensions, pairwise
// nonnegativity of dual against primal rays, unit interior to K*, unit in
// cone(dual_rays), pointedness (LP), full dimensionality, and a seeded polar
// consistency sample. Pass polar_trials = 0 to skip the sampling (used for
// tensor-product models, whose listed dual rays deliberately describe only
// the minimal composite's subcone; see the asymptotic module).
ValidationReport validate_model(const ConeModel& m, int polar_trials = 64,
                                std::uint64_t polar_seed = 1);

// validate_model, throwing InvalidModel naming the first violated invariant.
ModelPtr make_model(ConeModel m, int polar_trials = 64, std::uint64_t polar_seed = 1);

// Polar sampling against a whole model.
PolarReport polar_consistency_check(const ConeModel& m, int trials, std::uint64_t seed);

// Built-in library. classical_model(n) is the probability n-simplex,
// gbit_model() the square state space, polygon_model(n) an n-gon with
// rational vertices on the unit circle (combinatorially the regular polygon;
// exact regularity has no rational coordinates).
ModelPtr classical_model(int n);
ModelPtr gbit_model();
ModelPtr polygon_model(int sides);

struct State {
    ModelPtr model;
    Vec coords;

    // Checks <h,coords> >= 0 for every dual ray and <unit,coords> = 1.
    static State make(ModelPtr model, Vec coords);
};

struct Effect {
    ModelPtr model;
    Vec coords;

    // Checks 0 <= e <= u against every primal ray.
    static Effect make(ModelPtr model, Vec coords);
};

struct Measurement {
    ModelPtr model;
    std::vector<Effect> effects;  // outcome j = effects[j]

    static Measurement make(ModelPtr model, std::vector<Vec> effect_coords);
    int outcomes() const { return static_cast<int>(effects.size()); }
};

// e <= f in the dual-cone order: <f - e, g> >= 0 for every primal ray g.
bool effect_leq(const Effect& e, const Effect& f);

Rational probability(const Effect& e, const State& rho);

// The measurement channel: rho |-> sum_j <e_j, rho> |j><j| as a state of the
// classical |J|-outcome model.
State measurement_channel_apply(const Measurement& meas, const State& rho);

// Adjoint of the measurement channel: pulls a classical effect f back to
// sum_j f_j e_j. f must satisfy 0 <= f_j <= 1.
Effect adjoint_apply(const Measurement& meas, const Vec& classical_effect);

// Composite of an n-outcome classical system with m: primal rays
// {c_x (x) g}, dual rays {c_x (x) h}, unit u_cl (x) u. Coordinates are
// x-major: index x*dim + i.
ModelPtr compose_with_classical(int n, const ModelPtr& m);

// Classical alphabet to GPT states, the channel x |-> sigma_x.
struct ClassicalToGPTChannel {
    std::string name;
    std::vector<std::string> alphabet;
    ModelPtr model;
    std::vector<State> outputs;

    int size() const { return static_cast<int>(alphabet.size()); }
};

struct EnsembleTerm {
    Rational weight;
    int index;   // classical letter
    Vec coords;  // component state on the base model
};

// A classical (x) GPT ensemble sum_x p_x |x><x| (x) rho_x, stored as its
// decomposition. Repeated classical indices are allowed (random codebooks
// repeat codewords) and merge only in the classical marginal.
struct EnsembleState {
    ModelPtr base;
    ModelPtr composite;
    int alphabet_size = 0;
    std::vector<EnsembleTerm> terms;

    Vec joint_coords() const;
    State joint_state() const;
    State marginal_classical() const;  // on classical_model(alphabet_size)
    State marginal_general() const;    // on base
    State product_of_marginals() const;  // pi^A (x) pi^B on composite
};

// The ensemble pi^{AB}: weights P over the channel alphabet, on the
// classical (x) model composite. The second overload reuses a composite
// built once by the caller (it must equal compose_with_classical(|X|, model)).
EnsembleState build_pi_ab(const ClassicalToGPTChannel& channel,
                          const std::vector<Rational>& P);
EnsembleState build_pi_ab(const ClassicalToGPTChannel& channel,
                          const std::vector<Rational>& P, ModelPtr composite);

// Convenience states.
State corner_state(const ModelPtr& m, int ray_index);  // normalized primal ray
State center_state(const ModelPtr& m);                 // normalized ray average

void check_distribution(const std::vector<Rational>& P, int expected_size);

} // namespace gptcap

#endif
