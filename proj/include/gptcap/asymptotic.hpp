#ifndef GPTCAP_ASYMPTOTIC_HPP
#define GPTCAP_ASYMPTOTIC_HPP

#include "gptcap/capacity.hpp"

namespace gptcap {

// The m-fold i.i.d. extension of a channel on the minimal tensor composite:
// primal rays are m-fold products of base primal rays, dual rays m-fold
// products of base dual rays, outputs coordinate tensor products. For
// non-classical bases the listed dual rays generate a strict subcone of the
// true dual (the min/max tensor gap), so effect-side LPs over this model are
// decoders in the maximal composite -- an admissible, upper-bound-side
// reading recorded in reports. Classical bases have no gap.
ClassicalToGPTChannel product_channel(const ClassicalToGPTChannel& base, int m);

// m-fold minimal-tensor composite of a model (same caveat as above).
ModelPtr product_model(const ModelPtr& base, int m);

struct GapProbeReport {
    int trials = 0;
    int product_states_checked = 0;
    bool product_states_ok = true;  // product states always in the minimal cone
    int in_max_not_min = 0;         // sampled witnesses of the composition gap
    std::optional<Vec> gap_witness;
    std::optional<Vec> gap_separator;  // exact separating functional for the witness
};

// Membership experiment on the two-fold composite: random product states must
// lie in the minimal cone; random normalized vectors are classified against
// both cones and vectors in max-but-not-min witness the gap.
GapProbeReport min_max_gap_probe(const ModelPtr& base, int trials, std::uint64_t seed);

struct RateRow {
    int m = 0;
    // "bruteforce": exact_one_shot_capacity ran to completion.
    // "witness":   enumeration infeasible; N is a structured-code lower bound.
    // "pinned":    witness matched the Theorem-1 bound exactly, so exact.
    std::string mode;
    int N = 0;                    // N* (bruteforce/pinned) or witness size
    double exact_bits = 0.0;      // log2 N
    double t1_bits = 0.0;
    double t2_bits = 0.0;         // clipped at 0; 0 when eps = 0 (no valid eps')
    Rational beta_t1;             // 2^{-t1_bits}, exact
    Rational r_t2;                // 2^{-unclipped t2 bits}, exact; 1 when unavailable
    bool sandwich_ok = false;
    bool truncated = false;
};

struct RateReport {
    Rational eps, eps_prime;
    std::vector<RateRow> rows;
    bool all_ok = true;
};

// Per-use sandwich table for m = 1..m_max (m_max <= 3). Brute force runs
// while the cumulative enumeration cost (decoder LPs weighted by size) stays
// within enum_budget; beyond that the row falls back to structured witness
// codes (distinct-letter prefixes) and is flagged, or pinned when the witness
// meets the Theorem-1 bound exactly. eps_prime feeds Theorem 2 and must lie
// in (0, eps); pass 0 when eps = 0 to skip the lower bound.
RateReport rate_sweep(const ClassicalToGPTChannel& base, const Rational& eps,
                      const Rational& eps_prime, int m_max, int grid_k,
                      long enum_budget = 20000);

} // namespace gptcap

#endif
