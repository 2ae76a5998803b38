#ifndef GPTCAP_TESTS_ORACLE_HPP
#define GPTCAP_TESTS_ORACLE_HPP

#include <optional>

#include "gptcap/lp.hpp"
#include "gptcap/model.hpp"

// Test-only brute-force oracle: enumerates basic solutions of an inequality
// system by solving every dim-subset of tight rows with its own Gaussian
// elimination, keeps the feasible ones, and minimizes by direct evaluation.
// Deliberately independent of the simplex implementation it cross-checks.
namespace gptcap::oracle {

// All vertices (feasible basic solutions) of {row.coeffs . x >= row.rhs} /
// {== for Equal rows}, deduplicated. The system must be bounded for the
// minimum below to be attained at a vertex.
std::vector<Vec> enumerate_vertices(const std::vector<LinRow>& rows, int dim);

std::optional<Rational> minimum_over_vertices(const Vec& objective,
                                              const std::vector<LinRow>& rows, int dim);

// The feasible set of the hypothesis-testing LP for (rho, sigma, eps),
// written down independently of the hypothesis module.
std::vector<LinRow> dht_constraint_rows(const State& rho, const Rational& eps);

// Brute-force beta_star via vertex enumeration.
std::optional<Rational> dht_beta(const State& rho, const State& sigma, const Rational& eps,
                                 std::size_t* vertex_count = nullptr);

} // namespace gptcap::oracle

#endif
