#include "oracle.hpp"

#include <algorithm>

namespace gptcap::oracle {

namespace {

// Solve A x = b for square A by Gauss-Jordan; nullopt when singular.
std::optional<Vec> solve_square(std::vector<Vec> a, Vec b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        Rational p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) a[col][j] /= p;
        b[col] /= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    return b;
}

bool feasible(const Vec& x, const std::vector<LinRow>& rows) {
    for (const auto& row : rows) {
        Rational lhs = dot(row.coeffs, x);
        if (row.sense == Sense::Equal ? lhs != row.rhs : lhs < row.rhs) return false;
    }
    return true;
}

} // namespace

std::vector<Vec> enumerate_vertices(const std::vector<LinRow>& rows, int dim) {
    std::vector<Vec> vertices;
    const std::size_t m = rows.size();
    if (static_cast<int>(m) < dim) return vertices;

    // Every dim-subset of rows taken as equalities.
    std::vector<std::size_t> pick(dim);
    for (int i = 0; i < dim; ++i) pick[i] = i;
    for (;;) {
        std::vector<Vec> a;
        Vec b;
        for (int i = 0; i < dim; ++i) {
            a.push_back(rows[pick[i]].coeffs);
            b.push_back(rows[pick[i]].rhs);
        }
        if (auto x = solve_square(std::move(a), std::move(b))) {
            if (feasible(*x, rows) &&
                std::find(vertices.begin(), vertices.end(), *x) == vertices.end())
                vertices.push_back(*x);
        }
        // next combination
        int i = dim - 1;
        while (i >= 0 && pick[i] == m - static_cast<std::size_t>(dim - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < dim; ++j) pick[j] = pick[j - 1] + 1;
    }
    return vertices;
}

std::optional<Rational> minimum_over_vertices(const Vec& objective,
                                              const std::vector<LinRow>& rows, int dim) {
    std::vector<Vec> vertices = enumerate_vertices(rows, dim);
    std::optional<Rational> best;
    for (const auto& v : vertices) {
        Rational val = dot(objective, v);
        if (!best || val < *best) best = val;
    }
    return best;
}

std::vector<LinRow> dht_constraint_rows(const State& rho, const Rational& eps) {
    std::vector<LinRow> rows;
    const ModelPtr& model = rho.model;
    for (const auto& g : model->primal_rays) {
        rows.push_back({g, Sense::GreaterEqual, Rational(0)});
        rows.push_back({scaled(g, Rational(-1)), Sense::GreaterEqual, -dot(model->unit, g)});
    }
    rows.push_back({rho.coords, Sense::GreaterEqual, Rational(1) - eps});
    return rows;
}

std::optional<Rational> dht_beta(const State& rho, const State& sigma, const Rational& eps,
                                 std::size_t* vertex_count) {
    std::vector<LinRow> rows = dht_constraint_rows(rho, eps);
    std::vector<Vec> vertices = enumerate_vertices(rows, rho.model->dim);
    if (vertex_count) *vertex_count = vertices.size();
    std::optional<Rational> best;
    for (const auto& v : vertices) {
        Rational val = dot(sigma.coords, v);
        if (!best || val < *best) best = val;
    }
    return best;
}

} // namespace gptcap::oracle
