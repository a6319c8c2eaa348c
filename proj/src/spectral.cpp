#include "siglap/spectral.hpp"

#include <algorithm>

#include "siglap/errors.hpp"
#include "siglap/lp.hpp"

namespace siglap {

namespace {

void require_connected(const Graph& g)
{
    if (!is_connected(g))
        throw HypothesisViolation("graph is not connected");
}

std::size_t first_tight_row(const RatVector& mx, const Rational& value)
{
    for (std::size_t e = 0; e < mx.size(); ++e)
        if (mx[e].abs() == value)
            return e;
    throw ConstructionMismatch("no row attains the reported maximum " + value.str());
}

// x_k = 1, -1 <= x <= 1, -t <= (M x)_e <= t; minimize t.
LPSolution solve_face(const RatMatrix& m, std::size_t k)
{
    const std::size_t n = m.cols();
    RatVector objective(n + 1);
    objective[n] = 1;
    LPProblem lp(std::move(objective));
    for (std::size_t i = 0; i < n; ++i)
        lp.bounds[i] = {Rational(i == k ? 1 : -1), Rational(1)};
    lp.bounds[n].lower = Rational(0);

    for (std::size_t e = 0; e < m.rows(); ++e) {
        RatVector row(n + 1);
        std::copy(m.row(e).begin(), m.row(e).end(), row.begin());
        row[n] = -1;
        lp.add(row, Relation::LessEqual, 0);
        row[n] = 1;
        lp.add(std::move(row), Relation::GreaterEqual, 0);
    }
    return solve(lp);
}

EigenResult certified(const RatMatrix& m, RatVector x, std::size_t fixed)
{
    if (vec_inf_norm(x) != 1)
        throw ConstructionMismatch("witness is not on the unit sup-sphere");
    const RatVector mx = mat_vec(m, x);
    Rational mu = vec_inf_norm(mx);
    const std::size_t tight = first_tight_row(mx, mu);
    return {std::move(mu), std::move(x), tight, fixed};
}

}  // namespace

RatMatrix incidence_matrix(const Graph& g)
{
    RatMatrix b(g.edge_count(), g.vertex_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        b(e, g.edges()[e].first) = 1;
        b(e, g.edges()[e].second) = 1;
    }
    return b;
}

WeightedIncidence weighted_incidence(const Graph& g)
{
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw DegenerateInput("vertex " + std::to_string(v + 1) + " is isolated; D is singular");

    WeightedIncidence w{RatMatrix(g.edge_count(), g.vertex_count()), g, degrees(g)};
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [i, j] = g.edges()[e];
        w.matrix(e, i) = w.degs[i].inverse();
        w.matrix(e, j) = w.degs[j].inverse();
    }
    return w;
}

Rational evaluate(const WeightedIncidence& w, std::span<const Rational> x)
{
    const Rational norm = vec_inf_norm(x);
    if (norm.is_zero())
        throw IllFormedInput("evaluate: x is the zero vector");
    return vec_inf_norm(mat_vec(w.matrix, x)) / norm;
}

EigenResult sup_sphere_minimum(const RatMatrix& m)
{
    if (m.empty())
        throw IllFormedInput("sup_sphere_minimum of an empty matrix");

    std::optional<Rational> best;
    RatVector best_x;
    std::size_t best_k = 0;
    for (std::size_t k = 0; k < m.cols(); ++k) {
        auto sol = solve_face(m, k);
        if (sol.status != LPStatus::Optimal)
            throw ConstructionMismatch("face LP " + std::to_string(k + 1) + " did not reach an optimum");
        if (!best || *sol.value < *best) {
            best = *sol.value;
            best_x.assign(sol.point->begin(), sol.point->end() - 1);
            best_k = k;
        }
    }
    auto result = certified(m, std::move(best_x), best_k);
    if (result.mu != *best)
        throw ConstructionMismatch("face LP value " + best->str() + " differs from re-evaluation " +
                                   result.mu.str());
    return result;
}

EigenResult mu_infinity(const Graph& g)
{
    require_connected(g);
    const auto w = weighted_incidence(g);

    if (auto sides = bipartition(g)) {
        const std::size_t n = g.vertex_count();
        std::size_t top = 0;
        for (std::size_t v = 1; v < n; ++v)
            if (g.degree(v) > g.degree(top))
                top = v;
        const Rational max_deg = w.degs[top];
        // Orient so that the lowest max-degree vertex sits at +1.
        const int flip = sides->side[top];
        RatVector x(n);
        for (std::size_t v = 0; v < n; ++v)
            x[v] = Rational(sides->side[v] * flip) * w.degs[v] / max_deg;
        auto result = certified(w.matrix, std::move(x), top);
        if (!result.mu.is_zero())
            throw ConstructionMismatch("bipartite certificate does not vanish");
        return result;
    }
    return sup_sphere_minimum(w.matrix);
}

Rational q_infinity_formula(const Graph& g)
{
    require_connected(g);
    std::size_t longest = 0;
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        auto l = odd_walk_length(g, u);
        if (!l)
            return Rational(0);
        longest = std::max(longest, *l);
    }
    return Rational(2, static_cast<long>(longest));
}

Rational q_infinity_lp(const Graph& g)
{
    require_connected(g);
    const RatMatrix b = incidence_matrix(g);
    if (b.empty())
        throw DegenerateInput("graph has no edges");
    if (auto sides = bipartition(g)) {
        RatVector x(g.vertex_count());
        for (std::size_t v = 0; v < x.size(); ++v)
            x[v] = sides->side[v];
        auto result = certified(b, std::move(x), 0);
        if (!result.mu.is_zero())
            throw ConstructionMismatch("bipartite certificate does not vanish");
        return result.mu;
    }
    return sup_sphere_minimum(b).mu;
}

}  // namespace siglap
