#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "siglap/errors.hpp"
#include "siglap/et_family.hpp"
#include "siglap/spectral.hpp"

using namespace siglap;

namespace {

const Graph k3 = parse_edge_list("1 2\n2 3\n3 1");
const Graph c4 = parse_edge_list("1 2\n2 3\n3 4\n4 1");
const Graph c5 = parse_edge_list("1 2\n2 3\n3 4\n4 5\n5 1");

void check_certificate(const Graph& g, const EigenResult& r)
{
    const auto w = weighted_incidence(g);
    CHECK(vec_inf_norm(r.optimal_x) == 1);
    const RatVector wx = mat_vec(w.matrix, r.optimal_x);
    CHECK(vec_inf_norm(wx) == r.mu);
    CHECK(wx[r.tight_edge].abs() == r.mu);
    for (std::size_t e = 0; e < r.tight_edge; ++e)
        CHECK(wx[e].abs() < r.mu);
    CHECK(r.optimal_x[r.fixed_coord] == 1);
}

}  // namespace

TEST_CASE("incidence_matrix")
{
    CHECK(incidence_matrix(parse_edge_list("1 2")) == RatMatrix{{1, 1}});
    const RatMatrix b = incidence_matrix(k3);
    CHECK(b == RatMatrix{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    // B^T B is the signless Laplacian D + A.
    CHECK(mat_mul(b.transpose(), b) == RatMatrix{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
}

TEST_CASE("weighted_incidence")
{
    const auto w = weighted_incidence(k3);
    for (std::size_t e = 0; e < 3; ++e) {
        RatVector row(w.matrix.row(e).begin(), w.matrix.row(e).end());
        std::sort(row.begin(), row.end());
        CHECK(row == RatVector{0, Rational(1, 2), Rational(1, 2)});
    }

    const Graph et = build_et({3, 7});
    const auto we = weighted_incidence(et);
    for (std::size_t e = 0; e < et.edge_count(); ++e) {
        auto [u, v] = et.edges()[e];
        CHECK(we.matrix(e, u) == (u == 2 ? Rational(1, 4) : Rational(1, 2)));
        CHECK(we.matrix(e, v) == (v == 2 ? Rational(1, 4) : Rational(1, 2)));
    }
    for (std::size_t i = 0; i < et.vertex_count(); ++i) {
        Rational col;
        for (std::size_t e = 0; e < et.edge_count(); ++e)
            col += we.matrix(e, i);
        CHECK(col == 1);
    }

    CHECK(weighted_incidence(parse_edge_list("1 2")).matrix == RatMatrix{{1, 1}});
    CHECK_THROWS_AS(weighted_incidence(Graph(3, {{0, 1}})), DegenerateInput);
}

TEST_CASE("evaluate")
{
    const auto w = weighted_incidence(k3);
    CHECK(evaluate(w, RatVector{1, Rational(-1, 3), Rational(-1, 3)}) == Rational(1, 3));
    const auto w5 = weighted_incidence(build_et({3, 3}));
    CHECK(evaluate(w5, RatVector{-1, -1, 6, -1, -1}) == Rational(1, 6));
    CHECK(evaluate(w5, RatVector{-7, -7, 42, -7, -7}) == Rational(1, 6));
    CHECK_THROWS_AS(evaluate(w, RatVector{0, 0, 0}), IllFormedInput);
    CHECK_THROWS_AS(evaluate(w, RatVector{1, 0}), DimensionError);
}

TEST_CASE("mu_infinity")
{
    auto r = mu_infinity(c4);
    CHECK(r.mu == 0);
    CHECK(r.optimal_x == RatVector{1, -1, 1, -1});
    check_certificate(c4, r);

    r = mu_infinity(k3);
    CHECK(r.mu == Rational(1, 3));
    check_certificate(k3, r);

    const Graph et = build_et({3, 7});
    r = mu_infinity(et);
    CHECK(r.mu == Rational(1, 7));
    check_certificate(et, r);

    CHECK_THROWS_AS(mu_infinity(parse_edge_list("1 2\n3 4")), HypothesisViolation);
    CHECK_THROWS_AS(mu_infinity(Graph(1, {})), DegenerateInput);
}

TEST_CASE("bipartite certificate uses degrees")
{
    // Star K_{1,3}: centre degree 3, leaves degree 1.
    const Graph star = parse_edge_list("1 2\n1 3\n1 4");
    const auto r = mu_infinity(star);
    CHECK(r.mu == 0);
    CHECK(r.optimal_x == RatVector{1, Rational(-1, 3), Rational(-1, 3), Rational(-1, 3)});
    check_certificate(star, r);
}

TEST_CASE("q_infinity")
{
    CHECK(q_infinity_formula(c5) == Rational(2, 5));
    CHECK(q_infinity_formula(k3) == Rational(2, 3));
    CHECK(q_infinity_formula(c4) == 0);
    CHECK(q_infinity_lp(k3) == Rational(2, 3));
    CHECK(q_infinity_lp(c5) == Rational(2, 5));
    CHECK(q_infinity_lp(c4) == 0);
    CHECK_THROWS_AS(q_infinity_formula(parse_edge_list("1 2\n3 4")), HypothesisViolation);
    CHECK_THROWS_AS(q_infinity_lp(parse_edge_list("1 2\n3 4")), HypothesisViolation);
}

TEST_CASE("sup_sphere_minimum witness for K3 under B")
{
    const auto r = sup_sphere_minimum(incidence_matrix(k3));
    CHECK(r.mu == Rational(2, 3));
    // Any optimal witness hits 2/3 on every edge for the triangle.
    for (const auto& v : mat_vec(incidence_matrix(k3), r.optimal_x))
        CHECK(v.abs() == Rational(2, 3));
}

TEST_CASE("connected graphs up to n = 6: mu zero iff bipartite, q formula = q LP, regular scaling")
{
    std::vector<Graph> graphs;
    for (std::size_t n = 2; n <= 5; ++n)
        oracle::for_each_labeled_graph(n, [&](const Graph& g) {
            if (is_connected(g))
                graphs.push_back(g);
        });
    for (const auto& g : oracle::graphs_up_to_isomorphism(6))
        if (is_connected(g))
            graphs.push_back(g);

    std::size_t regular = 0;
    for (const auto& g : graphs) {
        const auto mu = mu_infinity(g);
        REQUIRE((mu.mu == 0) == is_bipartite(g));
        check_certificate(g, mu);
        if (is_bipartite(g))
            continue;

        const Rational q = q_infinity_lp(g);
        REQUIRE(q_infinity_formula(g) == q);

        const std::size_t d = g.degree(0);
        bool is_regular = true;
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            is_regular = is_regular && g.degree(v) == d;
        if (is_regular) {
            ++regular;
            CHECK(mu.mu == q / Rational(static_cast<long>(d)));
        }
    }
    CHECK(regular > 0);
}

TEST_CASE("evaluate never undercuts mu_infinity")
{
    std::mt19937 rng(17);
    for (int k = 0; k < 8; ++k) {
        const Graph g = oracle::random_connected_nonbipartite(rng, 3, 7);
        const auto w = weighted_incidence(g);
        const auto res = mu_infinity(g);
        CHECK(evaluate(w, res.optimal_x) == res.mu);
        for (int trial = 0; trial < 100; ++trial) {
            RatVector x(g.vertex_count());
            for (auto& v : x)
                v = oracle::random_rational(rng, 5, 4);
            if (vec_inf_norm(x).is_zero())
                continue;
            CHECK(evaluate(w, x) >= res.mu);
        }
    }
}
