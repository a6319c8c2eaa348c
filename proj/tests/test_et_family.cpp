#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siglap/errors.hpp"
#include "siglap/et_family.hpp"
#include "siglap/spectral.hpp"

using namespace siglap;

namespace {

// Norm of the explicit vector as stated case by case for the construction.
long stated_vector_norm(long a, long b)
{
    if (b % 2 == 0)
        return a > b ? 2 * a : a + b;
    // Both odd: reduce to a >= b by exchanging roles.
    const long hi = std::max(a, b), lo = std::min(a, b);
    return hi > 2 * lo ? hi : 2 * lo;
}

}  // namespace

TEST_CASE("build_et")
{
    const Graph g = build_et({3, 7});
    CHECK(g.vertex_count() == 9);
    CHECK(g.edge_count() == 10);
    CHECK(degrees(g) == RatVector{2, 2, 4, 2, 2, 2, 2, 2, 2});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 2}});

    const Graph h = build_et({3, 3});
    CHECK(h.vertex_count() == 5);
    CHECK(h.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});

    CHECK_THROWS_AS(build_et({2, 3}), InvalidParameter);
    CHECK_THROWS_AS(build_et({4, 3}), InvalidParameter);
    CHECK_THROWS_AS(build_et({3, 2}), InvalidParameter);
    CHECK_THROWS_AS(build_et({-3, 5}), InvalidParameter);
}

TEST_CASE("closed_form_min_norm covers all four cases")
{
    CHECK(closed_form_min_norm({3, 7}) == 7);   // b odd, b > 2a
    CHECK(closed_form_min_norm({7, 3}) == 7);   // b odd, a > 2b
    CHECK(closed_form_min_norm({5, 5}) == 10);  // b odd, balanced
    CHECK(closed_form_min_norm({5, 3}) == 6);
    CHECK(closed_form_min_norm({5, 4}) == 10);  // b even, 2a wins
    CHECK(closed_form_min_norm({3, 4}) == 7);   // b even, a + b wins
    CHECK_THROWS_AS(closed_form_min_norm({3, 1}), InvalidParameter);
}

TEST_CASE("closed form is symmetric for two odd cycles")
{
    for (long a = 3; a <= 15; a += 2)
        for (long b = 3; b <= 15; b += 2)
            CHECK(closed_form_min_norm({a, b}) == closed_form_min_norm({b, a}));
}

TEST_CASE("optimal_vector examples")
{
    CHECK(optimal_vector({3, 3}) == RatVector{-1, -1, 6, -1, -1});
    CHECK(optimal_vector({3, 4}) == RatVector{-1, -1, 6, -5, 7, -5});
    const auto y = optimal_vector({7, 3});
    CHECK(vec_inf_norm(y) == 7);
    CHECK(y[2] == -7);  // attained at index (a-1)/2
}

TEST_CASE("check_optimal_vector rejects a wrong vector")
{
    CHECK_NOTHROW(check_optimal_vector({3, 3}, RatVector{-1, -1, 6, -1, -1}));
    CHECK_THROWS_AS(check_optimal_vector({3, 3}, RatVector{-1, -1, 5, -1, -1}), ConstructionMismatch);
    // Right ratio, wrong scale: edge maximum is 2, not 1.
    CHECK_THROWS_AS(check_optimal_vector({3, 3}, RatVector{-2, -2, 12, -2, -2}), ConstructionMismatch);
}

TEST_CASE("optimal_vector over a wide range of parameters")
{
    for (long a = 3; a <= 13; a += 2)
        for (long b = 3; b <= 16; ++b) {
            const ETParams p{a, b};
            const auto y = optimal_vector(p);
            const auto w = weighted_incidence(build_et(p));
            CHECK(evaluate(w, y) == closed_form_min_norm(p).inverse());
            CHECK(vec_inf_norm(mat_vec(w.matrix, y)) == 1);
            CHECK(vec_inf_norm(y) == stated_vector_norm(a, b));
        }
}

TEST_CASE("et_report")
{
    auto r = et_report({3, 7});
    CHECK(r.closed_form == 7);
    CHECK(r.lp_norm == 7);
    CHECK(r.median_norm == 7);
    CHECK(r.mu_lp == Rational(1, 7));
    CHECK(r.y_eval == Rational(1, 7));
    CHECK(r.all_consistent);

    r = et_report({5, 5});
    CHECK(r.closed_form == 10);
    CHECK(r.all_consistent);

    r = et_report({3, 4});
    CHECK(r.closed_form == 7);
    CHECK(r.all_consistent);
}
