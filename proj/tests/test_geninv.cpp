#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "siglap/errors.hpp"
#include "siglap/et_family.hpp"
#include "siglap/geninv.hpp"
#include "siglap/spectral.hpp"

using namespace siglap;

namespace {

const Graph k3 = parse_edge_list("1 2\n2 3\n3 1");
const Graph c4 = parse_edge_list("1 2\n2 3\n3 4\n4 1");

RatMatrix outer(const RatVector& col, const RatVector& row)
{
    RatMatrix m(col.size(), row.size());
    for (std::size_t i = 0; i < col.size(); ++i)
        for (std::size_t j = 0; j < row.size(); ++j)
            m(i, j) = col[i] * row[j];
    return m;
}

RatMatrix plus(const RatMatrix& a, const RatMatrix& b)
{
    RatMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) += b(i, j);
    return c;
}

}  // namespace

TEST_CASE("is_generalized_inverse")
{
    const RatMatrix a{{2, 1}, {1, 1}};
    CHECK(is_generalized_inverse(a, inverse(a)));

    const RatMatrix w = weighted_incidence(k3).matrix;
    CHECK(is_generalized_inverse(w, RatMatrix{{1, -1, 1}, {1, 1, -1}, {-1, 1, 1}}));
    CHECK_FALSE(is_generalized_inverse(w, RatMatrix(3, 3)));
    CHECK_THROWS_AS(is_generalized_inverse(w, RatMatrix(2, 3)), DimensionError);
}

TEST_CASE("min_norm_generalized_inverse")
{
    auto r = min_norm_generalized_inverse(k3);
    CHECK(r.norm == 3);
    CHECK(r.row_values == RatVector{3, 3, 3});
    CHECK(r.g == RatMatrix{{1, -1, 1}, {1, 1, -1}, {-1, 1, 1}});

    r = min_norm_generalized_inverse(build_et({3, 7}));
    CHECK(r.norm == 7);
    CHECK(induced_inf_norm(r.g) == 7);
    CHECK(mat_mul(r.g, weighted_incidence(build_et({3, 7})).matrix) == RatMatrix::identity(9));

    CHECK(min_norm_generalized_inverse(build_et({5, 4})).norm == 10);

    CHECK_THROWS_AS(min_norm_generalized_inverse(c4), HypothesisViolation);
    CHECK_THROWS_AS(min_norm_generalized_inverse(parse_edge_list("1 2\n2 3\n3 1\n4 5\n5 6\n6 4")),
                    HypothesisViolation);
}

TEST_CASE("kernel_row")
{
    CHECK(kernel_row(build_et({3, 3})).beta == RatVector{1, -1, -1, 1, -1, 1});
    CHECK(kernel_row(build_et({3, 4})).beta == RatVector{0, 0, 0, -1, 1, -1, 1});
    CHECK_THROWS_AS(kernel_row(k3), HypothesisViolation);
    CHECK_THROWS_AS(kernel_row(parse_edge_list("1 2\n1 3\n1 4\n2 3\n2 4\n3 4")), HypothesisViolation);
}

TEST_CASE("kernel_row over the ET grid matches the alternating patterns")
{
    for (long a = 3; a <= 7; a += 2)
        for (long b = 3; b <= 8; ++b) {
            const Graph g = build_et({a, b});
            const auto beta = kernel_row(g).beta;
            const auto n = static_cast<std::size_t>(a + b - 1);
            REQUIRE(beta.size() == n + 1);
            CHECK(vec_mat(beta, weighted_incidence(g).matrix) == RatVector(n, Rational(0)));

            RatVector expected(n + 1);
            if (b % 2 == 1) {
                // 1,-1,...,1,-1 on the first a-1 edges, -1 on the closing edge
                // (v_a, v_1), then alternating over the b-cycle ending in +1.
                for (long j = 0; j < a - 1; ++j)
                    expected[j] = j % 2 == 0 ? 1 : -1;
                expected[a - 1] = -1;
                for (long j = a; j <= a + b - 1; ++j)
                    expected[j] = (a + b - 1 - j) % 2 == 0 ? 1 : -1;
            } else {
                for (long j = a; j <= a + b - 1; ++j)
                    expected[j] = (a + b - 1 - j) % 2 == 0 ? 1 : -1;
            }
            CHECK(beta == expected);
        }
}

TEST_CASE("particular left inverses differ but minimise to the same norm")
{
    for (long a = 3; a <= 7; a += 2)
        for (long b = 3; b <= 6; ++b) {
            const Graph g = build_et({a, b});
            const RatMatrix w = weighted_incidence(g).matrix;
            const RatMatrix fwd = particular_left_inverse(w, PivotOrder::Forward);
            const RatMatrix rev = particular_left_inverse(w, PivotOrder::Reverse);
            CHECK(mat_mul(fwd, w) == RatMatrix::identity(w.cols()));
            CHECK(mat_mul(rev, w) == RatMatrix::identity(w.cols()));
            CHECK(fwd != rev);
            CHECK(min_norm_bicyclic_median(g, PivotOrder::Forward).norm ==
                  min_norm_bicyclic_median(g, PivotOrder::Reverse).norm);
        }
}

TEST_CASE("min_norm_bicyclic_median")
{
    CHECK(min_norm_bicyclic_median(build_et({3, 3})).norm == 6);
    CHECK(min_norm_bicyclic_median(build_et({5, 3})).norm == 6);
    CHECK(min_norm_bicyclic_median(build_et({7, 3})).norm == 7);
    CHECK_THROWS_AS(min_norm_bicyclic_median(k3), HypothesisViolation);
}

TEST_CASE("median path equals LP path on random bicyclic graphs")
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = oracle::random_bicyclic_nonbipartite(rng, 4, 8);
        const auto med = min_norm_bicyclic_median(g);
        const auto lp = min_norm_generalized_inverse(g);
        CHECK(med.norm == lp.norm);
        CHECK(med.row_values == lp.row_values);
        CHECK(induced_inf_norm(med.g) == med.norm);
    }
}

TEST_CASE("generalized inverse iff left inverse under kernel perturbations")
{
    std::mt19937 rng(41);
    for (long a = 3; a <= 5; a += 2)
        for (long b = 3; b <= 6; ++b) {
            const Graph g = build_et({a, b});
            const RatMatrix w = weighted_incidence(g).matrix;
            const RatMatrix ghat = particular_left_inverse(w);
            const RatVector beta = kernel_row(g).beta;
            for (int trial = 0; trial < 10; ++trial) {
                RatVector alpha(w.cols());
                for (auto& v : alpha)
                    v = oracle::random_rational(rng);
                const RatMatrix gg = plus(ghat, outer(alpha, beta));
                CHECK(is_generalized_inverse(w, gg));
                CHECK(mat_mul(gg, w) == RatMatrix::identity(w.cols()));

                // Weak duality: ||x|| <= ||G|| ||W x||.
                RatVector x(w.cols());
                for (auto& v : x)
                    v = oracle::random_rational(rng);
                if (!vec_inf_norm(x).is_zero())
                    CHECK(vec_inf_norm(x) <= induced_inf_norm(gg) * vec_inf_norm(mat_vec(w, x)));

                RatMatrix bad = gg;
                bad(trial % bad.rows(), (trial * 3) % bad.cols()) += Rational(1, 5);
                const bool left = mat_mul(bad, w) == RatMatrix::identity(w.cols());
                CHECK(is_generalized_inverse(w, bad) == left);
                CHECK_FALSE(left);
            }
        }
}

TEST_CASE("verify_duality")
{
    auto r = verify_duality(k3);
    CHECK(r.mu == Rational(1, 3));
    CHECK(r.norm == 3);
    CHECK(r.product == 1);
    CHECK(r.pass);

    r = verify_duality(build_et({3, 7}));
    CHECK(r.mu == Rational(1, 7));
    CHECK(r.norm == 7);
    CHECK(r.pass);

    r = verify_duality(build_et({3, 4}));
    CHECK(r.mu == Rational(1, 7));
    CHECK(r.norm == 7);
    CHECK(r.pass);

    CHECK_THROWS_AS(verify_duality(c4), HypothesisViolation);
}
