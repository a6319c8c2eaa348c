#include "siglap/geninv.hpp"

#include <algorithm>

#include "siglap/errors.hpp"
#include "siglap/lp.hpp"
#include "siglap/spectral.hpp"

namespace siglap {

namespace {

void require_full_rank_graph(const Graph& g)
{
    if (!is_connected(g))
        throw HypothesisViolation("graph is not connected; the weighted incidence matrix lacks full column rank");
    if (is_bipartite(g))
        throw HypothesisViolation(
            "graph is bipartite; the weighted incidence matrix lacks full column rank, so no left inverse exists");
}

void require_bicyclic(const Graph& g)
{
    require_full_rank_graph(g);
    if (g.edge_count() != g.vertex_count() + 1)
        throw HypothesisViolation("expected m = n + 1 edges, got n = " + std::to_string(g.vertex_count()) +
                                  ", m = " + std::to_string(g.edge_count()));
}

GenInvResult assemble(const RatMatrix& w, RatMatrix g, RatVector row_values)
{
    Rational norm = *std::max_element(row_values.begin(), row_values.end());
    if (mat_mul(g, w) != RatMatrix::identity(w.cols()))
        throw ConstructionMismatch("assembled G is not a left inverse of W");
    if (induced_inf_norm(g) != norm)
        throw ConstructionMismatch("row minima disagree with the induced norm of G");
    return {std::move(g), std::move(norm), std::move(row_values)};
}

}  // namespace

bool is_generalized_inverse(const RatMatrix& w, const RatMatrix& g)
{
    if (g.rows() != w.cols() || g.cols() != w.rows())
        throw DimensionError("W is " + std::to_string(w.rows()) + "x" + std::to_string(w.cols()) + ", G is " +
                             std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
    return mat_mul(mat_mul(w, g), w) == w;
}

GenInvResult min_norm_generalized_inverse(const Graph& g)
{
    require_full_rank_graph(g);
    const RatMatrix w = weighted_incidence(g).matrix;
    const RatMatrix wt = w.transpose();
    const std::size_t n = w.cols(), m = w.rows();

    RatMatrix ginv(n, m);
    RatVector values(n);
    for (std::size_t i = 0; i < n; ++i) {
        RatVector unit(n);
        unit[i] = 1;
        auto [row, value] = min_l1_affine(wt, unit);
        std::copy(row.begin(), row.end(), ginv.row(i).begin());
        values[i] = std::move(value);
    }
    return assemble(w, std::move(ginv), std::move(values));
}

KernelRow kernel_row(const Graph& g)
{
    require_bicyclic(g);
    const RatMatrix w = weighted_incidence(g).matrix;
    auto basis = null_space(w.transpose());
    if (basis.size() != 1)
        throw ConstructionMismatch("left null space has dimension " + std::to_string(basis.size()));
    RatVector beta = std::move(basis.front());

    mpz_class scale = 1;
    for (const auto& v : beta)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.den().get_mpz_t());
    mpz_class common = 0;
    for (auto& v : beta) {
        v *= Rational(mpq_class(scale));
        mpz_gcd(common.get_mpz_t(), common.get_mpz_t(), v.num().get_mpz_t());
    }
    const Rational divisor{mpq_class(common)};
    auto last = std::find_if(beta.rbegin(), beta.rend(), [](const Rational& v) { return !v.is_zero(); });
    const Rational sign = last->sign() < 0 ? Rational(-1) : Rational(1);
    for (auto& v : beta)
        v = v / divisor * sign;
    return {std::move(beta)};
}

RatMatrix particular_left_inverse(const RatMatrix& w, PivotOrder order)
{
    const std::size_t m = w.rows(), n = w.cols();
    std::vector<std::size_t> chosen;
    RatMatrix block(0, n);
    for (std::size_t step = 0; step < m && chosen.size() < n; ++step) {
        const std::size_t e = order == PivotOrder::Forward ? step : m - 1 - step;
        RatMatrix trial(chosen.size() + 1, n);
        for (std::size_t r = 0; r < chosen.size(); ++r)
            std::copy(block.row(r).begin(), block.row(r).end(), trial.row(r).begin());
        std::copy(w.row(e).begin(), w.row(e).end(), trial.row(chosen.size()).begin());
        if (rank(trial) == chosen.size() + 1) {
            chosen.push_back(e);
            block = std::move(trial);
        }
    }
    if (chosen.size() < n)
        throw HypothesisViolation("W does not have full column rank");

    // block * x = y on the chosen rows, so inverse(block) scattered into those
    // columns satisfies G W = inverse(block) * block = I.
    const RatMatrix inv = inverse(block);
    RatMatrix g(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            g(i, chosen[k]) = inv(i, k);
    return g;
}

GenInvResult min_norm_bicyclic_median(const Graph& g, PivotOrder order)
{
    const RatVector beta = kernel_row(g).beta;
    const RatMatrix w = weighted_incidence(g).matrix;
    const RatMatrix ghat = particular_left_inverse(w, order);
    const std::size_t n = w.cols(), m = w.rows();

    RatMatrix ginv(n, m);
    RatVector values(n);
    std::vector<WeightedPoint> points;
    for (std::size_t i = 0; i < n; ++i) {
        points.clear();
        Rational fixed;
        for (std::size_t j = 0; j < m; ++j) {
            if (beta[j].is_zero())
                fixed += ghat(i, j).abs();
            else
                points.push_back({-ghat(i, j) / beta[j], beta[j].abs()});
        }
        auto [z, value] = weighted_median_l1(points);
        for (std::size_t j = 0; j < m; ++j)
            ginv(i, j) = ghat(i, j) + z * beta[j];
        values[i] = value + fixed;
    }
    return assemble(w, std::move(ginv), std::move(values));
}

DualityReport verify_duality(const Graph& g)
{
    require_full_rank_graph(g);
    DualityReport r;
    r.mu = mu_infinity(g).mu;
    r.norm = min_norm_generalized_inverse(g).norm;
    r.product = r.mu * r.norm;
    r.pass = r.product == Rational(1);
    return r;
}

}  // namespace siglap
