#include "siglap/et_family.hpp"

#include <algorithm>

#include "siglap/errors.hpp"
#include "siglap/geninv.hpp"
#include "siglap/spectral.hpp"

namespace siglap {

namespace {

long sign_pow(long k)
{
    return k % 2 == 0 ? 1 : -1;
}

// Cases with b odd and a >= b, 1-based entries in y[1..n].
RatVector odd_vector_long_first(long a, long b)
{
    const long n = a + b - 1;
    RatVector y(n + 1);
    if (a > 2 * b) {
        // |(a-1)/2 - i| is a half-integer-free quantity since a is odd.
        const long mid = (a - 1) / 2;
        for (long i = 1; i < a; ++i)
            y[i] = sign_pow(i) * (a - 2 * std::abs(mid - i));
        y[a] = 2;
        const long centre = a + (b + 1) / 2;
        for (long i = a + 1; i < a + b; ++i)
            y[i] = sign_pow(i) * (b - 2 * std::abs(centre - i));
    } else {
        const long h = (b - 1) / 2;
        for (long i = 1; i <= h; ++i)
            y[i] = sign_pow(i) * (b - 2 * i);
        for (long i = h + 1; i < a - h; ++i)  // empty when a = b
            y[i] = sign_pow(h);
        for (long i = a - h; i < a; ++i)
            y[i] = sign_pow(a - i) * (b - 2 * (a - i));
        y[a] = 2 * b;
        for (long i = a + 1; i <= a + h; ++i)
            y[i] = sign_pow(i - a) * (b - 2 * (i - a));
        for (long i = a + h + 1; i < a + b; ++i)
            y[i] = sign_pow(a + b - i) * (b - 2 * (a + b - i));
    }
    y.erase(y.begin());
    return y;
}

RatVector even_second_vector(long a, long b)
{
    const long n = a + b - 1;
    RatVector y(n + 1);
    const long h = (a - 1) / 2;
    for (long i = 1; i <= h; ++i)
        y[i] = sign_pow(i) * (a - 2 * i);
    for (long i = h + 1; i < a; ++i)
        y[i] = sign_pow(a - i) * (a - 2 * (a - i));
    y[a] = 2 * a;
    for (long i = a + 1; i <= a + b / 2; ++i)
        y[i] = sign_pow(i - a) * (a + 2 * (i - a));
    for (long i = a + b / 2 + 1; i < a + b; ++i)
        y[i] = sign_pow(a + b - i) * (a + 2 * (a + b - i));
    y.erase(y.begin());
    return y;
}

// ET(n, b, a) -> ET(n, a, b): the b-cycle v_b, v_1..v_{b-1} maps onto
// v_a, v_{a+1}..v_n and the a-cycle v_b, v_{b+1}..v_n onto v_a, v_1..v_{a-1}.
RatVector swap_cycles(const RatVector& swapped, long a, long b)
{
    RatVector y(swapped.size());
    for (long k = 1; k < b; ++k)
        y[a + k - 1] = swapped[k - 1];
    y[a - 1] = swapped[b - 1];
    for (long k = 1; k < a; ++k)
        y[k - 1] = swapped[b + k - 1];
    return y;
}

}  // namespace

void validate(const ETParams& p)
{
    if (p.a <= 2 || p.a % 2 == 0)
        throw InvalidParameter("a must be an odd integer greater than 2, got " + std::to_string(p.a));
    if (p.b <= 2)
        throw InvalidParameter("b must be an integer greater than 2, got " + std::to_string(p.b));
}

Graph build_et(const ETParams& p)
{
    validate(p);
    const auto a = static_cast<std::size_t>(p.a);
    const auto n = static_cast<std::size_t>(p.n());
    std::vector<Edge> edges;
    edges.reserve(n + 1);
    for (std::size_t k = 1; k < a; ++k)
        edges.emplace_back(k - 1, k);
    edges.emplace_back(a - 1, 0);
    for (std::size_t k = a + 1; k <= n; ++k)
        edges.emplace_back(k - 2, k - 1);
    edges.emplace_back(n - 1, a - 1);
    return Graph(n, std::move(edges));
}

Rational closed_form_min_norm(const ETParams& p)
{
    validate(p);
    const long a = p.a, b = p.b;
    if (b % 2 == 0)
        return std::max(2 * a, a + b);
    if (a > 2 * b)
        return a;
    if (b > 2 * a)
        return b;
    return 2 * std::min(a, b);
}

void check_optimal_vector(const ETParams& p, std::span<const Rational> y)
{
    const auto w = weighted_incidence(build_et(p));
    const Rational target = closed_form_min_norm(p).inverse();
    const Rational eval = evaluate(w, y);
    if (eval != target)
        throw ConstructionMismatch("ET(" + std::to_string(p.n()) + "," + std::to_string(p.a) + "," +
                                   std::to_string(p.b) + "): vector evaluates to " + eval.str() +
                                   ", expected " + target.str());
    if (vec_inf_norm(mat_vec(w.matrix, y)) != 1)
        throw ConstructionMismatch("largest edge value of the constructed vector is not 1");
}

RatVector optimal_vector(const ETParams& p)
{
    validate(p);
    RatVector y;
    if (p.b % 2 == 0)
        y = even_second_vector(p.a, p.b);
    else if (p.a >= p.b)
        y = odd_vector_long_first(p.a, p.b);
    else
        y = swap_cycles(odd_vector_long_first(p.b, p.a), p.a, p.b);
    check_optimal_vector(p, y);
    return y;
}

ETReport et_report(const ETParams& p)
{
    const Graph g = build_et(p);
    ETReport r;
    r.closed_form = closed_form_min_norm(p);
    r.lp_norm = min_norm_generalized_inverse(g).norm;
    r.median_norm = min_norm_bicyclic_median(g).norm;
    r.mu_lp = mu_infinity(g).mu;
    r.y = optimal_vector(p);
    r.y_eval = evaluate(weighted_incidence(g), r.y);
    r.all_consistent = r.lp_norm == r.closed_form && r.median_norm == r.closed_form &&
                       r.mu_lp * r.closed_form == 1 && r.y_eval * r.closed_form == 1;
    return r;
}

}  // namespace siglap
