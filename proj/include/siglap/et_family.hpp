#pragma once

#include <span>

#include "siglap/graph.hpp"
#include "siglap/matrix.hpp"

namespace siglap {

/**
 * ET(n, a, b): an odd a-cycle v1..va and a b-cycle va..vn sharing the
 * single vertex va, n = a + b - 1.
 */
struct ETParams
{
    long a = 3;
    long b = 3;

    long n() const noexcept { return a + b - 1; }
};

/** Throws InvalidParameter unless a is odd, a > 2 and b > 2. */
void validate(const ETParams& p);

/**
 * Edges in canonical order: (v_k, v_k+1) for k < a, then (v_a, v_1), then
 * (v_k-1, v_k) for a < k <= n, then (v_n, v_a).
 */
Graph build_et(const ETParams& p);

/**
 * Minimal induced sup-norm of a generalized inverse of W(ET):
 * b odd: a if a > 2b, b if b > 2a, else 2 min(a, b); b even: max(2a, a + b).
 */
Rational closed_form_min_norm(const ETParams& p);

/**
 * Explicit minimizer Y of ||W Y||_inf / ||Y||_inf, scaled so every edge value
 * has magnitude at most 1 and ||Y||_inf equals the closed-form norm.  For b
 * odd and b > a the vector for ET(n, b, a) is transported through the
 * isomorphism that swaps the two cycles.  Throws ConstructionMismatch if the
 * result fails check_optimal_vector.
 */
RatVector optimal_vector(const ETParams& p);

/**
 * Throws ConstructionMismatch unless evaluate(W, y) = 1 / closed form and the
 * largest edge value |y_i/d_i + y_j/d_j| is exactly 1.
 */
void check_optimal_vector(const ETParams& p, std::span<const Rational> y);

struct ETReport
{
    Rational closed_form;
    Rational lp_norm;
    Rational median_norm;
    Rational mu_lp;
    Rational y_eval;
    RatVector y;
    bool all_consistent = false;
};

/** Runs every route and checks closed form = LP norm = median norm = 1/mu = 1/eval(Y). */
ETReport et_report(const ETParams& p);

}  // namespace siglap
