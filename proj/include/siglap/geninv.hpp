#pragma once

#include "siglap/graph.hpp"
#include "siglap/matrix.hpp"

namespace siglap {

/** True iff W G W = W exactly. Throws DimensionError unless W is m x n and G is n x m. */
bool is_generalized_inverse(const RatMatrix& w, const RatMatrix& g);

struct GenInvResult
{
    RatMatrix g;            // n x m left inverse of W
    Rational norm;          // ||G||_inf,inf
    RatVector row_values;   // per-row l1 minima; norm is their max
};

/**
 * Minimal induced sup-norm generalized inverse of the weighted incidence
 * matrix.  Rows are independent: row i minimizes ||g||_1 subject to
 * g W = e_i^T, so the min over G of the max row sum is the max of the
 * per-row minima.  Throws HypothesisViolation for disconnected or bipartite
 * graphs, where W loses full column rank.
 */
GenInvResult min_norm_generalized_inverse(const Graph& g);

/** Spanning vector of the left null space {z : z W = 0} of a bicyclic graph. */
struct KernelRow
{
    RatVector beta;  // integer entries, gcd 1, last nonzero entry positive
};

/** Throws HypothesisViolation unless g is connected, non-bipartite and has m = n + 1. */
KernelRow kernel_row(const Graph& g);

/** Which edges (rows of W) to try first when building a square invertible block. */
enum class PivotOrder { Forward, Reverse };

/**
 * Some left inverse of a full-column-rank W: invert the first n linearly
 * independent rows met in the given order and scatter the result into the
 * matching columns, zero elsewhere.
 */
RatMatrix particular_left_inverse(const RatMatrix& w, PivotOrder order = PivotOrder::Forward);

/**
 * Bicyclic fast path.  Every left inverse is Ghat + alpha beta, so row i
 * minimizes sum_j |ghat_ij + z beta_j| over a scalar z: a weighted median of
 * the breakpoints -ghat_ij / beta_j with weights |beta_j|, plus the fixed
 * contribution of columns where beta_j = 0.
 */
GenInvResult min_norm_bicyclic_median(const Graph& g, PivotOrder order = PivotOrder::Forward);

struct DualityReport
{
    Rational mu;
    Rational norm;
    Rational product;
    bool pass = false;
};

/** mu_inf from face LPs against the min-norm inverse from row LPs; pass iff mu * norm = 1. */
DualityReport verify_duality(const Graph& g);

}  // namespace siglap
