#pragma once

#include <cstddef>
#include <span>

#include "siglap/graph.hpp"
#include "siglap/matrix.hpp"

namespace siglap {

/** 0/1 edge-vertex incidence matrix B, one row per edge in edge order. */
RatMatrix incidence_matrix(const Graph& g);

/** W = B D^-1 together with the graph and degree vector it came from. */
struct WeightedIncidence
{
    RatMatrix matrix;
    Graph graph;
    RatVector degs;
};

/** Throws DegenerateInput if some vertex is isolated. */
WeightedIncidence weighted_incidence(const Graph& g);

/**
 * ||W x||_inf / ||x||_inf, i.e. max over edges of |x_i/d_i + x_j/d_j| divided
 * by max_i |x_i|.  Any nonzero x gives an upper bound on mu_inf.
 */
Rational evaluate(const WeightedIncidence& w, std::span<const Rational> x);

/** Minimizer of ||M x||_inf over the unit sup-sphere. */
struct EigenResult
{
    Rational mu;
    RatVector optimal_x;          // ||optimal_x||_inf = 1
    std::size_t tight_edge = 0;   // lowest row of M attaining ||M x||_inf
    std::size_t fixed_coord = 0;  // coordinate held at +1 in the winning face
};

/**
 * min_{||x||_inf = 1} ||M x||_inf by one LP per face x_k = +1 of the cube
 * (the sign is free by symmetry).  Ties go to the lowest k.
 */
EigenResult sup_sphere_minimum(const RatMatrix& m);

/**
 * Smallest normalized signless infinity-Laplacian eigenvalue.
 *
 * Bipartite graphs return 0 with the certificate x_i = s_i d_i / max d for a
 * bipartition s.  Throws HypothesisViolation when g is disconnected and
 * DegenerateInput when it has an isolated vertex.
 */
EigenResult mu_infinity(const Graph& g);

/** 2 / max_u l(u), with l(u) the shortest odd closed walk through u; 0 if bipartite. */
Rational q_infinity_formula(const Graph& g);

/** min_{||x||_inf = 1} max_{i~j} |x_i + x_j| by face LPs on B. */
Rational q_infinity_lp(const Graph& g);

}  // namespace siglap
