#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "siglap/matrix.hpp"

namespace siglap {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct LPConstraint
{
    RatVector row;
    Relation relation = Relation::LessEqual;
    Rational rhs;
};

struct VariableBounds
{
    std::optional<Rational> lower;
    std::optional<Rational> upper;
};

/** minimize objective . x subject to the constraints and per-variable bounds. */
struct LPProblem
{
    RatVector objective;
    std::vector<LPConstraint> constraints;
    std::vector<VariableBounds> bounds;  // one per variable; both sides empty means free

    LPProblem() = default;
    /** All variables start free. */
    explicit LPProblem(RatVector c) : objective(std::move(c)), bounds(objective.size()) {}

    std::size_t variable_count() const noexcept { return objective.size(); }

    void add(RatVector row, Relation rel, Rational rhs)
    {
        constraints.push_back({std::move(row), rel, std::move(rhs)});
    }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution
{
    LPStatus status = LPStatus::Infeasible;
    std::optional<Rational> value;  // present iff Optimal
    std::optional<RatVector> point; // a basic feasible solution, present iff Optimal
};

/**
 * Exact two-phase simplex with Bland's rule.  Bounds are folded into the
 * standard form by shifting (finite lower), reflecting (upper only) or
 * splitting (free); a finite upper bound on a shifted variable becomes a row.
 * Throws DimensionError on ragged input.
 */
LPSolution solve(const LPProblem& p);

/** True iff x satisfies every constraint and bound of p exactly. */
bool is_feasible_point(const LPProblem& p, std::span<const Rational> x);

struct L1Result
{
    RatVector x;
    Rational value;
};

/**
 * min ||x||_1 subject to A x = b, via x = x+ - x-, x+/- >= 0.
 * Throws InfeasibleError when A x = b has no solution.
 */
L1Result min_l1_affine(const RatMatrix& a, std::span<const Rational> b);

struct WeightedPoint
{
    Rational position;
    Rational weight;
};

struct MedianResult
{
    Rational z;
    Rational value;
};

/**
 * Minimizes f(z) = sum_k w_k |z - p_k|.  Returns the left endpoint of the
 * minimizer interval.  Throws InvalidParameter on empty input or a
 * nonpositive weight.
 */
MedianResult weighted_median_l1(std::span<const WeightedPoint> points);

}  // namespace siglap
