#include "siglap/lp.hpp"

#include <algorithm>

#include "siglap/errors.hpp"

namespace siglap {

namespace {

// x_j = offset + sign * y[col] - y[neg_col]
struct VarMap
{
    Rational offset;
    std::size_t col = 0;
    int sign = 1;
    std::optional<std::size_t> neg_col;
};

struct StdRow
{
    RatVector a;
    Relation rel;
    Rational rhs;
};

enum class SimplexOutcome { Optimal, Unbounded };

// Dense tableau over nonnegative variables.  Column `width` holds the rhs;
// cost holds reduced costs with cost[width] = -objective.
class Tableau
{
public:
    Tableau(std::size_t width) : width_(width), cost_(width + 1) {}

    std::size_t width() const noexcept { return width_; }
    std::size_t row_count() const noexcept { return rows_.size(); }

    void add_row(RatVector row, std::size_t basic)
    {
        rows_.push_back(std::move(row));
        basis_.push_back(basic);
    }

    const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
    const Rational& rhs(std::size_t r) const { return rows_[r][width_]; }
    std::size_t basic(std::size_t r) const { return basis_[r]; }
    Rational objective() const { return -cost_[width_]; }

    void erase_row(std::size_t r)
    {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

    // Installs costs c (length width) and prices out the current basis.
    void set_costs(const RatVector& c)
    {
        for (std::size_t j = 0; j < width_; ++j)
            cost_[j] = c[j];
        cost_[width_] = 0;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational& cb = c[basis_[r]];
            if (cb.is_zero())
                continue;
            for (std::size_t j = 0; j <= width_; ++j)
                if (!rows_[r][j].is_zero())
                    cost_[j] -= cb * rows_[r][j];
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        RatVector& pr = rows_[r];
        const Rational inv = pr[c].inverse();
        nonzero_.clear();
        for (std::size_t j = 0; j <= width_; ++j)
            if (!pr[j].is_zero()) {
                pr[j] *= inv;
                nonzero_.push_back(j);
            }
        auto eliminate = [&](RatVector& row) {
            if (row[c].is_zero())
                return;
            const Rational f = row[c];
            for (auto j : nonzero_)
                row[j] -= f * pr[j];
        };
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (i != r)
                eliminate(rows_[i]);
        eliminate(cost_);
        basis_[r] = c;
    }

    // Bland's rule over columns [0, limit).
    SimplexOutcome run(std::size_t limit)
    {
        for (;;) {
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j)
                if (cost_[j].sign() < 0) {
                    enter = j;
                    break;
                }
            if (enter == limit)
                return SimplexOutcome::Optimal;

            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                if (rows_[r][enter].sign() <= 0)
                    continue;
                Rational ratio = rows_[r][width_] / rows_[r][enter];
                if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
                    leave = r;
                    best = std::move(ratio);
                }
            }
            if (!leave)
                return SimplexOutcome::Unbounded;
            pivot(*leave, enter);
        }
    }

private:
    std::size_t width_;
    std::vector<RatVector> rows_;
    std::vector<std::size_t> basis_;
    RatVector cost_;
    std::vector<std::size_t> nonzero_;
};

void validate(const LPProblem& p)
{
    const std::size_t n = p.variable_count();
    if (p.bounds.size() != n)
        throw DimensionError("LP has " + std::to_string(n) + " variables but " +
                             std::to_string(p.bounds.size()) + " bound entries");
    for (std::size_t i = 0; i < p.constraints.size(); ++i)
        if (p.constraints[i].row.size() != n)
            throw DimensionError("LP constraint " + std::to_string(i) + " has length " +
                                 std::to_string(p.constraints[i].row.size()) + ", expected " +
                                 std::to_string(n));
}

bool satisfies(const Rational& lhs, Relation rel, const Rational& rhs)
{
    switch (rel) {
    case Relation::LessEqual: return lhs <= rhs;
    case Relation::Equal: return lhs == rhs;
    case Relation::GreaterEqual: return lhs >= rhs;
    }
    return false;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero())
            s += a[i] * b[i];
    return s;
}

}  // namespace

LPSolution solve(const LPProblem& p)
{
    validate(p);
    const std::size_t n = p.variable_count();

    std::vector<VarMap> map(n);
    std::size_t ny = 0;
    std::vector<StdRow> rows;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& [lo, hi] = p.bounds[j];
        if (lo) {
            map[j] = {*lo, ny++, 1, std::nullopt};
        } else if (hi) {
            map[j] = {*hi, ny++, -1, std::nullopt};
        } else {
            map[j] = {Rational(0), ny, 1, ny + 1};
            ny += 2;
        }
    }
    for (const auto& c : p.constraints) {
        StdRow row{RatVector(ny), c.relation, c.rhs};
        for (std::size_t j = 0; j < n; ++j) {
            if (c.row[j].is_zero())
                continue;
            row.a[map[j].col] += map[j].sign > 0 ? c.row[j] : -c.row[j];
            if (map[j].neg_col)
                row.a[*map[j].neg_col] -= c.row[j];
            row.rhs -= c.row[j] * map[j].offset;
        }
        rows.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < n; ++j) {
        const auto& [lo, hi] = p.bounds[j];
        if (lo && hi) {
            StdRow row{RatVector(ny), Relation::LessEqual, *hi - *lo};
            row.a[map[j].col] = 1;
            rows.push_back(std::move(row));
        }
    }

    // rhs >= 0; zero-rhs >= rows become <= rows so they need no artificial.
    std::size_t slacks = 0, artificials = 0;
    for (auto& r : rows) {
        if (r.rhs.sign() < 0 || (r.rhs.is_zero() && r.rel == Relation::GreaterEqual)) {
            for (auto& v : r.a)
                v = -v;
            r.rhs = -r.rhs;
            if (r.rel == Relation::LessEqual)
                r.rel = Relation::GreaterEqual;
            else if (r.rel == Relation::GreaterEqual)
                r.rel = Relation::LessEqual;
        }
        if (r.rel != Relation::Equal)
            ++slacks;
        if (r.rel != Relation::LessEqual)
            ++artificials;
    }

    const std::size_t first_art = ny + slacks;
    const std::size_t width = first_art + artificials;
    Tableau tab(width);
    std::size_t s = ny, a = first_art;
    for (auto& r : rows) {
        RatVector t(width + 1);
        std::copy(r.a.begin(), r.a.end(), t.begin());
        t[width] = r.rhs;
        std::size_t basic = 0;
        if (r.rel == Relation::LessEqual) {
            t[s] = 1;
            basic = s++;
        } else {
            if (r.rel == Relation::GreaterEqual)
                t[s++] = -1;
            t[a] = 1;
            basic = a++;
        }
        tab.add_row(std::move(t), basic);
    }

    if (artificials > 0) {
        RatVector phase1(width);
        for (std::size_t j = first_art; j < width; ++j)
            phase1[j] = 1;
        tab.set_costs(phase1);
        tab.run(width);
        if (tab.objective().sign() > 0)
            return {LPStatus::Infeasible, std::nullopt, std::nullopt};

        // Pivot zero-level artificials out of the basis; rows where that is
        // impossible are linearly dependent and dropped.
        for (std::size_t r = 0; r < tab.row_count();) {
            if (tab.basic(r) < first_art) {
                ++r;
                continue;
            }
            std::size_t j = 0;
            while (j < first_art && tab.at(r, j).is_zero())
                ++j;
            if (j < first_art) {
                tab.pivot(r, j);
                ++r;
            } else {
                tab.erase_row(r);
            }
        }
    }

    RatVector phase2(width);
    for (std::size_t j = 0; j < n; ++j) {
        const Rational& c = p.objective[j];
        phase2[map[j].col] += map[j].sign > 0 ? c : -c;
        if (map[j].neg_col)
            phase2[*map[j].neg_col] -= c;
    }
    tab.set_costs(phase2);
    if (tab.run(first_art) == SimplexOutcome::Unbounded)
        return {LPStatus::Unbounded, std::nullopt, std::nullopt};

    RatVector y(ny);
    for (std::size_t r = 0; r < tab.row_count(); ++r)
        if (tab.basic(r) < ny)
            y[tab.basic(r)] = tab.rhs(r);
    RatVector x(n);
    for (std::size_t j = 0; j < n; ++j) {
        x[j] = map[j].offset;
        if (map[j].sign > 0)
            x[j] += y[map[j].col];
        else
            x[j] -= y[map[j].col];
        if (map[j].neg_col)
            x[j] -= y[*map[j].neg_col];
    }
    Rational value = dot(p.objective, x);
    return {LPStatus::Optimal, std::move(value), std::move(x)};
}

bool is_feasible_point(const LPProblem& p, std::span<const Rational> x)
{
    validate(p);
    if (x.size() != p.variable_count())
        throw DimensionError("point has wrong length");
    for (const auto& c : p.constraints)
        if (!satisfies(dot(c.row, x), c.relation, c.rhs))
            return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (p.bounds[j].lower && x[j] < *p.bounds[j].lower)
            return false;
        if (p.bounds[j].upper && x[j] > *p.bounds[j].upper)
            return false;
    }
    return true;
}

L1Result min_l1_affine(const RatMatrix& a, std::span<const Rational> b)
{
    if (a.rows() != b.size())
        throw DimensionError("min_l1_affine: A has " + std::to_string(a.rows()) + " rows, b has " +
                             std::to_string(b.size()) + " entries");
    const std::size_t n = a.cols();
    LPProblem lp(RatVector(2 * n, Rational(1)));
    for (auto& bd : lp.bounds)
        bd.lower = Rational(0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        RatVector row(2 * n);
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = a(i, j);
            row[n + j] = -a(i, j);
        }
        lp.add(std::move(row), Relation::Equal, b[i]);
    }

    auto sol = solve(lp);
    if (sol.status != LPStatus::Optimal)
        throw InfeasibleError("A x = b has no solution");
    const RatVector& split = *sol.point;
    RatVector x(n);
    for (std::size_t j = 0; j < n; ++j)
        x[j] = split[j] - split[n + j];
    return {std::move(x), std::move(*sol.value)};
}

MedianResult weighted_median_l1(std::span<const WeightedPoint> points)
{
    if (points.empty())
        throw InvalidParameter("weighted median of no points");
    for (const auto& p : points)
        if (p.weight.sign() <= 0)
            throw InvalidParameter("weight " + p.weight.str() + " is not positive");

    std::vector<WeightedPoint> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& l, const auto& r) { return l.position < r.position; });

    Rational total;
    for (const auto& p : sorted)
        total += p.weight;

    // The right derivative of f at z is 2 * W(<= z) - total; the leftmost
    // breakpoint where it turns nonnegative is the left end of the minimizer set.
    Rational cumulative;
    Rational z = sorted.back().position;
    for (const auto& p : sorted) {
        cumulative += p.weight;
        if (Rational(2) * cumulative >= total) {
            z = p.position;
            break;
        }
    }

    Rational value;
    for (const auto& p : sorted)
        value += p.weight * (z - p.position).abs();
    return {std::move(z), std::move(value)};
}

}  // namespace siglap
