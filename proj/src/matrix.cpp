#include "siglap/matrix.hpp"

#include <ostream>
#include <utility>

#include "siglap/errors.hpp"

namespace siglap {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw DimensionError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RatVector RatMatrix::column(std::size_t j) const
{
    RatVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Rational vec_inf_norm(std::span<const Rational> x)
{
    if (x.empty())
        throw IllFormedInput("norm of an empty vector");
    Rational best;
    for (const auto& v : x)
        if (auto a = v.abs(); a > best)
            best = a;
    return best;
}

Rational vec_l1_norm(std::span<const Rational> x)
{
    Rational s;
    for (const auto& v : x)
        s += v.abs();
    return s;
}

Rational induced_inf_norm(const RatMatrix& a)
{
    if (a.empty())
        throw IllFormedInput("norm of an empty matrix");
    Rational best;
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (auto s = vec_l1_norm(a.row(i)); s > best)
            best = s;
    return best;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(RatMatrix& a)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).is_zero())
            ++p;
        if (p == a.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(p, j), a(r, j));

        const Rational inv = a(r, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j)
            a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero())
                continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!a(r, j).is_zero())
                    a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& a)
{
    if (a.empty())
        throw IllFormedInput("rank of an empty matrix");
    RatMatrix work = a;
    return rref(work).size();
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero())
                    c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

RatVector mat_vec(const RatMatrix& a, std::span<const Rational> x)
{
    if (a.cols() != x.size())
        throw DimensionError("mat_vec: matrix has " + std::to_string(a.cols()) +
                             " columns, vector has " + std::to_string(x.size()) + " entries");
    RatVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero() && !x[j].is_zero())
                y[i] += a(i, j) * x[j];
    return y;
}

RatVector vec_mat(std::span<const Rational> x, const RatMatrix& a)
{
    if (a.rows() != x.size())
        throw DimensionError("vec_mat: matrix has " + std::to_string(a.rows()) +
                             " rows, vector has " + std::to_string(x.size()) + " entries");
    RatVector y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero())
                y[j] += x[i] * a(i, j);
    }
    return y;
}

RatMatrix inverse(const RatMatrix& a)
{
    const std::size_t n = a.rows();
    if (n != a.cols() || n == 0)
        throw DimensionError("inverse of a " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " matrix");
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots.back() != n - 1)
        throw DegenerateInput("matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

std::vector<RatVector> null_space(const RatMatrix& a)
{
    RatMatrix r = a;
    const auto pivots = rref(r);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free])
            continue;
        RatVector z(a.cols());
        z[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            z[pivots[k]] = -r(k, free);
        basis.push_back(std::move(z));
    }
    return basis;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m(i, j);
        os << "]\n";
    }
    return os;
}

}  // namespace siglap
