#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "siglap/rational.hpp"

namespace siglap {

using RatVector = std::vector<Rational>;

/** Dense row-major exact matrix. */
class RatMatrix
{
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    /** Throws DimensionError if the rows are ragged. */
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    RatVector column(std::size_t j) const;

    RatMatrix transpose() const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/** max_i |x_i|. Throws IllFormedInput on an empty vector. */
Rational vec_inf_norm(std::span<const Rational> x);

/** Sum of |x_i|. */
Rational vec_l1_norm(std::span<const Rational> x);

/** Max absolute row sum, i.e. the operator norm induced by the sup norm. */
Rational induced_inf_norm(const RatMatrix& a);

/** Rank over the rationals by Gaussian elimination. */
std::size_t rank(const RatMatrix& a);

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatVector mat_vec(const RatMatrix& a, std::span<const Rational> x);

/** Row vector times matrix: x^T A. */
RatVector vec_mat(std::span<const Rational> x, const RatMatrix& a);

/** Inverse of a square matrix. Throws DimensionError if not square, DegenerateInput if singular. */
RatMatrix inverse(const RatMatrix& a);

/**
 * Basis of the right null space {z : A z = 0}, one vector per free column of
 * the reduced row echelon form.
 */
std::vector<RatVector> null_space(const RatMatrix& a);

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

}  // namespace siglap
