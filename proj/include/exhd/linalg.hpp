#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "exhd/rational.hpp"

namespace exhd {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Matrix transpose() const;
    Vector apply(const Vector& x) const;
    Matrix operator*(const Matrix& o) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RowEchelon {
    Matrix reduced;                    // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each non-zero row
};

/// Gauss-Jordan elimination. Exact; the rank is pivots.size().
RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vector> null_space(const Matrix& m);

/// A solution of m x = b with every free variable set to zero, or nullopt
/// when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Rank of a family of vectors of equal length.
std::size_t rank_of(const std::vector<Vector>& vectors);

Rational dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

}  // namespace exhd
