#include "exhd/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace exhd {

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::apply(const Vector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
    Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!(*this)(r, c).is_zero() && !x[c].is_zero()) acc += (*this)(r, c) * x[c];
        }
        y[r] = std::move(acc);
    }
    return y;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product size mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                if (!o(k, c).is_zero()) p(r, c) += a * o(k, c);
            }
        }
    return p;
}

RowEchelon row_reduce(Matrix m) {
    RowEchelon out;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        std::size_t pivot = lead;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != lead) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead, c));
        }
        const Rational inv = Rational(1) / m(lead, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(lead, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m(r, col).is_zero()) continue;
            const Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (!m(lead, c).is_zero()) m(r, c) -= factor * m(lead, c);
            }
        }
        out.pivots.push_back(col);
        ++lead;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> null_space(const Matrix& m) {
    const RowEchelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector x(m.cols());
        x[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side size mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const RowEchelon e = row_reduce(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
    return x;
}

std::size_t rank_of(const std::vector<Vector>& vectors) {
    if (vectors.empty()) return 0;
    return rank(Matrix::from_rows(vectors, vectors.front().size()));
}

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rational acc;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
    }
    return acc;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace exhd
