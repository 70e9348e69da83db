#include "algch/matrix.hpp"

#include "algch/error.hpp"

#include <ostream>

namespace algch {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw Error("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar(1);
    return m;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

Scalar Matrix::trace() const
{
    if (!is_square())
        throw Error("trace of a non-square matrix");
    Scalar t;
    for (std::size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::conj() const
{
    Matrix t = *this;
    for (auto& x : t.data_)
        x = x.conj();
    return t;
}

Matrix Matrix::adjoint() const { return transpose().conj(); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw Error("block out of range");
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m)
{
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_)
        throw Error("block out of range");
    for (std::size_t r = 0; r < m.rows_; ++r)
        for (std::size_t c = 0; c < m.cols_; ++c)
            (*this)(r0 + r, c0 + c) = m(r, c);
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("matrix shape mismatch in +");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("matrix shape mismatch in -");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= o.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s)
{
    for (auto& x : data_)
        x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw Error("matrix shape mismatch in *");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix Matrix::operator-() const
{
    Matrix t = *this;
    for (auto& x : t.data_)
        x = -x;
    return t;
}

Matrix direct_sum(const Matrix& a, const Matrix& b)
{
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t ncols_to_reduce)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols_to_reduce && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero())
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(piv, c), m(row, c));
        const Scalar inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero())
                continue;
            const Scalar f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero())
                    m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(Matrix m) { return row_reduce(m, m.cols()).size(); }

Scalar determinant(Matrix m)
{
    if (!m.is_square())
        throw Error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Scalar det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col).is_zero())
            ++piv;
        if (piv == n)
            return Scalar();
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m(piv, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        const Scalar inv = m(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero())
                continue;
            const Scalar f = m(r, col) * inv;
            for (std::size_t c = col; c < n; ++c)
                m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

Matrix inverse(const Matrix& m)
{
    if (!m.is_square())
        throw Error("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Matrix::identity(n));
    if (row_reduce(aug, n).size() != n)
        throw Error("matrix is singular");
    return aug.block(0, n, n, n);
}

std::optional<std::vector<Scalar>> solve(const Matrix& a, std::span<const Scalar> b)
{
    if (b.size() != a.rows())
        throw Error("right-hand side has wrong length");
    Matrix aug(a.rows(), a.cols() + 1);
    aug.set_block(0, 0, a);
    for (std::size_t r = 0; r < a.rows(); ++r)
        aug(r, a.cols()) = b[r];
    const auto pivots = row_reduce(aug, a.cols());
    for (std::size_t r = pivots.size(); r < a.rows(); ++r)
        if (!aug(r, a.cols()).is_zero())
            return std::nullopt;
    std::vector<Scalar> x(a.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        x[pivots[k]] = aug(k, a.cols());
    return x;
}

bool is_hermitian(const Matrix& m) { return m.is_square() && m == m.adjoint(); }

bool is_positive_definite(const Matrix& m)
{
    if (!is_hermitian(m))
        return false;
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        const Scalar minor = determinant(m.block(0, 0, k, k));
        if (!minor.is_real() || sgn(minor.re()) <= 0)
            return false;
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m)
{
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? " " : "") << m(r, c);
    }
    return os << ']';
}

} // namespace algch
