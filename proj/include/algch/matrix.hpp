#pragma once

#include "algch/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace algch {

/// Dense row-major matrix over Q(i).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    Scalar trace() const;
    Matrix transpose() const;
    Matrix conj() const;
    /// Conjugate transpose.
    Matrix adjoint() const;

    /// Copy of rows [r0, r0+nr) x cols [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix operator-() const;

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
inline Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

/// Block diagonal diag(a, b).
Matrix direct_sum(const Matrix& a, const Matrix& b);

std::size_t rank(Matrix m);
Scalar determinant(Matrix m);
/// Throws Error when singular.
Matrix inverse(const Matrix& m);

/// One solution x of a*x = b (b is a column vector given as a span), or nullopt
/// when the system is inconsistent. Free variables are set to zero.
std::optional<std::vector<Scalar>> solve(const Matrix& a, std::span<const Scalar> b);

bool is_hermitian(const Matrix& m);
/// Exact Sylvester test: every leading principal minor is real and positive.
bool is_positive_definite(const Matrix& m);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

} // namespace algch
