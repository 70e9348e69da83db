#include "algch/random.hpp"

namespace algch {

Rational ExactRandom::rational(long bound, long max_den)
{
    Rational q(integer(-bound, bound), integer(1, max_den));
    q.canonicalize();
    return q;
}

Matrix ExactRandom::real_matrix(std::size_t rows, std::size_t cols, long bound, long max_den)
{
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = real_scalar(bound, max_den);
    return m;
}

Matrix ExactRandom::complex_matrix(std::size_t rows, std::size_t cols, long bound, long max_den)
{
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = complex_scalar(bound, max_den);
    return m;
}

Matrix ExactRandom::positive_metric(std::size_t n, bool complex)
{
    const Matrix m = complex ? complex_matrix(n, n, 2, 2) : real_matrix(n, n, 2, 2);
    return m.adjoint() * m + Matrix::identity(n);
}

} // namespace algch
