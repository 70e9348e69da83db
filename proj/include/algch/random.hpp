#pragma once

#include "algch/matrix.hpp"

#include <random>

namespace algch {

/// Small exact random values for property checks and metric perturbations.
class ExactRandom {
public:
    explicit ExactRandom(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }
    /// num/den with |num| <= bound, den in [1, max_den].
    Rational rational(long bound = 3, long max_den = 3);
    Scalar real_scalar(long bound = 3, long max_den = 3) { return Scalar(rational(bound, max_den)); }
    Scalar complex_scalar(long bound = 3, long max_den = 3) { return {rational(bound, max_den), rational(bound, max_den)}; }

    Matrix real_matrix(std::size_t rows, std::size_t cols, long bound = 3, long max_den = 3);
    Matrix complex_matrix(std::size_t rows, std::size_t cols, long bound = 2, long max_den = 2);
    /// M^dagger M + I, Hermitian positive definite.
    Matrix positive_metric(std::size_t n, bool complex);

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace algch
