#include "algch/polynomial.hpp"

namespace algch {

SimplexPolynomial barycentric(std::size_t simplex_dim, std::size_t m)
{
    if (m > simplex_dim)
        throw Error("barycentric index exceeds simplex dimension");
    SimplexPolynomial f(simplex_dim);
    if (m == 0) {
        f.add_term(Exponents(simplex_dim, 0), Scalar(1));
        for (std::size_t k = 0; k < simplex_dim; ++k) {
            Exponents e(simplex_dim, 0);
            e[k] = 1;
            f.add_term(e, Scalar(-1));
        }
        return f;
    }
    Exponents e(simplex_dim, 0);
    e[m - 1] = 1;
    f.add_term(e, Scalar(1));
    return f;
}

SimplexPolynomial barycentric_monomial(std::size_t simplex_dim, std::span<const unsigned> exps)
{
    if (exps.size() != simplex_dim + 1)
        throw Error("barycentric monomial needs p+1 exponents");
    auto f = SimplexPolynomial::constant(simplex_dim, Scalar(1));
    for (std::size_t m = 0; m <= simplex_dim; ++m) {
        const auto t = barycentric(simplex_dim, m);
        for (unsigned k = 0; k < exps[m]; ++k)
            f = f * t;
    }
    return f;
}

SimplexPolynomial conj(const SimplexPolynomial& f)
{
    return f.map([](const Scalar& s) { return s.conj(); });
}

Scalar simplex_integrate(const SimplexPolynomial& f, std::size_t simplex_dim)
{
    if (f.simplex_dim() != simplex_dim)
        throw Error("polynomial variables do not match the simplex dimension");
    Scalar total;
    for (const auto& [e, c] : f.terms()) {
        mpz_class num = 1;
        unsigned deg = 0;
        for (unsigned a : e) {
            mpz_class fa;
            mpz_fac_ui(fa.get_mpz_t(), a);
            num *= fa;
            deg += a;
        }
        mpz_class den;
        mpz_fac_ui(den.get_mpz_t(), deg + static_cast<unsigned>(simplex_dim));
        total += c * Scalar(Rational(num, den));
    }
    return total;
}

} // namespace algch
