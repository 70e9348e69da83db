#pragma once

#include "algch/error.hpp"
#include "algch/scalar.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace algch {

/// Exponents of (t_1, ..., t_p); t_0 never appears in canonical form.
using Exponents = std::vector<unsigned>;

/// Polynomial in the barycentric coordinates of the standard p-simplex, held in
/// the canonical chart (t_1, ..., t_p) with t_0 = 1 - t_1 - ... - t_p eliminated.
/// Coefficients live in any ring C with +, -, * and is_zero() (Scalar, Matrix).
/// Zero terms are never stored, so the zero polynomial has an empty term map.
template <class C>
class Polynomial {
public:
    using Coefficient = C;

    explicit Polynomial(std::size_t simplex_dim = 0) : dim_(simplex_dim) {}

    static Polynomial constant(std::size_t simplex_dim, C c)
    {
        Polynomial f(simplex_dim);
        f.add_term(Exponents(simplex_dim, 0), std::move(c));
        return f;
    }

    std::size_t simplex_dim() const { return dim_; }
    const std::map<Exponents, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, C c)
    {
        if (e.size() != dim_)
            throw Error("monomial arity does not match simplex dimension");
        if (c.is_zero())
            return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(c));
            return;
        }
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        check_dim(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        check_dim(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    Polynomial operator-() const
    {
        Polynomial f(dim_);
        for (const auto& [e, c] : terms_)
            f.terms_.emplace(e, -c);
        return f;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Scalar& s, const Polynomial& f)
    {
        Polynomial g(f.dim_);
        if (s.is_zero())
            return g;
        for (const auto& [e, c] : f.terms_)
            g.add_term(e, c * s);
        return g;
    }

    /// Coefficientwise image under a ring map (e.g. supertrace, conjugation).
    template <class F>
    auto map(F&& fn) const
    {
        using D = std::decay_t<decltype(fn(std::declval<const C&>()))>;
        Polynomial<D> g(dim_);
        for (const auto& [e, c] : terms_)
            g.add_term(e, fn(c));
        return g;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    void check_dim(const Polynomial& o) const
    {
        if (o.dim_ != dim_)
            throw Error("simplex dimension mismatch between polynomials");
    }

private:
    std::size_t dim_;
    std::map<Exponents, C> terms_;
};

template <class A, class B>
auto operator*(const Polynomial<A>& f, const Polynomial<B>& g)
{
    using D = std::decay_t<decltype(std::declval<const A&>() * std::declval<const B&>())>;
    if (f.simplex_dim() != g.simplex_dim())
        throw Error("simplex dimension mismatch between polynomials");
    Polynomial<D> h(f.simplex_dim());
    Exponents e(f.simplex_dim());
    for (const auto& [ef, cf] : f.terms())
        for (const auto& [eg, cg] : g.terms()) {
            for (std::size_t k = 0; k < e.size(); ++k)
                e[k] = ef[k] + eg[k];
            h.add_term(e, cf * cg);
        }
    return h;
}

using SimplexPolynomial = Polynomial<Scalar>;

/// The barycentric coordinate t_m on the p-simplex; t_0 expands to 1 - sum t_k.
SimplexPolynomial barycentric(std::size_t simplex_dim, std::size_t m);

/// t_0^{a_0} * ... * t_p^{a_p}, expanded into canonical form. exps has p+1 entries.
SimplexPolynomial barycentric_monomial(std::size_t simplex_dim, std::span<const unsigned> exps);

SimplexPolynomial conj(const SimplexPolynomial& f);

/// Exact integral over the p-simplex, oriented by the chart (t_1, ..., t_p):
/// sum over monomials of coeff * a_1!...a_p! / (a_1+...+a_p+p)!.
/// Throws Error when f is not a polynomial on the p-simplex.
Scalar simplex_integrate(const SimplexPolynomial& f, std::size_t simplex_dim);

} // namespace algch
