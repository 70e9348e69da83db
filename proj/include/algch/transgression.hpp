#pragma once

#include "algch/connections.hpp"
#include "algch/polynomial.hpp"

#include <span>
#include <vector>

namespace algch {

using PolyMatrix = Polynomial<Matrix>;

/// A form on pr^!(A) over M x Delta^p with coefficients polynomial in (t_1..t_p).
/// Frame order: the algebroid frame e_0..e_{r-1}, then d/dt_1..d/dt_p. Keeping the
/// simplex directions after the algebroid ones fixes the Koszul convention: moving a
/// dt past an algebroid 1-form costs a sign.
template <class V>
class AffineForm {
public:
    AffineForm(std::size_t rank, std::size_t simplex_dim, Form<V> form)
        : rank_(rank), simplex_dim_(simplex_dim), form_(std::move(form))
    {
        if (form_.frame() != rank + simplex_dim)
            throw Error("affine form frame does not match rank + simplex dimension");
    }

    std::size_t rank() const { return rank_; }
    std::size_t simplex_dim() const { return simplex_dim_; }
    std::size_t total_degree() const { return form_.degree(); }
    const Form<V>& form() const { return form_; }

    static Mask simplex_mask(std::size_t rank, std::size_t simplex_dim)
    {
        return ((Mask(1) << simplex_dim) - 1) << rank;
    }
    static std::size_t simplex_degree_of(Mask m, std::size_t rank, std::size_t simplex_dim)
    {
        return static_cast<std::size_t>(std::popcount(m & simplex_mask(rank, simplex_dim)));
    }

    /// Copy keeping only components with exactly s simplex directions.
    AffineForm component(std::size_t s) const
    {
        Form<V> out(form_.frame(), form_.degree(), form_.zero());
        for (std::size_t i = 0; i < form_.size(); ++i)
            if (simplex_degree_of(form_.mask_at(i), rank_, simplex_dim_) == s)
                out.value_at(i) = form_.value_at(i);
        return {rank_, simplex_dim_, std::move(out)};
    }

private:
    std::size_t rank_;
    std::size_t simplex_dim_;
    Form<V> form_;
};

/// Curvature of nabla^aff = sum_m t_m nabla_m on pr^!(A); bidegree (2,0) and (1,1) parts.
/// Throws for fewer than two connections or incompatible connections.
AffineForm<PolyMatrix> affine_curvature(std::span<const Connection> conns);

/// Integrates the top simplex-degree component over Delta^p (chart (t_1..t_p)).
/// Components with fewer simplex directions contribute nothing. A total degree below p
/// yields the zero 0-form.
ScalarForm fibre_integrate(const AffineForm<SimplexPolynomial>& w, std::size_t simplex_dim);

/// The transgression cochain cs^q(nabla_0..nabla_p) of degree 2q - p:
///   p = 0: Tr_s(R^q);  p > 0: (-1)^{floor((p+1)/2)} * integral of Tr_s(R_aff^q).
/// When 2q < p the cochain vanishes and is returned as the zero 0-form.
ScalarForm cs_cochain(std::span<const Connection> conns, unsigned q, Exec exec = Exec::parallel);

inline ScalarForm cs_cochain(std::initializer_list<Connection> conns, unsigned q)
{
    const std::vector<Connection> v(conns);
    return cs_cochain(std::span<const Connection>(v), q);
}

} // namespace algch
