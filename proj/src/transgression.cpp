#include "algch/transgression.hpp"

namespace algch {

namespace {

void check_list(std::span<const Connection> conns)
{
    if (conns.empty())
        throw Error("empty connection list");
    for (const auto& c : conns)
        if (!compatible(c, conns.front()))
            throw Error("incompatible connection list: algebroid or parity ranks differ");
}

PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b) { return a * b; }

} // namespace

AffineForm<PolyMatrix> affine_curvature(std::span<const Connection> conns)
{
    check_list(conns);
    if (conns.size() < 2)
        throw Error("affine_curvature needs p >= 1; use curvature for a single connection");
    const std::size_t p = conns.size() - 1;
    const auto& a = conns.front().algebroid();
    const std::size_t r = a.rank();
    const std::size_t n = conns.front().dim();

    std::vector<PolyMatrix> omega_aff(r, PolyMatrix(p));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t m = 0; m <= p; ++m)
            omega_aff[i] += barycentric(p, m) * PolyMatrix::constant(p, conns[m].omega(i));

    Form<PolyMatrix> R(r + p, 2, PolyMatrix(p));
    for (std::size_t j = 1; j < r; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            PolyMatrix v = omega_aff[i] * omega_aff[j] - omega_aff[j] * omega_aff[i];
            for (std::size_t k = 0; k < r; ++k)
                if (!a.c(i, j, k).is_zero())
                    v -= a.c(i, j, k) * omega_aff[k];
            R[(Mask(1) << i) | (Mask(1) << j)] = std::move(v);
        }
    // R(e_i, d/dt_m) = -d/dt_m Omega_aff_i = -(Omega^(m)_i - Omega^(0)_i).
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t m = 1; m <= p; ++m) {
            Matrix v = conns[0].omega(i) - conns[m].omega(i);
            if (v.rows() != n)
                throw Error("connection size mismatch");
            R[(Mask(1) << i) | (Mask(1) << (r + m - 1))] = PolyMatrix::constant(p, std::move(v));
        }
    return {r, p, std::move(R)};
}

ScalarForm fibre_integrate(const AffineForm<SimplexPolynomial>& w, std::size_t simplex_dim)
{
    if (w.simplex_dim() != simplex_dim)
        throw Error("fibre integration over the wrong simplex");
    const std::size_t r = w.rank();
    if (w.total_degree() < simplex_dim)
        return {r, 0, Scalar()};
    ScalarForm out(r, w.total_degree() - simplex_dim, Scalar());
    const Mask top = AffineForm<SimplexPolynomial>::simplex_mask(r, simplex_dim);
    for (std::size_t i = 0; i < out.size(); ++i)
        out.value_at(i) = simplex_integrate(w.form()[out.mask_at(i) | top], simplex_dim);
    return out;
}

ScalarForm cs_cochain(std::span<const Connection> conns, unsigned q, Exec exec)
{
    check_list(conns);
    const std::size_t p = conns.size() - 1;
    const auto& first = conns.front();
    const std::size_t r = first.algebroid().rank();
    if (p == 0)
        return supertrace_curvature_power(first, q);
    if (2 * q < p)
        return {r, 0, Scalar()};

    const auto R = affine_curvature(conns);
    const auto unit = PolyMatrix::constant(p, Matrix::identity(first.dim()));
    const auto Rq = wedge_power(R.form(), q, unit, poly_mul, exec);
    const std::size_t even = first.bundle().even();
    auto tr = Rq.map([even](const PolyMatrix& m) { return m.map([even](const Matrix& x) { return supertrace(x, even); }); });
    auto integral = fibre_integrate(AffineForm<SimplexPolynomial>(r, p, std::move(tr)), p);
    if (((p + 1) / 2) % 2 == 1)
        integral = -integral;
    return integral;
}

} // namespace algch
