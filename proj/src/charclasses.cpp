#include "algch/charclasses.hpp"

namespace algch {

TangentConnection TangentConnection::zero(const ConstantAlgebroid& a)
{
    return {std::vector<Matrix>(a.base_dim(), Matrix(a.rank(), a.rank()))};
}

void TangentConnection::check(const ConstantAlgebroid& a) const
{
    if (gamma.size() != a.base_dim())
        throw Error("TM-connection needs one matrix per base coordinate");
    for (const auto& g : gamma)
        if (g.rows() != a.rank() || g.cols() != a.rank())
            throw Error("TM-connection matrices must be rank x rank");
}

AdjointData AdjointData::of(const ConstantAlgebroid& a)
{
    return {GradedBundle(a.rank(), a.base_dim(), a.anchor(), Matrix(a.rank(), a.base_dim()))};
}

AdjointSetup adjoint_setup(const ConstantAlgebroid& a, const TangentConnection& tm)
{
    require_valid(a);
    tm.check(a);
    const std::size_t r = a.rank(), n = a.base_dim(), N = r + n;
    const Matrix& rho = a.anchor();
    auto data = AdjointData::of(a);

    std::vector<Matrix> bas, ad, theta;
    for (std::size_t i = 0; i < r; ++i) {
        Matrix m(N, N), adm(N, N), th(N, N);
        // even block, column b: nabla_{rho e_b} e_i + [e_i, e_b]
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t k = 0; k < r; ++k) {
                Scalar v = a.c(i, b, k);
                adm(k, b) = v;
                for (std::size_t l = 0; l < n; ++l)
                    v += rho(l, b) * tm.gamma[l](k, i);
                m(k, b) = v;
            }
        // odd block, column l: rho(nabla_{d/dx_l} e_i); [rho e_i, d/dx_l] = 0 for constant fields
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t x = 0; x < n; ++x) {
                Scalar v;
                for (std::size_t k = 0; k < r; ++k)
                    v += rho(x, k) * tm.gamma[l](k, i);
                m(r + x, r + l) = v;
            }
        // theta(e_i): odd -> even, d/dx_l -> -(nabla_{d/dx_l} e_i)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t k = 0; k < r; ++k)
                th(k, r + l) = -tm.gamma[l](k, i);
        bas.push_back(std::move(m));
        ad.push_back(std::move(adm));
        theta.push_back(std::move(th));
    }
    AdjointSetup s{data, Connection(a, data.bundle, std::move(bas)), Connection(a, data.bundle, std::move(ad)),
                   std::move(theta)};
    for (std::size_t i = 0; i < r; ++i)
        if (!(s.adjoint.omega(i) - s.basic.omega(i) == graded_bracket_with_boundary(s.theta[i], data.bundle)))
            throw Error("adjoint_setup: nabla^ad - nabla^bas != [theta, d]");
    const auto eq = equivalence_witness(s.basic, s.adjoint);
    if (!eq || !eq->supertraces_agree)
        throw Error("adjoint_setup: basic and adjoint connections are not equivalent");
    return s;
}

HermitianMetric adjoint_metric(const Matrix& g_A, const Matrix& g_M) { return {g_A, g_M}; }

HermitianMetric identity_adjoint_metric(const ConstantAlgebroid& a)
{
    return {Matrix::identity(a.rank()), Matrix::identity(a.base_dim())};
}

namespace {

Scalar i_power(unsigned k)
{
    switch (k % 4) {
    case 0: return Scalar(1);
    case 1: return Scalar::i();
    case 2: return Scalar(-1);
    default: return -Scalar::i();
    }
}

} // namespace

std::vector<ScalarForm> chern_character(const Connection& c, unsigned max_q)
{
    std::vector<ScalarForm> out;
    mpz_class fact = 1;
    for (unsigned q = 0; q <= max_q; ++q) {
        if (q > 0)
            fact *= q;
        const Scalar coeff = i_power(q) * Scalar(Rational(mpz_class(1), fact));
        out.push_back(coeff * cs_cochain({c}, q));
    }
    return out;
}

std::vector<ClassReport> secondary_class(const Connection& c, const HermitianMetric& h, unsigned max_q)
{
    for (unsigned q = 1; q <= max_q; ++q)
        if (!cs_cochain({c}, q).is_zero())
            throw Error("secondary_class: primary obstruction cs^" + std::to_string(q) + " does not vanish");
    const Connection ch = h_dual(c, h);
    const auto& a = c.algebroid();
    std::vector<ClassReport> out;
    for (unsigned q = 1; q <= max_q; ++q) {
        ClassReport rep;
        rep.q = q;
        rep.representative = i_power(q + 1) * cs_cochain({c, ch}, q);
        for (std::size_t k = 0; k < rep.representative.size(); ++k)
            if (!rep.representative.value_at(k).is_real())
                throw Error("secondary_class: representative is not real");
        if (!ce_differential(a, rep.representative).is_zero())
            throw Error("secondary_class: representative is not closed");
        rep.witness = coboundary_witness(a, rep.representative);
        rep.is_zero_class = rep.witness.has_value();
        out.push_back(std::move(rep));
    }
    return out;
}

unsigned default_max_q(const ConstantAlgebroid& a)
{
    return static_cast<unsigned>((a.rank() + a.base_dim() + 2) / 2);
}

std::vector<ClassReport> intrinsic_char(const ConstantAlgebroid& a, const TangentConnection& tm,
                                        const HermitianMetric& g, unsigned max_q)
{
    const auto s = adjoint_setup(a, tm);
    return secondary_class(s.basic, g, max_q);
}

ScalarForm trace_character(const ConstantAlgebroid& a)
{
    ScalarForm f(a.rank(), 1, Scalar());
    for (std::size_t i = 0; i < a.rank(); ++i)
        f.value_at(i) = a.ad(i).trace();
    return f;
}

ModularReport modular_class(const ConstantAlgebroid& a, const TangentConnection& tm, const HermitianMetric& g,
                            bool normalize)
{
    ModularReport m{intrinsic_char(a, tm, g, 1).front(), std::nullopt};
    if (normalize)
        m.normalized = modular_kappa.inverse() * m.report.representative;
    return m;
}

} // namespace algch
