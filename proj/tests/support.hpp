#pragma once

// Random generators and independent oracles shared by the test binaries.

#include "algch/catalog.hpp"
#include "algch/charclasses.hpp"
#include "algch/random.hpp"

#include <vector>

namespace algch::testing {

/// Named corpus of valid constant algebroids used across the suites.
struct CorpusEntry {
    std::string name;
    ConstantAlgebroid algebroid;
    bool lie_algebra; // base dimension 0
};

inline std::vector<CorpusEntry> corpus()
{
    using namespace catalog;
    std::vector<CorpusEntry> v;
    v.push_back({"abelian2", abelian(2), true});
    v.push_back({"heisenberg", heisenberg(), true});
    v.push_back({"so3", so3(), true});
    v.push_back({"q_trace2", q_family(1, 0, 0, 1), true});
    v.push_back({"q_trace0", q_family(1, 0, 0, -1), true});
    v.push_back({"q_mixed", q_family(Scalar(Rational(1, 2)), 3, -1, 2), true});
    v.push_back({"tt1", tangent_torus(1), false});
    v.push_back({"tt2", tangent_torus(2), false});
    v.push_back({"line_ext", line_extension(Scalar(Rational(3, 2))), false});
    v.push_back({"tt1_x_q", direct_product(tangent_torus(1), q_family(2, 1, 0, 1)), false});
    return v;
}

/// Q-family member with an anchor on e3 over T^n (brackets land in span(e1, e2) = ker rho).
inline ConstantAlgebroid anchored_q_family(ExactRandom& rng, std::size_t n)
{
    auto g = catalog::q_family(rng.real_scalar(), rng.real_scalar(), rng.real_scalar(), rng.real_scalar());
    ConstantAlgebroid a(Matrix(n, 3), g.structure());
    for (std::size_t x = 0; x < n; ++x)
        a.anchor()(x, 2) = rng.real_scalar();
    return a;
}

/// Random valid algebroid with rank <= max_rank and base_dim + rank <= max_total.
inline ConstantAlgebroid random_algebroid(ExactRandom& rng, std::size_t max_rank, std::size_t max_total = 6)
{
    using namespace catalog;
    for (;;) {
        ConstantAlgebroid a;
        switch (rng.integer(0, 7)) {
        case 0: a = abelian(static_cast<std::size_t>(rng.integer(1, 3))); break;
        case 1: a = heisenberg(); break;
        case 2: a = so3(); break;
        case 3: a = q_family(rng.real_scalar(), rng.real_scalar(), rng.real_scalar(), rng.real_scalar()); break;
        case 4: a = tangent_torus(static_cast<std::size_t>(rng.integer(1, 2))); break;
        case 5: a = line_extension(rng.real_scalar()); break;
        case 6: a = anchored_q_family(rng, static_cast<std::size_t>(rng.integer(1, 2))); break;
        default: a = direct_product(tangent_torus(1), abelian(static_cast<std::size_t>(rng.integer(1, 2)))); break;
        }
        if (a.rank() <= max_rank && a.rank() + a.base_dim() <= max_total)
            return a;
    }
}

inline Matrix random_parity_matrix(ExactRandom& rng, const GradedBundle& d, bool complex)
{
    const Matrix e = complex ? rng.complex_matrix(d.even(), d.even()) : rng.real_matrix(d.even(), d.even());
    const Matrix o = complex ? rng.complex_matrix(d.odd(), d.odd()) : rng.real_matrix(d.odd(), d.odd());
    return direct_sum(e, o);
}

inline Connection random_connection(ExactRandom& rng, const ConstantAlgebroid& a, const GradedBundle& d,
                                    bool complex)
{
    std::vector<Matrix> om;
    for (std::size_t i = 0; i < a.rank(); ++i)
        om.push_back(random_parity_matrix(rng, d, complex));
    return {a, d, std::move(om)};
}

inline GradedBundle random_bundle(ExactRandom& rng, std::size_t max_even = 2, std::size_t max_odd = 2)
{
    for (;;) {
        const auto e = static_cast<std::size_t>(rng.integer(0, static_cast<long>(max_even)));
        const auto o = static_cast<std::size_t>(rng.integer(0, static_cast<long>(max_odd)));
        if (e + o > 0)
            return {e, o};
    }
}

inline HermitianMetric random_metric(ExactRandom& rng, const GradedBundle& d, bool complex)
{
    return {rng.positive_metric(d.even(), complex), rng.positive_metric(d.odd(), complex)};
}

inline TangentConnection random_tm(ExactRandom& rng, const ConstantAlgebroid& a)
{
    TangentConnection tm;
    for (std::size_t l = 0; l < a.base_dim(); ++l)
        tm.gamma.push_back(rng.real_matrix(a.rank(), a.rank()));
    return tm;
}

/// Exact integral over [0, 1] of a polynomial given by its values at equispaced nodes
/// j/(m-1), j = 0..m-1 (exact for degree < m). Weights from the moment equations.
inline Scalar newton_cotes(const std::vector<Scalar>& values)
{
    const std::size_t m = values.size();
    if (m == 1)
        return values[0];
    Matrix V(m, m);
    std::vector<Scalar> moments(m);
    for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t j = 0; j < m; ++j) {
            Scalar node(Rational(static_cast<long>(j), static_cast<long>(m - 1)));
            Scalar pw(1);
            for (std::size_t e = 0; e < row; ++e)
                pw *= node;
            V(row, j) = pw;
        }
        moments[row] = Scalar(Rational(1, static_cast<long>(row + 1)));
    }
    const auto w = solve(V, moments);
    Scalar total;
    for (std::size_t j = 0; j < m; ++j)
        total += (*w)[j] * values[j];
    return total;
}

/// Independent route for the p = 1 transgression: q * int_0^1 Tr_s(A ^ R_t^{q-1}) dt with
/// A = Omega^1 - Omega^0 and R_t the curvature of nabla_0 + t A, by exact quadrature over
/// plain matrices evaluated at rational nodes.
inline ScalarForm cs1_oracle(const Connection& c0, const Connection& c1, unsigned q)
{
    const auto& a = c0.algebroid();
    const std::size_t r = a.rank();
    if (q == 0)
        return {r, 0, Scalar()};
    const std::size_t nodes = 2 * (q - 1) + 1;
    std::vector<ScalarForm> samples;
    EndForm A = c1.connection_form() - c0.connection_form();
    for (std::size_t j = 0; j < nodes; ++j) {
        const Scalar t = nodes == 1 ? Scalar() : Scalar(Rational(static_cast<long>(j), static_cast<long>(nodes - 1)));
        std::vector<Matrix> om;
        for (std::size_t i = 0; i < r; ++i)
            om.push_back(c0.omega(i) + t * (c1.omega(i) - c0.omega(i)));
        const Connection ct(a, c0.bundle(), om);
        const auto R = curvature(ct);
        auto Rp = wedge_power(R, q - 1, Matrix::identity(c0.dim()), [](const Matrix& x, const Matrix& y) { return x * y; },
                              Exec::serial);
        samples.push_back(supertrace(wedge_end(A, Rp, Exec::serial), c0.bundle().even()));
    }
    ScalarForm out(r, 2 * q - 1, Scalar());
    for (std::size_t k = 0; k < out.size(); ++k) {
        std::vector<Scalar> vals;
        for (const auto& s : samples)
            vals.push_back(s.value_at(k));
        out.value_at(k) = Scalar(static_cast<long>(q)) * newton_cotes(vals);
    }
    return out;
}

inline bool is_real_form(const ScalarForm& f)
{
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!f.value_at(i).is_real())
            return false;
    return true;
}

inline ScalarForm conj_form(const ScalarForm& f)
{
    return f.map([](const Scalar& s) { return s.conj(); });
}

} // namespace algch::testing

namespace algch::testing {

/// (m|m) bundle with an invertible even-to-odd boundary P, plus a connection commuting with it:
/// even block X random, odd block P X P^{-1}.
struct BoundaryPair {
    GradedBundle bundle;
    Connection connection;
};

inline Matrix random_invertible(ExactRandom& rng, std::size_t m)
{
    for (;;) {
        Matrix p = rng.real_matrix(m, m);
        if (!determinant(p).is_zero())
            return p;
    }
}

inline BoundaryPair random_boundary_connection(ExactRandom& rng, const ConstantAlgebroid& a, std::size_t m,
                                               bool complex)
{
    const Matrix p = random_invertible(rng, m);
    GradedBundle d(m, m, p, Matrix(m, m));
    std::vector<Matrix> om;
    for (std::size_t i = 0; i < a.rank(); ++i) {
        const Matrix x = complex ? rng.complex_matrix(m, m) : rng.real_matrix(m, m);
        om.push_back(direct_sum(x, p * x * inverse(p)));
    }
    return {d, Connection(a, d, std::move(om))};
}

inline Matrix random_odd(ExactRandom& rng, const GradedBundle& d, bool complex)
{
    Matrix t(d.dim(), d.dim());
    const Matrix eo = complex ? rng.complex_matrix(d.odd(), d.even()) : rng.real_matrix(d.odd(), d.even());
    const Matrix oe = complex ? rng.complex_matrix(d.even(), d.odd()) : rng.real_matrix(d.even(), d.odd());
    t.set_block(d.even(), 0, eo);
    t.set_block(0, d.even(), oe);
    return t;
}

/// Connection equivalent to c through a random theta: Omega_i + [theta_i, boundary].
inline Connection random_equivalent(ExactRandom& rng, const Connection& c, bool complex)
{
    std::vector<Matrix> om;
    for (std::size_t i = 0; i < c.algebroid().rank(); ++i)
        om.push_back(c.omega(i) + graded_bracket_with_boundary(random_odd(rng, c.bundle(), complex), c.bundle()));
    return {c.algebroid(), c.bundle(), std::move(om)};
}

} // namespace algch::testing

namespace algch::testing {

/// Flat connection on a Lie algebra: conjugated copies of ad (or the trivial representation) in
/// each parity.
inline Connection random_flat_connection(ExactRandom& rng, const ConstantAlgebroid& g, bool complex)
{
    const std::size_t r = g.rank();
    const bool even_ad = rng.coin(), odd_ad = rng.coin();
    const std::size_t e = even_ad ? r : static_cast<std::size_t>(rng.integer(1, 2));
    const std::size_t o = odd_ad ? r : static_cast<std::size_t>(rng.integer(0, 1));
    auto conjugator = [&](std::size_t m) {
        for (;;) {
            Matrix s = random_invertible(rng, m);
            if (complex)
                s = s + Scalar::i() * rng.real_matrix(m, m);
            if (!determinant(s).is_zero())
                return s;
        }
    };
    const Matrix se = conjugator(e), so = conjugator(o);
    std::vector<Matrix> om;
    for (std::size_t i = 0; i < r; ++i) {
        const Matrix ev = even_ad ? se * g.ad(i) * inverse(se) : Matrix(e, e);
        const Matrix od = odd_ad ? so * g.ad(i) * inverse(so) : Matrix(o, o);
        om.push_back(direct_sum(ev, od));
    }
    return {g, GradedBundle(e, o), std::move(om)};
}

inline ConstantAlgebroid random_lie_algebra(ExactRandom& rng)
{
    switch (rng.integer(0, 4)) {
    case 0: return catalog::abelian(static_cast<std::size_t>(rng.integer(1, 3)));
    case 1: return catalog::heisenberg();
    case 2: return catalog::so3();
    default:
        return catalog::q_family(rng.real_scalar(), rng.real_scalar(), rng.real_scalar(), rng.real_scalar());
    }
}

} // namespace algch::testing
