#include "algch/connections.hpp"

namespace algch {

GradedBundle::GradedBundle(std::size_t even, std::size_t odd)
    : even_(even), odd_(odd), even_to_odd_(odd, even), odd_to_even_(even, odd)
{
}

GradedBundle::GradedBundle(std::size_t even, std::size_t odd, Matrix even_to_odd, Matrix odd_to_even)
    : even_(even), odd_(odd), even_to_odd_(std::move(even_to_odd)), odd_to_even_(std::move(odd_to_even))
{
    if (even_to_odd_.rows() != odd || even_to_odd_.cols() != even || odd_to_even_.rows() != even ||
        odd_to_even_.cols() != odd)
        throw Error("boundary blocks have the wrong shape");
    if (!(odd_to_even_ * even_to_odd_).is_zero() || !(even_to_odd_ * odd_to_even_).is_zero())
        throw Error("boundary does not square to zero");
}

GradedBundle GradedBundle::from_boundary(std::size_t even, std::size_t odd, const Matrix& boundary)
{
    if (boundary.rows() != even + odd || boundary.cols() != even + odd)
        throw Error("boundary has the wrong size");
    if (!boundary.block(0, 0, even, even).is_zero() || !boundary.block(even, even, odd, odd).is_zero())
        throw Error("boundary is not odd");
    return {even, odd, boundary.block(even, 0, odd, even), boundary.block(0, even, even, odd)};
}

Matrix GradedBundle::boundary() const
{
    Matrix d(dim(), dim());
    d.set_block(even_, 0, even_to_odd_);
    d.set_block(0, even_, odd_to_even_);
    return d;
}

bool GradedBundle::is_parity_preserving(const Matrix& m) const
{
    return m.rows() == dim() && m.cols() == dim() && m.block(0, even_, even_, odd_).is_zero() &&
           m.block(even_, 0, odd_, even_).is_zero();
}

bool GradedBundle::is_parity_reversing(const Matrix& m) const
{
    return m.rows() == dim() && m.cols() == dim() && m.block(0, 0, even_, even_).is_zero() &&
           m.block(even_, even_, odd_, odd_).is_zero();
}

HermitianMetric::HermitianMetric(Matrix even_block, Matrix odd_block)
    : even_(std::move(even_block)), odd_(std::move(odd_block))
{
    if (!is_positive_definite(even_) || !is_positive_definite(odd_))
        throw Error("metric blocks must be Hermitian positive definite");
}

HermitianMetric HermitianMetric::identity(const GradedBundle& d)
{
    return {Matrix::identity(d.even()), Matrix::identity(d.odd())};
}

Connection::Connection(ConstantAlgebroid algebroid, GradedBundle bundle, std::vector<Matrix> omega)
    : algebroid_(std::move(algebroid)), bundle_(std::move(bundle)), omega_(std::move(omega))
{
    if (omega_.size() != algebroid_.rank())
        throw Error("connection needs one matrix per frame vector");
    for (const auto& m : omega_)
        if (!bundle_.is_parity_preserving(m))
            throw Error("connection matrix does not preserve parity");
}

Connection Connection::trivial(ConstantAlgebroid algebroid, GradedBundle bundle)
{
    const std::size_t r = algebroid.rank(), n = bundle.dim();
    return {std::move(algebroid), std::move(bundle), std::vector<Matrix>(r, Matrix(n, n))};
}

bool Connection::commutes_with_boundary() const
{
    const Matrix d = bundle_.boundary();
    for (const auto& m : omega_)
        if (!commutator(m, d).is_zero())
            return false;
    return true;
}

EndForm Connection::connection_form() const
{
    EndForm a(algebroid_.rank(), 1, Matrix(dim(), dim()));
    for (std::size_t i = 0; i < omega_.size(); ++i)
        a.value_at(i) = omega_[i];
    return a;
}

bool compatible(const Connection& a, const Connection& b)
{
    return a.algebroid() == b.algebroid() && a.bundle().even() == b.bundle().even() &&
           a.bundle().odd() == b.bundle().odd();
}

EndForm curvature(const Connection& c)
{
    const auto& a = c.algebroid();
    const std::size_t r = a.rank();
    EndForm R(r, 2, Matrix(c.dim(), c.dim()));
    for (std::size_t j = 1; j < r; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            Matrix v = commutator(c.omega(i), c.omega(j));
            for (std::size_t k = 0; k < r; ++k)
                if (!a.c(i, j, k).is_zero())
                    v -= a.c(i, j, k) * c.omega(k);
            R[(Mask(1) << i) | (Mask(1) << j)] = std::move(v);
        }
    return R;
}

Scalar supertrace(const Matrix& t, std::size_t even_rank)
{
    if (!t.is_square() || even_rank > t.rows())
        throw Error("supertrace of a malformed endomorphism");
    const std::size_t odd = t.rows() - even_rank;
    if (!t.block(0, even_rank, even_rank, odd).is_zero() || !t.block(even_rank, 0, odd, even_rank).is_zero())
        throw Error("supertrace of an endomorphism that does not preserve parity");
    Scalar s;
    for (std::size_t i = 0; i < t.rows(); ++i)
        s += i < even_rank ? t(i, i) : -t(i, i);
    return s;
}

ScalarForm supertrace(const EndForm& f, std::size_t even_rank)
{
    ScalarForm out(f.frame(), f.degree(), Scalar());
    for (std::size_t i = 0; i < f.size(); ++i)
        out.value_at(i) = supertrace(f.value_at(i), even_rank);
    return out;
}

EndForm wedge_end(const EndForm& a, const EndForm& b, Exec exec)
{
    return wedge(a, b, [](const Matrix& x, const Matrix& y) { return x * y; }, exec);
}

ScalarForm supertrace_curvature_power(const Connection& c, unsigned q)
{
    const auto R = curvature(c);
    const auto Rq = wedge_power(R, q, Matrix::identity(c.dim()), [](const Matrix& x, const Matrix& y) { return x * y; });
    return supertrace(Rq, c.bundle().even());
}

EndForm covariant_differential(const Connection& c, const EndForm& eta)
{
    EndForm out = bracket_differential(c.algebroid(), eta);
    for (std::size_t o = 0; o < out.size(); ++o) {
        const Mask m = out.mask_at(o);
        std::size_t pos = 0;
        for (std::size_t b = 0; b < out.frame(); ++b) {
            if (!(m & (Mask(1) << b)))
                continue;
            const Matrix term = commutator(c.omega(b), eta[m & ~(Mask(1) << b)]);
            if (pos % 2 == 0)
                out.value_at(o) += term;
            else
                out.value_at(o) -= term;
            ++pos;
        }
    }
    return out;
}

namespace {

void check_metric(const Connection& c, const HermitianMetric& h)
{
    if (h.even() != c.bundle().even() || h.odd() != c.bundle().odd())
        throw Error("metric and connection live on different bundles");
}

} // namespace

Connection h_dual(const Connection& c, const HermitianMetric& h)
{
    check_metric(c, h);
    const Matrix H = h.full();
    const Matrix Hinv = h.full_inverse();
    std::vector<Matrix> om;
    om.reserve(c.omegas().size());
    for (const auto& m : c.omegas())
        om.push_back(Hinv * (-m.adjoint()) * H);
    const Matrix d = Hinv * c.bundle().boundary().adjoint() * H;
    return {c.algebroid(), GradedBundle::from_boundary(c.bundle().even(), c.bundle().odd(), d), std::move(om)};
}

Connection metric_average(const Connection& c, const HermitianMetric& h)
{
    const Connection ch = h_dual(c, h);
    const Scalar half(Rational(1, 2));
    std::vector<Matrix> om;
    for (std::size_t i = 0; i < c.omegas().size(); ++i)
        om.push_back(half * (c.omega(i) + ch.omega(i)));
    return {c.algebroid(), c.bundle(), std::move(om)};
}

bool is_metric(const Connection& c, const HermitianMetric& h) { return h_dual(c, h).omegas() == c.omegas(); }

Connection direct_sum(const Connection& c0, const Connection& c1)
{
    if (!(c0.algebroid() == c1.algebroid()))
        throw Error("direct sum of connections over different algebroids");
    const auto& b0 = c0.bundle();
    const auto& b1 = c1.bundle();
    const std::size_t e = b0.even() + b1.even(), o = b0.odd() + b1.odd();
    // Position in the sum of index k of each summand.
    auto place = [&](std::size_t which, std::size_t k) {
        const auto& b = which == 0 ? b0 : b1;
        if (k < b.even())
            return which == 0 ? k : b0.even() + k;
        const std::size_t ko = k - b.even();
        return e + (which == 0 ? ko : b0.odd() + ko);
    };
    auto embed = [&](const Matrix& m0, const Matrix& m1) {
        Matrix m(e + o, e + o);
        for (std::size_t r = 0; r < m0.rows(); ++r)
            for (std::size_t s = 0; s < m0.cols(); ++s)
                m(place(0, r), place(0, s)) = m0(r, s);
        for (std::size_t r = 0; r < m1.rows(); ++r)
            for (std::size_t s = 0; s < m1.cols(); ++s)
                m(place(1, r), place(1, s)) = m1(r, s);
        return m;
    };
    std::vector<Matrix> om;
    for (std::size_t i = 0; i < c0.omegas().size(); ++i)
        om.push_back(embed(c0.omega(i), c1.omega(i)));
    const Matrix d = embed(b0.boundary(), b1.boundary());
    return {c0.algebroid(), GradedBundle::from_boundary(e, o, d), std::move(om)};
}

Matrix graded_bracket_with_boundary(const Matrix& theta, const GradedBundle& d)
{
    return anticommutator(theta, d.boundary());
}

std::optional<Equivalence> equivalence_witness(const Connection& c0, const Connection& c1)
{
    if (!(c0.algebroid() == c1.algebroid()) || !(c0.bundle() == c1.bundle()))
        throw Error("equivalence_witness needs a shared algebroid and bundle");
    const auto& D = c0.bundle();
    const std::size_t n = D.dim(), e = D.even();
    // Unknown coordinates: the off-diagonal entries of theta.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
            if ((r < e) != (s < e))
                slots.emplace_back(r, s);
    Matrix L(n * n, slots.size());
    for (std::size_t u = 0; u < slots.size(); ++u) {
        Matrix basis(n, n);
        basis(slots[u].first, slots[u].second) = Scalar(1);
        const Matrix img = graded_bracket_with_boundary(basis, D);
        for (std::size_t k = 0; k < n * n; ++k)
            L(k, u) = img(k / n, k % n);
    }
    Equivalence eq;
    for (std::size_t i = 0; i < c0.omegas().size(); ++i) {
        const Matrix diff = c1.omega(i) - c0.omega(i);
        std::vector<Scalar> rhs(n * n);
        for (std::size_t k = 0; k < n * n; ++k)
            rhs[k] = diff(k / n, k % n);
        const auto x = solve(L, rhs);
        if (!x)
            return std::nullopt;
        Matrix theta(n, n);
        for (std::size_t u = 0; u < slots.size(); ++u)
            theta(slots[u].first, slots[u].second) = (*x)[u];
        eq.theta.push_back(std::move(theta));
    }
    eq.supertraces_agree = true;
    for (unsigned q = 1; 2 * q <= c0.algebroid().rank(); ++q)
        if (!(supertrace_curvature_power(c0, q) == supertrace_curvature_power(c1, q)))
            eq.supertraces_agree = false;
    return eq;
}

} // namespace algch
