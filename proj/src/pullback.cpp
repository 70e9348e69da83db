#include "algch/pullback.hpp"

#include "algch/random.hpp"

#include <numeric>

namespace algch {

void SubmersionSpec::check() const
{
    if (k == 0)
        throw Error("submersion needs at least one fibre coordinate");
    if (vertical_metric.rows() != k || !is_positive_definite(vertical_metric))
        throw Error("vertical metric must be k x k Hermitian positive definite");
}

ConstantAlgebroid pullback_algebroid(const ConstantAlgebroid& a, const SubmersionSpec& s)
{
    s.check();
    require_valid(a);
    const std::size_t n = a.base_dim(), r = a.rank(), k = s.k, rr = k + r;
    Matrix anchor(n + k, rr);
    anchor.set_block(0, k, a.anchor());          // hor(e_i) -> h(rho e_i)
    anchor.set_block(n, 0, Matrix::identity(k)); // v_j -> d/dy_j
    ConstantAlgebroid p(std::move(anchor), std::vector<Scalar>(rr * rr * rr));
    // [v_j, .] = 0; constant horizontal lifts close on the original structure constants.
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t l = 0; l < r; ++l)
                p.c(k + i, k + j, k + l) = a.c(i, j, l);
    return p;
}

ScalarForm pullback_form(const ScalarForm& w, const SubmersionSpec& s)
{
    std::vector<std::size_t> embed(w.frame());
    std::iota(embed.begin(), embed.end(), s.k);
    return relabel(w, w.frame() + s.k, embed);
}

Connection pullback_connection(const Connection& c, const SubmersionSpec& s)
{
    std::vector<Matrix> om(s.k, Matrix(c.dim(), c.dim()));
    om.insert(om.end(), c.omegas().begin(), c.omegas().end());
    return {pullback_algebroid(c.algebroid(), s), c.bundle(), std::move(om)};
}

namespace {

// Checks bar = V (+) p^!(base) in the layout, with V the vertical block of bar.
bool splits_as(const Connection& bar, const Connection& base, const AdPullbackLayout& lay)
{
    const std::size_t N = lay.dim();
    for (std::size_t alpha = 0; alpha < lay.k + lay.r; ++alpha) {
        const Matrix& m = bar.omega(alpha);
        for (std::size_t x = 0; x < N; ++x)
            for (std::size_t y = 0; y < N; ++y)
                if (lay.is_vertical(x) != lay.is_vertical(y) && !m(x, y).is_zero())
                    return false;
        const std::size_t nb = lay.r + lay.n;
        for (std::size_t x = 0; x < nb; ++x)
            for (std::size_t y = 0; y < nb; ++y) {
                const Scalar expect = alpha < lay.k ? Scalar() : base.omega(alpha - lay.k)(x, y);
                if (m(lay.base_index(x), lay.base_index(y)) != expect)
                    return false;
            }
    }
    return true;
}

bool same_vertical_part(const Connection& a, const Connection& b, const AdPullbackLayout& lay)
{
    const std::size_t N = lay.dim();
    for (std::size_t alpha = 0; alpha < lay.k + lay.r; ++alpha)
        for (std::size_t x = 0; x < N; ++x)
            for (std::size_t y = 0; y < N; ++y)
                if (lay.is_vertical(x) && lay.is_vertical(y) && a.omega(alpha)(x, y) != b.omega(alpha)(x, y))
                    return false;
    return true;
}

} // namespace

RecipeResult submersion_recipe(const ConstantAlgebroid& a, const SubmersionSpec& s, const TangentConnection& tm,
                               const Matrix& g_A, const Matrix& g_M)
{
    s.check();
    tm.check(a);
    const std::size_t n = a.base_dim(), r = a.rank(), k = s.k;
    const HermitianMetric g = adjoint_metric(g_A, g_M);
    auto pa = pullback_algebroid(a, s);

    // Constant frames on a flat torus: the Riemannian connection of g_Sigma, the operator
    // D and the Ehresmann curvature all vanish; only E_{h(u)} hor(a) = hor(nabla_u a) survives.
    TangentConnection bar_tm{std::vector<Matrix>(n + k, Matrix(k + r, k + r))};
    for (std::size_t l = 0; l < n; ++l)
        bar_tm.gamma[l].set_block(k, k, tm.gamma[l]);

    const HermitianMetric bar_g(direct_sum(s.vertical_metric, g_A), direct_sum(g_M, s.vertical_metric));

    const auto base = adjoint_setup(a, tm);
    const Connection base_dual = h_dual(base.basic, g);
    auto setup = adjoint_setup(pa, bar_tm);
    Connection bar_dual = h_dual(setup.basic, bar_g);

    const AdPullbackLayout lay{n, r, k};
    RecipeResult res{pa, bar_tm, bar_g, setup, bar_dual, false, false, false};
    res.basic_splits = splits_as(setup.basic, base.basic, lay);
    res.dual_splits = splits_as(bar_dual, base_dual, lay);
    res.vertical_metric = same_vertical_part(setup.basic, bar_dual, lay);
    if (!res.basic_splits || !res.dual_splits || !res.vertical_metric)
        throw Error("submersion_recipe: basic connection does not split along V (+) p^*Ad(A)");
    return res;
}

bool MoritaReport::all_equal() const
{
    for (const auto& t : terms)
        if (!t.equal)
            return false;
    return true;
}

bool MoritaReport::all_cohomologous() const
{
    for (const auto& t : terms)
        if (!t.perturbed_cohomologous)
            return false;
    return true;
}

bool MoritaReport::all_zero() const
{
    for (const auto& t : terms)
        if (!t.lhs.is_zero() || !t.rhs.is_zero())
            return false;
    return true;
}

MoritaReport morita_check(const ConstantAlgebroid& a, const SubmersionSpec& s, const TangentConnection& tm,
                          const Matrix& g_A, const Matrix& g_M, unsigned max_q, std::uint64_t seed)
{
    const auto rec = submersion_recipe(a, s, tm, g_A, g_M);
    const auto base = adjoint_setup(a, tm);
    const Connection base_dual = h_dual(base.basic, adjoint_metric(g_A, g_M));

    ExactRandom rng(seed);
    const HermitianMetric perturbed(rng.positive_metric(rec.algebroid.rank(), false),
                                    rng.positive_metric(rec.algebroid.base_dim(), false));
    const auto pert = secondary_class(rec.setup.basic, perturbed, max_q);

    MoritaReport rep;
    rep.seed = seed;
    for (unsigned q = 1; q <= max_q; ++q) {
        MoritaTerm t;
        t.q = q;
        t.lhs = cs_cochain({rec.setup.basic, rec.basic_dual}, q);
        t.rhs = pullback_form(cs_cochain({base.basic, base_dual}, q), s);
        t.equal = t.lhs == t.rhs;
        if (t.lhs.degree() >= 1)
            t.lhs_exact = coboundary_witness(rec.algebroid, t.lhs).has_value();
        else
            t.lhs_exact = t.lhs.is_zero();
        // u^q = i^{q+1} cs^q; compare against the perturbed-metric representative.
        Scalar iq = Scalar(1);
        for (unsigned e = 0; e < q + 1; ++e)
            iq *= Scalar::i();
        const ScalarForm diff = pert[q - 1].representative - iq * t.lhs;
        t.perturbed_cohomologous = ce_differential(rec.algebroid, diff).is_zero() &&
                                   (diff.degree() == 0 ? diff.is_zero()
                                                       : coboundary_witness(rec.algebroid, diff).has_value());
        rep.terms.push_back(std::move(t));
    }
    return rep;
}

} // namespace algch
