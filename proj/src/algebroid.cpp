#include "algch/algebroid.hpp"

#include <sstream>

namespace algch {

ConstantAlgebroid::ConstantAlgebroid(std::size_t base_dim, std::size_t rank)
    : anchor_(base_dim, rank), structure_(rank * rank * rank)
{
}

ConstantAlgebroid::ConstantAlgebroid(Matrix anchor, std::vector<Scalar> structure)
    : anchor_(std::move(anchor)), structure_(std::move(structure))
{
    const std::size_t r = anchor_.cols();
    if (structure_.size() != r * r * r)
        throw Error("dimension mismatch: anchor has " + std::to_string(r) + " columns but " +
                    std::to_string(structure_.size()) + " structure constants were given");
}

void ConstantAlgebroid::set_bracket(std::size_t i, std::size_t j, const std::vector<Scalar>& coeffs)
{
    if (i >= rank() || j >= rank() || coeffs.size() != rank())
        throw Error("bracket index or length out of range");
    for (std::size_t k = 0; k < rank(); ++k) {
        c(i, j, k) = coeffs[k];
        c(j, i, k) = -coeffs[k];
    }
}

Matrix ConstantAlgebroid::ad(std::size_t i) const
{
    Matrix m(rank(), rank());
    for (std::size_t b = 0; b < rank(); ++b)
        for (std::size_t k = 0; k < rank(); ++k)
            m(k, b) = c(i, b, k);
    return m;
}

std::string ValidationIssue::describe() const
{
    std::ostringstream os;
    os << identity << " violated at (";
    for (std::size_t k = 0; k < indices.size(); ++k)
        os << (k ? "," : "") << indices[k] + 1;
    os << ')';
    return os.str();
}

ValidationReport validate_algebroid(const ConstantAlgebroid& a)
{
    const std::size_t r = a.rank();
    const std::size_t n = a.base_dim();
    if (a.structure().size() != r * r * r)
        throw Error("dimension mismatch between anchor and brackets");
    ValidationReport rep;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                if (a.c(i, j, k) != -a.c(j, i, k))
                    rep.issues.push_back({"antisymmetry", {i, j, k}});
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            for (std::size_t k = j + 1; k < r; ++k)
                for (std::size_t l = 0; l < r; ++l) {
                    Scalar s;
                    for (std::size_t m = 0; m < r; ++m)
                        s += a.c(i, j, m) * a.c(m, k, l) + a.c(j, k, m) * a.c(m, i, l) + a.c(k, i, m) * a.c(m, j, l);
                    if (!s.is_zero())
                        rep.issues.push_back({"jacobi", {i, j, k, l}});
                }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            for (std::size_t x = 0; x < n; ++x) {
                Scalar s;
                for (std::size_t k = 0; k < r; ++k)
                    s += a.c(i, j, k) * a.anchor()(x, k);
                if (!s.is_zero()) {
                    rep.issues.push_back({"anchor", {i, j, x}});
                    break;
                }
            }
    return rep;
}

void require_valid(const ConstantAlgebroid& a)
{
    const auto rep = validate_algebroid(a);
    if (!rep.ok())
        throw Error("invalid algebroid: " + rep.issues.front().describe());
}

ScalarForm ce_differential(const ConstantAlgebroid& a, const ScalarForm& w) { return bracket_differential(a, w); }

Matrix differential_matrix(const ConstantAlgebroid& a, std::size_t k)
{
    const std::size_t r = a.rank();
    const auto& src = subsets(r, k);
    Matrix d(binomial(r, k + 1), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
        ScalarForm e(r, k, Scalar());
        e.value_at(col) = Scalar(1);
        const auto de = ce_differential(a, e);
        for (std::size_t row = 0; row < de.size(); ++row)
            d(row, col) = de.value_at(row);
    }
    return d;
}

std::size_t betti_number(const ConstantAlgebroid& a, std::size_t k)
{
    if (k > a.rank())
        throw Error("degree exceeds rank");
    const std::size_t dim = binomial(a.rank(), k);
    const std::size_t rank_out = rank(differential_matrix(a, k));
    const std::size_t rank_in = k == 0 ? 0 : rank(differential_matrix(a, k - 1));
    return dim - rank_out - rank_in;
}

std::vector<std::size_t> betti_numbers(const ConstantAlgebroid& a)
{
    std::vector<std::size_t> ranks(a.rank() + 1);
    for (std::size_t k = 0; k <= a.rank(); ++k)
        ranks[k] = rank(differential_matrix(a, k));
    std::vector<std::size_t> b(a.rank() + 1);
    for (std::size_t k = 0; k <= a.rank(); ++k)
        b[k] = binomial(a.rank(), k) - ranks[k] - (k ? ranks[k - 1] : 0);
    return b;
}

std::optional<ScalarForm> coboundary_witness(const ConstantAlgebroid& a, const ScalarForm& w)
{
    if (w.frame() != a.rank())
        throw Error("form does not live on this algebroid");
    if (w.degree() == 0)
        throw Error("degree-0 cochains have no coboundary witness");
    if (!ce_differential(a, w).is_zero())
        throw Error("coboundary_witness: input form is not closed");
    ScalarForm eta(a.rank(), w.degree() - 1, Scalar());
    if (w.is_zero())
        return eta;
    if (w.degree() > a.rank())
        return eta;
    std::vector<Scalar> rhs(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        rhs[i] = w.value_at(i);
    const auto x = solve(differential_matrix(a, w.degree() - 1), rhs);
    if (!x)
        return std::nullopt;
    for (std::size_t i = 0; i < eta.size(); ++i)
        eta.value_at(i) = (*x)[i];
    return eta;
}

ConstantAlgebroid direct_product(const ConstantAlgebroid& a, const ConstantAlgebroid& b)
{
    const std::size_t ra = a.rank(), rb = b.rank(), r = ra + rb;
    Matrix anchor(a.base_dim() + b.base_dim(), r);
    anchor.set_block(0, 0, a.anchor());
    anchor.set_block(a.base_dim(), ra, b.anchor());
    ConstantAlgebroid p(std::move(anchor), std::vector<Scalar>(r * r * r));
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ra; ++j)
            for (std::size_t k = 0; k < ra; ++k)
                p.c(i, j, k) = a.c(i, j, k);
    for (std::size_t i = 0; i < rb; ++i)
        for (std::size_t j = 0; j < rb; ++j)
            for (std::size_t k = 0; k < rb; ++k)
                p.c(ra + i, ra + j, ra + k) = b.c(i, j, k);
    return p;
}

ScalarForm basis_form(std::size_t rank, std::initializer_list<std::size_t> idx)
{
    ScalarForm f(rank, idx.size(), Scalar());
    std::vector<std::size_t> v(idx);
    Mask m = 0;
    const int s = sort_sign(v, m);
    if (s == 0)
        return f;
    f[m] = Scalar(static_cast<long>(s));
    return f;
}

} // namespace algch
