#pragma once

#include "algch/forms.hpp"
#include "algch/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace algch {

/// Lie algebroid over the torus T^n with constant anchor and structure constants,
/// written in a global frame e_0..e_{r-1}. n = 0 is a Lie algebra.
class ConstantAlgebroid {
public:
    ConstantAlgebroid() = default;
    /// Zero anchor, zero brackets.
    ConstantAlgebroid(std::size_t base_dim, std::size_t rank);
    /// anchor is n x r (column i = rho(e_i)); structure has r^3 entries, c[i][j][k] at (i*r+j)*r+k.
    ConstantAlgebroid(Matrix anchor, std::vector<Scalar> structure);

    std::size_t base_dim() const { return anchor_.rows(); }
    std::size_t rank() const { return anchor_.cols(); }

    const Matrix& anchor() const { return anchor_; }
    Matrix& anchor() { return anchor_; }

    /// c[i][j][k]: [e_i, e_j] = sum_k c[i][j][k] e_k.
    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return structure_[(i * rank() + j) * rank() + k]; }
    Scalar& c(std::size_t i, std::size_t j, std::size_t k) { return structure_[(i * rank() + j) * rank() + k]; }

    /// Sets [e_i, e_j] = sum coeffs[k] e_k and [e_j, e_i] = -[e_i, e_j].
    void set_bracket(std::size_t i, std::size_t j, const std::vector<Scalar>& coeffs);

    /// ad_{e_i} as an r x r matrix: column b holds [e_i, e_b].
    Matrix ad(std::size_t i) const;

    const std::vector<Scalar>& structure() const { return structure_; }

    friend bool operator==(const ConstantAlgebroid&, const ConstantAlgebroid&) = default;

private:
    Matrix anchor_;
    std::vector<Scalar> structure_;
};

struct ValidationIssue {
    std::string identity; ///< "antisymmetry", "jacobi", "anchor"
    std::vector<std::size_t> indices;
    std::string describe() const;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

ValidationReport validate_algebroid(const ConstantAlgebroid& a);
/// Throws Error naming the first violated identity.
void require_valid(const ConstantAlgebroid& a);

/// The bracket part of the Chevalley-Eilenberg differential, for forms with any
/// value type V supporting Scalar * V:
///   (d w)(e_{i_0},...,e_{i_k}) = sum_{s<t} (-1)^{s+t} w([e_{i_s}, e_{i_t}], ..., ^s, ..., ^t, ...).
/// On the constant subcomplex the anchor terms vanish, so for scalar forms this is d_A.
template <class V>
Form<V> bracket_differential(const ConstantAlgebroid& a, const Form<V>& w)
{
    const std::size_t r = a.rank();
    if (w.frame() != r)
        throw Error("form does not live on this algebroid");
    Form<V> out(r, w.degree() + 1, w.zero());
    std::vector<std::size_t> idx;
    for (std::size_t o = 0; o < out.size(); ++o) {
        const Mask m = out.mask_at(o);
        idx.clear();
        for (std::size_t b = 0; b < r; ++b)
            if (m & (Mask(1) << b))
                idx.push_back(b);
        V acc = out.zero();
        for (std::size_t s = 0; s < idx.size(); ++s)
            for (std::size_t t = s + 1; t < idx.size(); ++t) {
                const Mask rest = m & ~(Mask(1) << idx[s]) & ~(Mask(1) << idx[t]);
                const int st_sign = ((s + t) % 2 == 0) ? 1 : -1;
                for (std::size_t k = 0; k < r; ++k) {
                    const Scalar& coeff = a.c(idx[s], idx[t], k);
                    if (coeff.is_zero() || (rest & (Mask(1) << k)))
                        continue;
                    // w(e_k, rest...) = (-1)^{#rest below k} w(rest u {k})
                    const int below = std::popcount(rest & ((Mask(1) << k) - 1));
                    const int sgn = st_sign * ((below % 2 == 0) ? 1 : -1);
                    V term = coeff * w[rest | (Mask(1) << k)];
                    if (sgn > 0)
                        acc += term;
                    else
                        acc -= term;
                }
            }
        out.value_at(o) = std::move(acc);
    }
    return out;
}

/// d_A on constant scalar cochains.
ScalarForm ce_differential(const ConstantAlgebroid& a, const ScalarForm& w);

/// Matrix of d_A: degree k -> degree k+1 in the colex bases.
Matrix differential_matrix(const ConstantAlgebroid& a, std::size_t k);

/// dim H^k of the constant subcomplex. Requires k <= rank.
std::size_t betti_number(const ConstantAlgebroid& a, std::size_t k);
std::vector<std::size_t> betti_numbers(const ConstantAlgebroid& a);

/// Some eta with d eta = w, or nullopt if w is not exact. Throws Error if w is not closed
/// or has degree 0 (the constant complex has nothing below degree 0).
std::optional<ScalarForm> coboundary_witness(const ConstantAlgebroid& a, const ScalarForm& w);

/// Base T^{n_a + n_b}, frame (a-frame, b-frame), block-diagonal anchor, no cross brackets.
ConstantAlgebroid direct_product(const ConstantAlgebroid& a, const ConstantAlgebroid& b);

/// Scalar form e^{i_1*} ^ ... ^ e^{i_k*} on a rank-r frame.
ScalarForm basis_form(std::size_t rank, std::initializer_list<std::size_t> idx);
inline ScalarForm zero_form(std::size_t rank, std::size_t degree) { return {rank, degree, Scalar()}; }

} // namespace algch
