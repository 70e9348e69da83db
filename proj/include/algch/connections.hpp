#pragma once

#include "algch/algebroid.hpp"

#include <optional>
#include <vector>

namespace algch {

using EndForm = Form<Matrix>;

/// D = D_0 (+) D_1 with an odd boundary map of square zero. Sections are ordered
/// even block first; as a full matrix the boundary is [[0, odd_to_even], [even_to_odd, 0]].
class GradedBundle {
public:
    GradedBundle() = default;
    GradedBundle(std::size_t even, std::size_t odd);
    /// even_to_odd is odd x even, odd_to_even is even x odd. Throws unless the square vanishes.
    GradedBundle(std::size_t even, std::size_t odd, Matrix even_to_odd, Matrix odd_to_even);
    /// From a full odd matrix; throws if it is not off-diagonal or does not square to zero.
    static GradedBundle from_boundary(std::size_t even, std::size_t odd, const Matrix& boundary);

    std::size_t even() const { return even_; }
    std::size_t odd() const { return odd_; }
    std::size_t dim() const { return even_ + odd_; }
    const Matrix& even_to_odd() const { return even_to_odd_; }
    const Matrix& odd_to_even() const { return odd_to_even_; }
    Matrix boundary() const;

    bool is_parity_preserving(const Matrix& m) const;
    bool is_parity_reversing(const Matrix& m) const;

    friend bool operator==(const GradedBundle&, const GradedBundle&) = default;

private:
    std::size_t even_ = 0;
    std::size_t odd_ = 0;
    Matrix even_to_odd_;
    Matrix odd_to_even_;
};

/// Hermitian metric on a graded bundle, block diagonal in the parity splitting.
class HermitianMetric {
public:
    HermitianMetric() = default;
    /// Throws unless both blocks are Hermitian and positive definite.
    HermitianMetric(Matrix even_block, Matrix odd_block);
    static HermitianMetric identity(const GradedBundle& d);

    std::size_t even() const { return even_.rows(); }
    std::size_t odd() const { return odd_.rows(); }
    const Matrix& even_block() const { return even_; }
    const Matrix& odd_block() const { return odd_; }
    Matrix full() const { return direct_sum(even_, odd_); }
    Matrix full_inverse() const { return direct_sum(inverse(even_), inverse(odd_)); }

private:
    Matrix even_;
    Matrix odd_;
};

/// Linear connection of a constant algebroid on a graded bundle, stored by its action
/// Omega_i = nabla_{e_i} on constant sections. Parity preservation is enforced;
/// commuting with the boundary is queried separately, because h-duals and affine
/// combinations used in transgressions need not commute with a fixed boundary.
class Connection {
public:
    Connection(ConstantAlgebroid algebroid, GradedBundle bundle, std::vector<Matrix> omega);
    static Connection trivial(ConstantAlgebroid algebroid, GradedBundle bundle);

    const ConstantAlgebroid& algebroid() const { return algebroid_; }
    const GradedBundle& bundle() const { return bundle_; }
    const std::vector<Matrix>& omegas() const { return omega_; }
    const Matrix& omega(std::size_t i) const { return omega_[i]; }
    std::size_t dim() const { return bundle_.dim(); }

    bool commutes_with_boundary() const;
    /// Endomorphism-valued 1-form e_i -> Omega_i.
    EndForm connection_form() const;

    friend bool operator==(const Connection&, const Connection&) = default;

private:
    ConstantAlgebroid algebroid_;
    GradedBundle bundle_;
    std::vector<Matrix> omega_;
};

/// Same algebroid and same parity ranks (the boundary may differ).
bool compatible(const Connection& a, const Connection& b);

/// R(e_i, e_j) = [Omega_i, Omega_j] - sum_k c[i][j][k] Omega_k.
EndForm curvature(const Connection& c);

/// Tr(T_00) - Tr(T_11); throws Error if T mixes parities.
Scalar supertrace(const Matrix& t, std::size_t even_rank);
ScalarForm supertrace(const EndForm& f, std::size_t even_rank);

/// Wedge product of endomorphism-valued forms (composition in the values).
EndForm wedge_end(const EndForm& a, const EndForm& b, Exec exec = Exec::parallel);
/// Tr_s(R^q) for the curvature of c.
ScalarForm supertrace_curvature_power(const Connection& c, unsigned q);

/// d_nabla on End(D)-valued forms: sum_i (-1)^i [Omega_{x_i}, eta(..^i..)] plus the bracket part.
EndForm covariant_differential(const Connection& c, const EndForm& eta);

/// nabla^h = h^{-1} o nabla^dual o h. On constant data Omega_i -> H^{-1} (-Omega_i^dagger) H.
/// The result lives on the same parity ranks with the h-adjoint boundary H^{-1} d^dagger H,
/// with which it commutes whenever c commutes with d.
Connection h_dual(const Connection& c, const HermitianMetric& h);
/// (nabla + nabla^h) / 2, an h-metric connection.
Connection metric_average(const Connection& c, const HermitianMetric& h);
bool is_metric(const Connection& c, const HermitianMetric& h);

/// Parity-ordered direct sum c0 (+) c1 over the same algebroid.
Connection direct_sum(const Connection& c0, const Connection& c1);

struct Equivalence {
    std::vector<Matrix> theta;  ///< odd endomorphisms theta(e_i)
    bool supertraces_agree = false; ///< Tr_s(R^q) equal for 1 <= 2q <= rank
};

/// Solves nabla^1_{e_i} - nabla^0_{e_i} = theta(e_i) d + d theta(e_i) for odd theta(e_i).
/// Both connections must share algebroid and bundle (Error otherwise).
std::optional<Equivalence> equivalence_witness(const Connection& c0, const Connection& c1);

/// [theta, d] for odd theta: theta d + d theta.
Matrix graded_bracket_with_boundary(const Matrix& theta, const GradedBundle& d);

} // namespace algch
