#pragma once

#include "algch/transgression.hpp"

#include <optional>
#include <vector>

namespace algch {

/// Constant linear connection nabla: TM ~> A on T^n, one r x r matrix per coordinate
/// field: nabla_{d/dx_l} e_i = sum_k gamma[l](k, i) e_k.
struct TangentConnection {
    std::vector<Matrix> gamma;

    static TangentConnection zero(const ConstantAlgebroid& a);
    /// Throws Error on a count or shape mismatch with a.
    void check(const ConstantAlgebroid& a) const;
};

/// Ad(A) = A (even, rank r) (+) TM (odd, rank n) with boundary (b, u) -> (0, rho b).
struct AdjointData {
    GradedBundle bundle;
    static AdjointData of(const ConstantAlgebroid& a);
};

struct AdjointSetup {
    AdjointData data;
    Connection basic;   ///< nabla^bas
    Connection adjoint; ///< nabla^ad: (b, u) -> ([a, b], [rho a, u]), i.e. ad on A and 0 on TM
    /// Odd theta(e_i) with nabla^ad - nabla^bas = theta d + d theta. It is the negative of
    /// the map (b, u) -> (nabla_u e_i, 0) because the bracket of two odd maps is symmetric.
    std::vector<Matrix> theta;
};

/// Builds Ad(A), the basic connection induced by tm, the adjoint representation and theta;
/// throws Error if the equivalence identity or the solver check fails.
AdjointSetup adjoint_setup(const ConstantAlgebroid& a, const TangentConnection& tm);

/// Metric on Ad(A): g_A on the even block, g_M on the odd block.
HermitianMetric adjoint_metric(const Matrix& g_A, const Matrix& g_M);
HermitianMetric identity_adjoint_metric(const ConstantAlgebroid& a);

/// [i^q / q! * cs^q(c)] for q = 0..max_q.
std::vector<ScalarForm> chern_character(const Connection& c, unsigned max_q);

struct ClassReport {
    unsigned q = 0;
    ScalarForm representative{0, 0, Scalar()};
    bool is_zero_class = false;
    std::optional<ScalarForm> witness;
};

/// u^q(nabla, h) = i^{q+1} cs^q(nabla, nabla^h) for q = 1..max_q, with exactness decided
/// by coboundary_witness. Requires cs^q(nabla) = 0 for 1 <= q <= max_q (Error otherwise);
/// throws Error if a representative fails to be closed or real.
std::vector<ClassReport> secondary_class(const Connection& c, const HermitianMetric& h, unsigned max_q);

/// ceil((r + n + 1) / 2).
unsigned default_max_q(const ConstantAlgebroid& a);

/// Secondary classes of the basic connection on Ad(A) with metric g.
std::vector<ClassReport> intrinsic_char(const ConstantAlgebroid& a, const TangentConnection& tm,
                                        const HermitianMetric& g, unsigned max_q);

/// The q = 1 intrinsic representative equals modular_kappa times the trace character
/// e_i -> Tr(ad e_i). The value comes out of the p = 1, q = 1 transgression:
/// cs^1(nabla, nabla^h)(e_i) = Tr_s(Omega^h_i - Omega_i) = -2 Re Tr_s(Omega_i), times i^2.
inline const Scalar modular_kappa{2};

/// e_i -> Tr(ad e_i).
ScalarForm trace_character(const ConstantAlgebroid& a);

struct ModularReport {
    ClassReport report;
    std::optional<ScalarForm> normalized; ///< representative / modular_kappa, when requested
};

ModularReport modular_class(const ConstantAlgebroid& a, const TangentConnection& tm, const HermitianMetric& g,
                            bool normalize);

} // namespace algch
