#pragma once

#include "algch/charclasses.hpp"

#include <cstdint>
#include <vector>

namespace algch {

/// Coordinate projection p: T^{n+k} -> T^n forgetting the last k coordinates, with a
/// constant metric on the vertical bundle and the coordinate horizontal complement.
struct SubmersionSpec {
    std::size_t k = 1;
    Matrix vertical_metric = Matrix::identity(1);

    static SubmersionSpec with_identity_metric(std::size_t k) { return {k, Matrix::identity(k)}; }
    /// Throws Error unless vertical_metric is k x k Hermitian positive definite.
    void check() const;
};

/// p^!(A) on T^{n+k}, frame (v_1..v_k, hor(e_1)..hor(e_r)), coordinates (x_1..x_n, y_1..y_k).
ConstantAlgebroid pullback_algebroid(const ConstantAlgebroid& a, const SubmersionSpec& s);

/// Precomposition with v_j -> 0, hor(e_i) -> e_i.
ScalarForm pullback_form(const ScalarForm& w, const SubmersionSpec& s);
/// p^! nabla on the same fibre: nabla_{v_j} = 0, nabla_{hor(e_i)} = nabla_{e_i}.
Connection pullback_connection(const Connection& c, const SubmersionSpec& s);

/// Index bookkeeping for Ad(p^!A): even (v, hor e), odd (d/dx, d/dy).
struct AdPullbackLayout {
    std::size_t n, r, k;
    std::size_t dim() const { return 2 * k + r + n; }
    /// Position in Ad(p^!A) of the i-th basis vector of Ad(A) (even then odd).
    std::size_t base_index(std::size_t i) const { return i < r ? k + i : (k + r) + (i - r); }
    bool is_vertical(std::size_t idx) const { return idx < k || idx >= k + r + n; }
};

struct RecipeResult {
    ConstantAlgebroid algebroid;        ///< p^!(A)
    TangentConnection tm;               ///< nabla-bar: T Sigma ~> p^!(A)
    HermitianMetric metric;             ///< g-bar = (g_{p^!A}, g_Sigma) on Ad(p^!A)
    AdjointSetup setup;                 ///< basic connection of nabla-bar
    Connection basic_dual;              ///< nabla-bar^{bas, g-bar}
    bool basic_splits = false;          ///< nabla-bar^bas = nabla^V (+) p^!(nabla^bas)
    bool dual_splits = false;           ///< its g-bar dual = nabla^V (+) p^!(nabla^{bas,g})
    bool vertical_metric = false;       ///< nabla^V is g-bar-metric
};

/// Connection and metric on the pullback built from (tm, g_A, g_M) and the vertical metric,
/// specialised to constant data on tori. Throws Error on non-positive metrics or if the
/// block splitting fails.
RecipeResult submersion_recipe(const ConstantAlgebroid& a, const SubmersionSpec& s, const TangentConnection& tm,
                               const Matrix& g_A, const Matrix& g_M);

struct MoritaTerm {
    unsigned q = 0;
    ScalarForm lhs{0, 0, Scalar()}; ///< cs^q(nabla-bar^bas, nabla-bar^{bas,g-bar})
    ScalarForm rhs{0, 0, Scalar()}; ///< p^* cs^q(nabla^bas, nabla^{bas,g})
    bool equal = false;
    bool lhs_exact = false;
    bool perturbed_cohomologous = false; ///< u^q under a random metric on Ad(p^!A) differs by an exact form
};

struct MoritaReport {
    std::vector<MoritaTerm> terms;
    std::uint64_t seed = 0;
    bool all_equal() const;
    bool all_cohomologous() const;
    bool all_zero() const;
};

/// Compares both sides of the submersion identity for q = 1..max_q, then repeats the intrinsic
/// computation on p^!(A) with a metric drawn from seed and checks cohomologousness.
MoritaReport morita_check(const ConstantAlgebroid& a, const SubmersionSpec& s, const TangentConnection& tm,
                          const Matrix& g_A, const Matrix& g_M, unsigned max_q, std::uint64_t seed);

} // namespace algch
