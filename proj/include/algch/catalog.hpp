#pragma once

#include "algch/algebroid.hpp"

namespace algch::catalog {

/// Abelian Lie algebra of dimension r over a point.
ConstantAlgebroid abelian(std::size_t r);
/// Tangent algebroid of T^n: rank n, identity anchor, zero brackets.
ConstantAlgebroid tangent_torus(std::size_t n);
/// [e1,e2] = e3.
ConstantAlgebroid heisenberg();
/// [e_i, e_j] = eps_ijk e_k.
ConstantAlgebroid so3();
/// [e1,e2] = 0, [e1,e3] = a e1 + b e2, [e2,e3] = c e1 + d e2.
ConstantAlgebroid q_family(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);
/// Rank 2 over T^1: rho(e1) = d/dx, rho(e2) = 0, [e1,e2] = lambda e2.
ConstantAlgebroid line_extension(const Scalar& lambda);

} // namespace algch::catalog
