#include "algch/catalog.hpp"

namespace algch::catalog {

ConstantAlgebroid abelian(std::size_t r) { return {0, r}; }

ConstantAlgebroid tangent_torus(std::size_t n)
{
    ConstantAlgebroid a(n, n);
    a.anchor() = Matrix::identity(n);
    return a;
}

ConstantAlgebroid heisenberg()
{
    ConstantAlgebroid a(0, 3);
    a.set_bracket(0, 1, {0, 0, 1});
    return a;
}

ConstantAlgebroid so3()
{
    ConstantAlgebroid a(0, 3);
    a.set_bracket(0, 1, {0, 0, 1});
    a.set_bracket(1, 2, {1, 0, 0});
    a.set_bracket(2, 0, {0, 1, 0});
    return a;
}

ConstantAlgebroid q_family(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d)
{
    ConstantAlgebroid g(0, 3);
    g.set_bracket(0, 2, {a, b, 0});
    g.set_bracket(1, 2, {c, d, 0});
    return g;
}

ConstantAlgebroid line_extension(const Scalar& lambda)
{
    ConstantAlgebroid a(1, 2);
    a.anchor()(0, 0) = Scalar(1);
    a.set_bracket(0, 1, {0, lambda});
    return a;
}

} // namespace algch::catalog
