#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algch/forms.hpp"
#include "algch/matrix.hpp"
#include "algch/random.hpp"

#include <algorithm>
#include <numeric>

using namespace algch;

namespace {

ScalarForm random_form(ExactRandom& rng, std::size_t frame, std::size_t degree)
{
    ScalarForm f(frame, degree, Scalar());
    for (std::size_t i = 0; i < f.size(); ++i)
        f.value_at(i) = rng.complex_scalar();
    return f;
}

// Permutation sign by counting inversions.
int perm_sign(const std::vector<std::size_t>& v)
{
    int s = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j])
                s = -s;
    return s;
}

long factorial(std::size_t n) { return n <= 1 ? 1 : static_cast<long>(n) * factorial(n - 1); }

// Alternation definition of the wedge: (a^b)(x_1..x_{k+l}) = 1/(k! l!) sum_sigma sgn a(x_sigma..) b(x_sigma..).
Scalar wedge_by_alternation(const ScalarForm& a, const ScalarForm& b, const std::vector<std::size_t>& args)
{
    std::vector<std::size_t> perm(args.size());
    std::iota(perm.begin(), perm.end(), 0);
    Scalar total;
    do {
        std::vector<std::size_t> x(args.size());
        for (std::size_t i = 0; i < args.size(); ++i)
            x[i] = args[perm[i]];
        const std::vector<std::size_t> xa(x.begin(), x.begin() + a.degree());
        const std::vector<std::size_t> xb(x.begin() + a.degree(), x.end());
        const Scalar v = a.evaluate(xa) * b.evaluate(xb);
        total += perm_sign(perm) > 0 ? v : -v;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total * Scalar(Rational(1, factorial(a.degree()) * factorial(b.degree())));
}

} // namespace

TEST_CASE("subset indexing")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 4) == 0);
    for (std::size_t n = 0; n <= 6; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            const auto& s = subsets(n, k);
            REQUIRE(s.size() == binomial(n, k));
            for (std::size_t i = 0; i < s.size(); ++i) {
                CHECK(subset_rank(s[i]) == i);
                if (i > 0)
                    CHECK(s[i - 1] < s[i]);
            }
        }
    CHECK(shuffle_sign(0b01, 0b10) == 1);
    CHECK(shuffle_sign(0b10, 0b01) == -1);
}

TEST_CASE("evaluation is antisymmetric")
{
    ExactRandom rng(1);
    const auto f = random_form(rng, 4, 3);
    CHECK(f.evaluate({0, 1, 3}) == -f.evaluate({1, 0, 3}));
    CHECK(f.evaluate({3, 0, 1}) == f.evaluate({0, 1, 3}));
    CHECK(f.evaluate({0, 0, 3}) == Scalar());
    CHECK_THROWS_AS(f.evaluate({0, 1}), Error);
}

TEST_CASE("wedge matches the alternation formula")
{
    ExactRandom rng(2);
    for (int it = 0; it < 10; ++it) {
        const std::size_t n = 4;
        const auto ka = static_cast<std::size_t>(rng.integer(0, 2));
        const auto kb = static_cast<std::size_t>(rng.integer(0, 2));
        const auto a = random_form(rng, n, ka), b = random_form(rng, n, kb);
        const auto w = wedge(a, b);
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::vector<std::size_t> args;
            for (std::size_t bit = 0; bit < n; ++bit)
                if (w.mask_at(i) & (Mask(1) << bit))
                    args.push_back(bit);
            CHECK(w.value_at(i) == wedge_by_alternation(a, b, args));
        }
    }
}

TEST_CASE("wedge algebra")
{
    ExactRandom rng(3);
    for (int it = 0; it < 20; ++it) {
        const std::size_t n = 5;
        const auto ka = static_cast<std::size_t>(rng.integer(0, 2));
        const auto kb = static_cast<std::size_t>(rng.integer(0, 2));
        const auto kc = static_cast<std::size_t>(rng.integer(0, 1));
        const auto a = random_form(rng, n, ka), b = random_form(rng, n, kb), c = random_form(rng, n, kc);
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        const Scalar sign = ((ka * kb) % 2 == 0) ? Scalar(1) : Scalar(-1);
        CHECK(wedge(a, b) == sign * wedge(b, a));
    }
}

TEST_CASE("parallel wedge agrees with the serial reference")
{
    ExactRandom rng(4);
    auto mul = [](const Matrix& x, const Matrix& y) { return x * y; };
    for (int it = 0; it < 10; ++it) {
        Form<Matrix> a(6, 2, Matrix(2, 2)), b(6, 2, Matrix(2, 2));
        for (std::size_t i = 0; i < a.size(); ++i) {
            a.value_at(i) = rng.complex_matrix(2, 2);
            b.value_at(i) = rng.complex_matrix(2, 2);
        }
        CHECK(wedge(a, b, mul, Exec::serial) == wedge(a, b, mul, Exec::parallel));
        CHECK(wedge_power(a, 3, Matrix::identity(2), mul, Exec::serial) ==
              wedge_power(a, 3, Matrix::identity(2), mul, Exec::parallel));
    }
}

TEST_CASE("relabel into a larger frame")
{
    ScalarForm f(2, 2, Scalar());
    f[0b11] = Scalar(5);
    const std::vector<std::size_t> fwd{1, 3};
    const auto g = relabel(f, 4, fwd);
    CHECK(g[0b1010] == Scalar(5));
    const std::vector<std::size_t> rev{3, 1};
    CHECK(relabel(f, 4, rev)[0b1010] == Scalar(-5));
    const std::vector<std::size_t> bad{1, 1};
    CHECK_THROWS_AS(relabel(f, 4, bad), Error);
}

TEST_CASE("shape checks")
{
    ScalarForm a(3, 1, Scalar()), b(3, 2, Scalar());
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(a[0b11], Error);
    CHECK(ScalarForm(2, 3, Scalar()).size() == 0);
    CHECK_THROWS_AS(wedge(a, ScalarForm(4, 1, Scalar())), Error);
}
