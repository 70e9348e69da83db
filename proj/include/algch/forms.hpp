#pragma once

#include "algch/error.hpp"
#include "algch/scalar.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace algch {

/// A set of frame indices, bit b <-> frame vector e_{b}.
using Mask = std::uint32_t;

inline constexpr std::size_t max_frame = 16;

std::size_t binomial(std::size_t n, std::size_t k);

/// All k-subsets of {0..n-1}, in colex order (the storage order of Form).
const std::vector<Mask>& subsets(std::size_t n, std::size_t k);

/// Colex rank of a mask among subsets of the same size.
std::size_t subset_rank(Mask m);

/// Sign of the permutation that sorts the concatenation (indices of a, indices of b).
/// a and b must be disjoint.
int shuffle_sign(Mask a, Mask b);

/// Sign needed to sort the tuple, or 0 if it repeats an index.
int sort_sign(std::span<const std::size_t> idx, Mask& sorted);

enum class Exec { serial, parallel };

/// Totally antisymmetric k-linear map on a frame of size n with values in V.
/// Only increasing index sets are stored; value at e_{i_1},...,e_{i_k} for an
/// arbitrary tuple is recovered with the sort sign.
template <class V>
class Form {
public:
    using Value = V;

    Form(std::size_t frame, std::size_t degree, V zero)
        : frame_(frame), degree_(degree), zero_(std::move(zero))
    {
        if (frame > max_frame)
            throw Error("frame too large");
        values_.assign(degree <= frame ? binomial(frame, degree) : 0, zero_);
    }

    std::size_t frame() const { return frame_; }
    std::size_t degree() const { return degree_; }
    std::size_t size() const { return values_.size(); }
    const V& zero() const { return zero_; }

    Mask mask_at(std::size_t idx) const { return subsets(frame_, degree_)[idx]; }
    V& value_at(std::size_t idx) { return values_[idx]; }
    const V& value_at(std::size_t idx) const { return values_[idx]; }

    const V& operator[](Mask m) const { return values_[checked_rank(m)]; }
    V& operator[](Mask m) { return values_[checked_rank(m)]; }

    /// Value on an arbitrary index tuple (antisymmetry applied).
    V evaluate(std::span<const std::size_t> idx) const
    {
        if (idx.size() != degree_)
            throw Error("wrong number of arguments for form");
        Mask m = 0;
        const int s = sort_sign(idx, m);
        if (s == 0)
            return zero_;
        return s > 0 ? values_[subset_rank(m)] : -values_[subset_rank(m)];
    }
    V evaluate(std::initializer_list<std::size_t> idx) const { return evaluate(std::span(idx.begin(), idx.size())); }

    bool is_zero() const
    {
        for (const auto& v : values_)
            if (!v.is_zero())
                return false;
        return true;
    }

    template <class F>
    auto map(F&& fn) const
    {
        using D = std::decay_t<decltype(fn(std::declval<const V&>()))>;
        Form<D> out(frame_, degree_, fn(zero_));
        for (std::size_t i = 0; i < values_.size(); ++i)
            out.value_at(i) = fn(values_[i]);
        return out;
    }

    Form& operator+=(const Form& o)
    {
        check_shape(o);
        for (std::size_t i = 0; i < values_.size(); ++i)
            values_[i] += o.values_[i];
        return *this;
    }
    Form& operator-=(const Form& o)
    {
        check_shape(o);
        for (std::size_t i = 0; i < values_.size(); ++i)
            values_[i] -= o.values_[i];
        return *this;
    }
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    Form operator-() const
    {
        return map([](const V& v) { return V(-v); });
    }
    friend Form operator*(const Scalar& s, const Form& f)
    {
        return f.map([&s](const V& v) { return V(s * v); });
    }

    friend bool operator==(const Form& a, const Form& b)
    {
        return a.frame_ == b.frame_ && a.degree_ == b.degree_ && a.values_ == b.values_;
    }

    void check_shape(const Form& o) const
    {
        if (o.frame_ != frame_ || o.degree_ != degree_)
            throw Error("form shape mismatch");
    }

private:
    std::size_t checked_rank(Mask m) const
    {
        if (static_cast<std::size_t>(std::popcount(m)) != degree_ || (frame_ < 32 && (m >> frame_) != 0))
            throw Error("mask does not index this form");
        return subset_rank(m);
    }

    std::size_t frame_;
    std::size_t degree_;
    V zero_;
    std::vector<V> values_;
};

using ScalarForm = Form<Scalar>;

/// (a ^ b)(S) = sum over splittings S = I u J, |I| = deg a, of sign(I,J) * mul(a(I), b(J)).
/// The parallel path distributes output components over OpenMP threads; both paths
/// perform identical exact arithmetic per component and agree bit for bit.
template <class A, class B, class Mul>
auto wedge(const Form<A>& a, const Form<B>& b, Mul&& mul, Exec exec = Exec::parallel)
{
    using D = std::decay_t<decltype(mul(std::declval<const A&>(), std::declval<const B&>()))>;
    if (a.frame() != b.frame())
        throw Error("wedge of forms on different frames");
    const std::size_t ka = a.degree();
    Form<D> out(a.frame(), ka + b.degree(), mul(a.zero(), b.zero()));
    const std::size_t n_out = out.size();

    auto component = [&](std::size_t idx) {
        const Mask m = out.mask_at(idx);
        D acc = out.zero();
        // Enumerate submasks of m with popcount ka.
        Mask s = m;
        while (true) {
            if (static_cast<std::size_t>(std::popcount(s)) == ka) {
                const Mask rest = m & ~s;
                D term = mul(a[s], b[rest]);
                if (shuffle_sign(s, rest) > 0)
                    acc += term;
                else
                    acc -= term;
            }
            if (s == 0)
                break;
            s = (s - 1) & m;
        }
        out.value_at(idx) = std::move(acc);
    };

    if (exec == Exec::serial || n_out < 2) {
        for (std::size_t idx = 0; idx < n_out; ++idx)
            component(idx);
        return out;
    }

    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(n_out); ++idx) {
        try {
            component(static_cast<std::size_t>(idx));
        } catch (...) {
#pragma omp critical(algch_wedge_failure)
            failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

template <class V>
Form<V> wedge(const Form<V>& a, const Form<V>& b, Exec exec = Exec::parallel)
{
    return wedge(a, b, [](const V& x, const V& y) { return V(x * y); }, exec);
}

/// f^q under the given product; q = 0 gives the 0-form `unit`.
template <class V, class Mul>
Form<V> wedge_power(const Form<V>& f, unsigned q, const V& unit, Mul&& mul, Exec exec = Exec::parallel)
{
    Form<V> acc(f.frame(), 0, f.zero());
    acc.value_at(0) = unit;
    for (unsigned k = 0; k < q; ++k)
        acc = wedge(acc, f, mul, exec);
    return acc;
}

/// Constant 0-form.
template <class V>
Form<V> constant_form(std::size_t frame, V value, V zero)
{
    Form<V> f(frame, 0, std::move(zero));
    f.value_at(0) = std::move(value);
    return f;
}

/// Precompose with an injective relabelling of the frame: out(e_{embed[i]}...) = f(e_i...),
/// and out vanishes on index sets that leave the image of embed.
template <class V>
Form<V> relabel(const Form<V>& f, std::size_t new_frame, std::span<const std::size_t> embed)
{
    if (embed.size() != f.frame())
        throw Error("relabel map has wrong arity");
    Form<V> out(new_frame, f.degree(), f.zero());
    std::vector<std::size_t> image;
    for (std::size_t idx = 0; idx < f.size(); ++idx) {
        const Mask m = f.mask_at(idx);
        image.clear();
        for (std::size_t b = 0; b < f.frame(); ++b)
            if (m & (Mask(1) << b))
                image.push_back(embed[b]);
        Mask target = 0;
        const int s = sort_sign(image, target);
        if (s == 0)
            throw Error("relabel map is not injective");
        out[target] = s > 0 ? f.value_at(idx) : V(-f.value_at(idx));
    }
    return out;
}

} // namespace algch
