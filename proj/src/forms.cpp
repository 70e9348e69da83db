#include "algch/forms.hpp"

namespace algch {

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

const std::vector<Mask>& subsets(std::size_t n, std::size_t k)
{
    // Increasing integer order among masks of fixed popcount is colex order.
    static const std::vector<std::vector<std::vector<Mask>>> table = [] {
        std::vector<std::vector<std::vector<Mask>>> t(max_frame + 1);
        for (std::size_t nn = 0; nn <= max_frame; ++nn) {
            t[nn].resize(nn + 1);
            for (Mask m = 0; m < (Mask(1) << nn); ++m)
                t[nn][std::popcount(m)].push_back(m);
        }
        return t;
    }();
    static const std::vector<Mask> empty;
    if (n > max_frame)
        throw Error("frame too large");
    if (k > n)
        return empty;
    return table[n][k];
}

std::size_t subset_rank(Mask m)
{
    std::size_t r = 0;
    std::size_t j = 0;
    while (m) {
        const int b = std::countr_zero(m);
        ++j;
        r += binomial(static_cast<std::size_t>(b), j);
        m &= m - 1;
    }
    return r;
}

int shuffle_sign(Mask a, Mask b)
{
    // Count inversions: pairs (x in a, y in b) with x > y.
    std::size_t inv = 0;
    while (a) {
        const int x = std::countr_zero(a);
        inv += std::popcount(b & ((Mask(1) << x) - 1));
        a &= a - 1;
    }
    return (inv % 2 == 0) ? 1 : -1;
}

int sort_sign(std::span<const std::size_t> idx, Mask& sorted)
{
    sorted = 0;
    std::size_t inv = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= max_frame)
            throw Error("frame index out of range");
        const Mask bit = Mask(1) << idx[i];
        if (sorted & bit)
            return 0;
        // earlier entries greater than idx[i]
        inv += std::popcount(sorted & ~((bit << 1) - 1));
        sorted |= bit;
    }
    return (inv % 2 == 0) ? 1 : -1;
}

} // namespace algch
