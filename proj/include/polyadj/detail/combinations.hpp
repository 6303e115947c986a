#ifndef POLYADJ_DETAIL_COMBINATIONS_HPP
#define POLYADJ_DETAIL_COMBINATIONS_HPP

#include <vector>

#include "polyadj/exactlin.hpp"

namespace polyadj::detail {

/// Calls fn(subset) for every k-subset of {0, ..., n-1} in lexicographic order.
/// Stops early if fn returns false.
template <typename Fn>
void for_each_combination(Index n, Index k, Fn&& fn)
{
    if (k < 0 || k > n)
        return;
    std::vector<Index> idx(static_cast<std::size_t>(k));
    for (Index i = 0; i < k; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!fn(static_cast<const std::vector<Index>&>(idx)))
            return;
        Index i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++idx[static_cast<std::size_t>(i)];
        for (Index j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace polyadj::detail

#endif
