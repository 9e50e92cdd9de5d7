#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

namespace monores {

/// Calls fn(span of k indices) for every k-subset of {0, ..., size-1} in
/// lexicographic order. The empty subset is visited once when k == 0.
/// Returning false from fn stops the enumeration.
template <class Fn>
void forEachSubset(std::size_t size, std::size_t k, Fn&& fn) {
    if (k > size) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        if (!fn(std::span<const std::size_t>(idx))) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == size - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace monores
