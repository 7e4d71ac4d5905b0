#pragma once

#include <functional>
#include <vector>

namespace colorcomp {

// Enumerates every vector (k_1,...,k_nvars) of non-negative integers with
// k_1 + 2 k_2 + ... + nvars * k_nvars = target, in ascending lexicographic
// order. The callback receives the full vector.
void for_each_weighted_solution(
    long nvars, long target,
    const std::function<void(const std::vector<long>&)>& fn);

}  // namespace colorcomp
