#include "colorcomp/diophantine.hpp"

namespace colorcomp {

namespace {

void descend(std::vector<long>& k, long var, long remaining,
             const std::function<void(const std::vector<long>&)>& fn) {
    const long nvars = static_cast<long>(k.size());
    if (var > nvars) {
        if (remaining == 0) fn(k);
        return;
    }
    for (long count = 0; count * var <= remaining; ++count) {
        k[var - 1] = count;
        descend(k, var + 1, remaining - count * var, fn);
    }
    k[var - 1] = 0;
}

}  // namespace

void for_each_weighted_solution(
    long nvars, long target,
    const std::function<void(const std::vector<long>&)>& fn) {
    if (nvars < 0 || target < 0) return;
    std::vector<long> k(nvars, 0);
    descend(k, 1, target, fn);
}

}  // namespace colorcomp
