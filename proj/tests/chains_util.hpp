#ifndef CHOWOPS_TESTS_CHAINS_UTIL_HPP
#define CHOWOPS_TESTS_CHAINS_UTIL_HPP

#include <vector>

#include "witt.hpp"

namespace chowops::testutil {

// All chains produced by the "Hoffmann-feasible at every step"
// recursion: each i_j is feasible for the running anisotropic
// dimension, which then shrinks by 2*i_j until it reaches <= 1.
inline void collect_feasible_chains(int dim, std::vector<int>& prefix,
                                    std::vector<WittChain>& out, int full_dim)
{
    if (dim <= 1) {
        if (!prefix.empty())
            out.emplace_back(full_dim, prefix);
        return;
    }
    for (int i1 : hoffmann_feasible_i1(dim)) {
        prefix.push_back(i1);
        collect_feasible_chains(dim - 2 * i1, prefix, out, full_dim);
        prefix.pop_back();
    }
}

inline std::vector<WittChain> feasible_chains(int dim)
{
    std::vector<WittChain> out;
    std::vector<int> prefix;
    collect_feasible_chains(dim, prefix, out, dim);
    return out;
}

}  // namespace chowops::testutil

#endif
