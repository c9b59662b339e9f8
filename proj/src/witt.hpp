#ifndef CHOWOPS_WITT_HPP
#define CHOWOPS_WITT_HPP

#include <set>
#include <vector>

#include "fp.hpp"

namespace chowops {

/// Candidate sequence of relative higher Witt indices of an anisotropic
/// form of dimension dim. Each step removes a hyperbolic block of rank
/// 2*i_j, so sum(2*i_j) <= dim + 1 (the kernel may shrink to dim <= 1).
struct WittChain {
    int dim = 0;
    std::vector<int> indices;

    WittChain(int dim_, std::vector<int> indices_) : dim(dim_), indices(std::move(indices_))
    {
        if (dim < 2)
            throw std::invalid_argument("WittChain: dim must be >= 2");
        long long total = 0;
        for (int i : indices) {
            if (i < 1)
                throw std::invalid_argument("WittChain: indices must be positive");
            total += 2LL * i;
        }
        if (total > dim + 1)
            throw std::invalid_argument("WittChain: indices exceed the form dimension");
    }

    int height() const { return static_cast<int>(indices.size()); }
};

/// All i1 in [1, dim/2] allowed by the first-Witt-index bound
/// i1 <= 2^(v2(dim - i1)). Sorted ascending. This is a superset of the
/// realizable values; the bound is a necessary condition only.
std::vector<int> hoffmann_feasible_i1(int dim);

/// v2(i1) >= min(v2(i2), ..., v2(ih)) - 1. Requires height > 1.
bool v2_chain_ok(const WittChain& c);

/// Possible dimensions of anisotropic forms in I^n_q below 2^(n+1):
/// {2^(n+1) - 2^(i+1) : 0 <= i <= n}.
std::set<long long> inq_allowed_dims(int n);

}  // namespace chowops

#endif
