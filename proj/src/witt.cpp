#include "witt.hpp"

#include <algorithm>

namespace chowops {

namespace {
    const Prime kTwo(2);
}

std::vector<int> hoffmann_feasible_i1(int dim)
{
    if (dim < 2)
        throw std::invalid_argument("hoffmann_feasible_i1: dim must be >= 2");
    std::vector<int> r;
    for (int i1 = 1; i1 <= dim / 2; ++i1) {
        const long long bound = 1LL << vp(dim - i1, kTwo);
        if (i1 <= bound)
            r.push_back(i1);
    }
    return r;
}

bool v2_chain_ok(const WittChain& c)
{
    if (c.height() <= 1)
        throw std::invalid_argument("v2_chain_ok: height must be > 1");
    int m = vp(c.indices[1], kTwo);
    for (size_t j = 2; j < c.indices.size(); ++j)
        m = std::min(m, vp(c.indices[j], kTwo));
    return vp(c.indices[0], kTwo) >= m - 1;
}

std::set<long long> inq_allowed_dims(int n)
{
    if (n < 1)
        throw std::invalid_argument("inq_allowed_dims: n must be >= 1");
    std::set<long long> r;
    for (int i = 0; i <= n; ++i)
        r.insert((1LL << (n + 1)) - (1LL << (i + 1)));
    return r;
}

}  // namespace chowops
