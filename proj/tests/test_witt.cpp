#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chains_util.hpp"
#include "witt.hpp"

using namespace chowops;

namespace {

// Second, independent implementation of the feasibility predicate,
// with its own 2-adic valuation.
bool brute_force_feasible(int dim, int i1)
{
    if (i1 < 1 || 2 * i1 > dim)
        return false;
    int n = dim - i1;
    long long pow2 = 1;
    while (n % 2 == 0) {
        n /= 2;
        pow2 *= 2;
    }
    return i1 <= pow2;
}

}  // namespace

TEST_CASE("hoffmann_feasible_i1 fixed values")
{
    CHECK(hoffmann_feasible_i1(7) == std::vector<int>{1, 3});
    CHECK(hoffmann_feasible_i1(8) == std::vector<int>{1, 2, 4});
    CHECK(hoffmann_feasible_i1(2) == std::vector<int>{1});
    CHECK_THROWS_AS(hoffmann_feasible_i1(1), std::invalid_argument);
}

TEST_CASE("hoffmann_feasible_i1 agrees with the brute-force predicate, dim <= 64")
{
    for (int dim = 2; dim <= 64; ++dim) {
        const auto feasible = hoffmann_feasible_i1(dim);
        for (int i1 = 1; i1 <= dim; ++i1) {
            const bool in_list =
                std::find(feasible.begin(), feasible.end(), i1) != feasible.end();
            CHECK(in_list == brute_force_feasible(dim, i1));
        }
        // 1 is always feasible, and the list is sorted
        CHECK(feasible.front() == 1);
        CHECK(std::is_sorted(feasible.begin(), feasible.end()));
        // the largest feasible value meets its own bound
        const int m = feasible.back();
        if (m > 1) {
            long long pow2 = 1;
            int n = dim - m;
            while (n % 2 == 0) {
                n /= 2;
                pow2 *= 2;
            }
            CHECK(m == pow2);
        }
    }
}

TEST_CASE("v2_chain_ok")
{
    CHECK(v2_chain_ok(WittChain(7, {1, 2})));        // 0 >= 1-1
    CHECK_FALSE(v2_chain_ok(WittChain(11, {1, 4}))); // 0 >= 2-1 fails
    CHECK(v2_chain_ok(WittChain(7, {2, 1})));        // RHS negative
    CHECK_THROWS_AS(v2_chain_ok(WittChain(5, {1})), std::invalid_argument);
}

TEST_CASE("WittChain validity")
{
    CHECK_NOTHROW(WittChain(5, {3}));  // 2*3 = dim+1: kernel shrinks to a point
    CHECK_NOTHROW(WittChain(5, {2, 1}));
    CHECK_THROWS_AS(WittChain(5, {4}), std::invalid_argument);  // 8 > 6
    CHECK_THROWS_AS(WittChain(5, {2, 2}), std::invalid_argument);  // sum 8 > 6
    CHECK_THROWS_AS(WittChain(5, {0}), std::invalid_argument);
    CHECK_THROWS_AS(WittChain(1, {1}), std::invalid_argument);
}

TEST_CASE("inq_allowed_dims")
{
    CHECK(inq_allowed_dims(1) == std::set<long long>{0, 2});
    CHECK(inq_allowed_dims(2) == std::set<long long>{0, 4, 6});
    CHECK(inq_allowed_dims(3) == std::set<long long>{0, 8, 12, 14});
    for (int n = 1; n <= 10; ++n) {
        const auto dims = inq_allowed_dims(n);
        CHECK(static_cast<int>(dims.size()) == n + 1);
        CHECK(*dims.rbegin() == (1LL << (n + 1)) - 2);
        for (long long d : dims)
            CHECK(d % 2 == 0);
    }
}

TEST_CASE("feasible-step chains satisfy the v2 bound, dim <= 32")
{
    for (int dim = 2; dim <= 32; ++dim) {
        for (const auto& chain : testutil::feasible_chains(dim)) {
            if (chain.height() > 1)
                CHECK(v2_chain_ok(chain));
        }
    }
}
