#include "fp.hpp"

namespace chowops {

namespace {

    // C(n,k) mod p for 0 <= k <= n < p, by the multiplicative formula.
    int small_binom(int n, int k, int p)
    {
        if (k > n - k)
            k = n - k;
        long long num = 1, den = 1;
        for (int i = 1; i <= k; ++i) {
            num = num * ((n + 1 - i) % p) % p;
            den = den * (i % p) % p;
        }
        // den is invertible mod p; invert by Fermat.
        long long inv = 1, base = den, e = p - 2;
        while (e) {
            if (e & 1)
                inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<int>(num * inv % p);
    }

}  // namespace

Fp binom_mod_p(long long n, long long k, const Prime& prime)
{
    const int p = prime.value();
    if (k < 0 || k > n)
        return Fp(0, prime);
    long long r = 1;
    while (n || k) {
        const int nd = static_cast<int>(n % p);
        const int kd = static_cast<int>(k % p);
        if (kd > nd)
            return Fp(0, prime);
        r = r * small_binom(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    return Fp(r, prime);
}

int vp(long long n, const Prime& prime)
{
    if (n == 0)
        throw std::invalid_argument("vp: valuation of 0 is infinite");
    if (n < 0)
        n = -n;
    const int p = prime.value();
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

}  // namespace chowops
