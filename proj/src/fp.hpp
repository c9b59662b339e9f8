#ifndef CHOWOPS_FP_HPP
#define CHOWOPS_FP_HPP

#include <cstdint>
#include <stdexcept>

namespace chowops {

/// A prime modulus, validated at construction.
class Prime {
  public:
    explicit Prime(int p) : p_(p)
    {
        if (p < 2)
            throw std::invalid_argument("Prime: modulus must be >= 2");
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0)
                throw std::invalid_argument("Prime: modulus is composite");
    }

    int value() const { return p_; }
    bool operator==(const Prime& rhs) const = default;

  private:
    int p_;
};

/// Residue in [0, p-1]. Arithmetic requires matching moduli.
struct Fp {
    int v = 0;
    int p = 2;

    Fp() = default;
    Fp(long long value, const Prime& prime) : p(prime.value())
    {
        v = static_cast<int>(value % p);
        if (v < 0)
            v += p;
    }

    bool is_zero() const { return v == 0; }
    bool operator==(const Fp& rhs) const = default;
};

inline void check_same_prime(const Fp& a, const Fp& b)
{
    if (a.p != b.p)
        throw std::invalid_argument("Fp: mixed moduli");
}

inline Fp operator+(const Fp& a, const Fp& b)
{
    check_same_prime(a, b);
    Fp r;
    r.p = a.p;
    r.v = (a.v + b.v) % a.p;
    return r;
}

inline Fp operator-(const Fp& a, const Fp& b)
{
    check_same_prime(a, b);
    Fp r;
    r.p = a.p;
    r.v = (a.v - b.v + a.p) % a.p;
    return r;
}

inline Fp operator*(const Fp& a, const Fp& b)
{
    check_same_prime(a, b);
    Fp r;
    r.p = a.p;
    r.v = static_cast<int>(static_cast<long long>(a.v) * b.v % a.p);
    return r;
}

inline Fp operator-(const Fp& a)
{
    Fp r;
    r.p = a.p;
    r.v = (a.p - a.v) % a.p;
    return r;
}

/// C(n,k) mod p by Lucas' theorem. Returns 0 for k < 0 or k > n.
/// Callers may pass n < 0; every such case falls under the k > n rule
/// used to extend the Adem sums, so the result is 0.
Fp binom_mod_p(long long n, long long k, const Prime& p);

/// Largest e with p^e | n. Rejects n = 0.
int vp(long long n, const Prime& p);

}  // namespace chowops

#endif
