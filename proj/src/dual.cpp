#include "dual.hpp"

#include <bit>

namespace chowops {

int DualMonomial::tau_count() const
{
    return std::popcount(tau_mask);
}

std::pair<long long, long long> bidegree(const DualMonomial& m)
{
    long long first = 0, second = 0;
    for (int i = 0; i < 63; ++i) {
        if (!(m.tau_mask >> i & 1))
            continue;
        long long q = 1;
        for (int k = 0; k < i; ++k)
            q *= m.p;
        first += 2 * q - 1;
        second += q - 1;
    }
    for (const auto& [j, r] : m.xi) {
        long long q = 1;
        for (int k = 0; k < j; ++k)
            q *= m.p;
        first += static_cast<long long>(r) * (2 * q - 2);
        second += static_cast<long long>(r) * (q - 1);
    }
    return {first, second};
}

std::optional<SignedDualMonomial> dual_mul(const DualMonomial& m1, const DualMonomial& m2)
{
    if (m1.p != m2.p)
        throw std::invalid_argument("dual_mul: mixed primes");
    if (m1.tau_mask & m2.tau_mask)
        return std::nullopt;  // tau_i^2 = 0

    // Transpositions of odd generators: each tau_j from m2 crosses the
    // taus of m1 with higher index when merged into canonical order.
    int crossings = 0;
    for (int j = 0; j < 63; ++j) {
        if (!(m2.tau_mask >> j & 1))
            continue;
        crossings += std::popcount(m1.tau_mask >> (j + 1));
    }

    SignedDualMonomial r;
    r.m.p = m1.p;
    r.m.tau_mask = m1.tau_mask | m2.tau_mask;
    r.m.xi = m1.xi;
    for (const auto& [j, e] : m2.xi)
        r.m.xi[j] += e;
    r.sign = crossings % 2 == 0 ? 1 : -1;
    return r;
}

Fp pair_with_Pn(const DualMonomial& m, int n, const Prime& p)
{
    if (n < 0)
        throw std::invalid_argument("pair_with_Pn: negative index");
    const DualMonomial expected = DualMonomial::xi_pow(1, n, p);
    return Fp(m == expected ? 1 : 0, p);
}

void BmuElement::add_term(int u_exp, int v_exp, const Fp& c)
{
    if (u_exp < 0 || v_exp < 0)
        throw std::invalid_argument("BmuElement: negative exponent");
    if (c.p != p_.value())
        throw std::invalid_argument("BmuElement: coefficient prime mismatch");
    if (u_exp >= 2 || v_exp > trunc_ || c.is_zero())
        return;
    auto key = std::make_pair(u_exp, v_exp);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero())
        terms_.erase(it);
}

BmuElement BmuElement::operator+(const BmuElement& rhs) const
{
    if (trunc_ != rhs.trunc_ || p_.value() != rhs.p_.value())
        throw std::invalid_argument("BmuElement: truncation/prime mismatch");
    BmuElement r = *this;
    for (const auto& [key, c] : rhs.terms_)
        r.add_term(key.first, key.second, c);
    return r;
}

BmuElement BmuElement::operator*(const BmuElement& rhs) const
{
    if (trunc_ != rhs.trunc_ || p_.value() != rhs.p_.value())
        throw std::invalid_argument("BmuElement: truncation/prime mismatch");
    BmuElement r(p_, trunc_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : rhs.terms_)
            r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

void CoactionElement::add_term(const DualMonomial& m, int u_exp, int v_exp, const Fp& c)
{
    if (m.p != p_.value() || c.p != p_.value())
        throw std::invalid_argument("CoactionElement: prime mismatch");
    if (u_exp >= 2 || v_exp > trunc_ || c.is_zero())
        return;
    auto key = std::make_tuple(m, u_exp, v_exp);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero())
        terms_.erase(it);
}

Fp CoactionElement::coeff(const DualMonomial& m, int u_exp, int v_exp) const
{
    auto it = terms_.find(std::make_tuple(m, u_exp, v_exp));
    return it == terms_.end() ? Fp(0, p_) : it->second;
}

CoactionElement CoactionElement::operator+(const CoactionElement& rhs) const
{
    if (trunc_ != rhs.trunc_ || p_.value() != rhs.p_.value())
        throw std::invalid_argument("CoactionElement: truncation/prime mismatch");
    CoactionElement r = *this;
    for (const auto& [key, c] : rhs.terms_)
        r.add_term(std::get<0>(key), std::get<1>(key), std::get<2>(key), c);
    return r;
}

CoactionElement CoactionElement::operator*(const CoactionElement& rhs) const
{
    if (trunc_ != rhs.trunc_ || p_.value() != rhs.p_.value())
        throw std::invalid_argument("CoactionElement: truncation/prime mismatch");
    CoactionElement r(p_, trunc_);
    for (const auto& [k1, c1] : terms_) {
        const auto& [m1, u1, v1] = k1;
        for (const auto& [k2, c2] : rhs.terms_) {
            const auto& [m2, u2, v2] = k2;
            auto prod = dual_mul(m1, m2);
            if (!prod)
                continue;
            Fp c = c1 * c2;
            // Koszul sign: u^u1 v^v1 crosses the taus of m2; u is odd,
            // v is even in the first grading.
            if ((u1 & 1) && m2.tau_count() % 2)
                c = -c;
            if (prod->sign < 0)
                c = -c;
            r.add_term(prod->m, u1 + u2, v1 + v2, c);
        }
    }
    return r;
}

CoactionElement coaction_of_u(const Prime& p, int truncation)
{
    CoactionElement r(p, truncation);
    r.add_term(DualMonomial::one(p), 1, 0, Fp(1, p));
    long long q = 1;
    for (int i = 0; q <= truncation; ++i) {
        r.add_term(DualMonomial::tau(i, p), 0, static_cast<int>(q), Fp(1, p));
        q *= p.value();
    }
    return r;
}

CoactionElement coaction_of_v(const Prime& p, int truncation)
{
    CoactionElement r(p, truncation);
    r.add_term(DualMonomial::one(p), 0, 1, Fp(1, p));
    long long q = p.value();
    for (int j = 1; q <= truncation; ++j) {
        r.add_term(DualMonomial::xi_pow(j, 1, p), 0, static_cast<int>(q), Fp(1, p));
        q *= p.value();
    }
    return r;
}

CoactionElement coaction_of_monomial(int u_exp, int v_exp, const Prime& p, int truncation)
{
    CoactionElement r(p, truncation);
    r.add_term(DualMonomial::one(p), 0, 0, Fp(1, p));
    const CoactionElement cu = coaction_of_u(p, truncation);
    for (int i = 0; i < u_exp; ++i)
        r = r * cu;
    const CoactionElement cv = coaction_of_v(p, truncation);
    for (int i = 0; i < v_exp; ++i)
        r = r * cv;
    return r;
}

CoactionElement bmu_coaction(const BmuElement& x)
{
    CoactionElement r(x.prime(), x.truncation());
    for (const auto& [key, c] : x.terms()) {
        CoactionElement term = coaction_of_monomial(key.first, key.second, x.prime(), x.truncation());
        CoactionElement scaled(x.prime(), x.truncation());
        for (const auto& [k, tc] : term.terms())
            scaled.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), tc * c);
        r = r + scaled;
    }
    return r;
}

}  // namespace chowops
