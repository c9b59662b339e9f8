#ifndef CHOWOPS_DUAL_HPP
#define CHOWOPS_DUAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>

#include "fp.hpp"

namespace chowops {

/// Monomial tau_0^{e0} xi_1^{r1} tau_1^{e1} ... in the dual algebra.
/// tau exponents are capped at 1 (tau_i^2 = 0); xi exponents are
/// arbitrary non-negative integers.
struct DualMonomial {
    std::uint64_t tau_mask = 0;   // bit i set when tau_i occurs
    std::map<int, int> xi;        // j >= 1 -> exponent r_j > 0
    int p = 2;

    static DualMonomial one(const Prime& prime) { return DualMonomial{0, {}, prime.value()}; }
    static DualMonomial tau(int i, const Prime& prime)
    {
        if (i < 0 || i > 62)
            throw std::invalid_argument("DualMonomial: tau index out of range");
        return DualMonomial{std::uint64_t{1} << i, {}, prime.value()};
    }
    static DualMonomial xi_pow(int j, int r, const Prime& prime)
    {
        if (j < 1 || r < 0)
            throw std::invalid_argument("DualMonomial: bad xi exponent");
        DualMonomial m{0, {}, prime.value()};
        if (r > 0)
            m.xi[j] = r;
        return m;
    }

    bool is_one() const { return tau_mask == 0 && xi.empty(); }
    /// Number of tau factors; their first degrees are odd, so this is
    /// the sign-relevant parity.
    int tau_count() const;

    bool operator==(const DualMonomial& rhs) const = default;
    bool operator<(const DualMonomial& rhs) const
    {
        return std::tie(tau_mask, xi) < std::tie(rhs.tau_mask, rhs.xi);
    }
};

/// tau_i sits in bidegree (2p^i - 1, p^i - 1), xi_j in (2p^j - 2, p^j - 1).
std::pair<long long, long long> bidegree(const DualMonomial& m);

struct SignedDualMonomial {
    DualMonomial m;
    int sign = 1;  // +1 or -1
};

/// Product of two monomials: zero (nullopt) when some tau_i occurs in
/// both, otherwise the merged monomial with the Koszul sign taken in
/// the first grading (only the tau generators are odd).
std::optional<SignedDualMonomial> dual_mul(const DualMonomial& m1, const DualMonomial& m2);

/// <xi_1^n, P^n> = 1; every other monomial pairs to 0.
Fp pair_with_Pn(const DualMonomial& m, int n, const Prime& p);

/// Element of H^{*,*}(Bmu_p) = F_p[[v]](u)/(u^2), truncated at v^N.
class BmuElement {
  public:
    BmuElement(const Prime& p, int truncation) : p_(p), trunc_(truncation)
    {
        if (truncation < 1)
            throw std::invalid_argument("BmuElement: truncation must be positive");
    }

    static BmuElement u(const Prime& p, int truncation)
    {
        BmuElement x(p, truncation);
        x.add_term(1, 0, Fp(1, p));
        return x;
    }
    static BmuElement v(const Prime& p, int truncation)
    {
        BmuElement x(p, truncation);
        x.add_term(0, 1, Fp(1, p));
        return x;
    }

    /// u^2 = 0 and v-degrees above the truncation are dropped.
    void add_term(int u_exp, int v_exp, const Fp& c);

    const Prime& prime() const { return p_; }
    int truncation() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, Fp>& terms() const { return terms_; }

    BmuElement operator+(const BmuElement& rhs) const;
    BmuElement operator*(const BmuElement& rhs) const;
    bool operator==(const BmuElement& rhs) const = default;

  private:
    Prime p_;
    int trunc_;
    std::map<std::pair<int, int>, Fp> terms_;
};

/// Element of A tensor H^{*,*}(Bmu_p), truncated at v^N.
class CoactionElement {
  public:
    CoactionElement(const Prime& p, int truncation) : p_(p), trunc_(truncation) {}

    void add_term(const DualMonomial& m, int u_exp, int v_exp, const Fp& c);

    const Prime& prime() const { return p_; }
    int truncation() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::tuple<DualMonomial, int, int>, Fp>& terms() const { return terms_; }

    Fp coeff(const DualMonomial& m, int u_exp, int v_exp) const;

    CoactionElement operator+(const CoactionElement& rhs) const;
    /// Graded product; the Koszul sign counts odd-degree crossings
    /// (u past the taus of the other factor).
    CoactionElement operator*(const CoactionElement& rhs) const;
    bool operator==(const CoactionElement& rhs) const = default;

  private:
    Prime p_;
    int trunc_;
    std::map<std::tuple<DualMonomial, int, int>, Fp> terms_;
};

/// Coaction images of the generators:
///   u -> u + sum_i tau_i (x) v^(p^i),   v -> v + sum_j xi_j (x) v^(p^j),
/// truncated at v^N.
CoactionElement coaction_of_u(const Prime& p, int truncation);
CoactionElement coaction_of_v(const Prime& p, int truncation);

/// Ring-homomorphic extension of the generator formulas.
CoactionElement bmu_coaction(const BmuElement& x);

/// coaction(u)^u_exp * coaction(v)^v_exp. Accepts u_exp >= 2, where the
/// result vanishes term by term via tau_i^2 = 0.
CoactionElement coaction_of_monomial(int u_exp, int v_exp, const Prime& p, int truncation);

}  // namespace chowops

#endif
