#ifndef CHOWOPS_STEENROD_HPP
#define CHOWOPS_STEENROD_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fp.hpp"

namespace chowops {

/// CharPChow: operations acting on mod-p Chow groups over a base of
/// characteristic p. Bockstein terms and the classes tau, rho are all
/// zero there, so the engine drops them. Normal forms computed in this
/// mode are valid on Chow-type modules.
///
/// Char0Motivic: the characteristic-0 comparison mode. For p = 2 the
/// coefficients live in F_2[tau, rho]; for odd p they are plain F_p.
enum class Mode { CharPChow, Char0Motivic };

/// Sparse polynomial in tau (bidegree (0,1)) and rho (bidegree (1,1))
/// with F_p coefficients. Outside Char0Motivic p=2 only the constant
/// term is ever populated.
class TauRhoPoly {
  public:
    explicit TauRhoPoly(const Prime& p) : p_(p.value()) {}

    static TauRhoPoly zero(const Prime& p) { return TauRhoPoly(p); }
    static TauRhoPoly scalar(long long v, const Prime& p)
    {
        TauRhoPoly c(p);
        c.add_monomial(0, 0, v);
        return c;
    }
    static TauRhoPoly monomial(int tau_exp, int rho_exp, long long v, const Prime& p)
    {
        TauRhoPoly c(p);
        c.add_monomial(tau_exp, rho_exp, v);
        return c;
    }

    void add_monomial(int tau_exp, int rho_exp, long long v);

    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    /// Constant term as a residue (0 when absent).
    int scalar_value() const;
    int prime() const { return p_; }
    bool has_tau_rho() const;

    TauRhoPoly operator+(const TauRhoPoly& rhs) const;
    TauRhoPoly operator*(const TauRhoPoly& rhs) const;
    TauRhoPoly negate() const;
    bool operator==(const TauRhoPoly& rhs) const = default;

    /// (tau_exp, rho_exp) -> residue in [1, p-1].
    const std::map<std::pair<int, int>, int>& terms() const { return terms_; }

  private:
    int p_;
    std::map<std::pair<int, int>, int> terms_;
};

/// Composition beta^{eps0} P^{s1} beta^{eps1} P^{s2} ... P^{sm} beta^{epsm}.
/// eps always has one more entry than powers; powers are positive.
/// The identity operation P^0 is the empty word {eps: [0], powers: []}.
struct OpMonomial {
    std::vector<int> eps;
    std::vector<int> powers;
    int p = 2;

    static OpMonomial identity(const Prime& prime) { return OpMonomial{{0}, {}, prime.value()}; }
    static OpMonomial bockstein(const Prime& prime) { return OpMonomial{{1}, {}, prime.value()}; }
    static OpMonomial power(int n, const Prime& prime)
    {
        if (n < 0)
            throw std::invalid_argument("OpMonomial: negative power");
        if (n == 0)
            return identity(prime);
        return OpMonomial{{0, 0}, {n}, prime.value()};
    }

    bool is_identity() const { return powers.empty() && eps == std::vector<int>{0}; }
    bool has_bockstein() const;
    /// s_i >= p*s_{i+1} + eps_{i+1} for every adjacent pair.
    bool is_admissible() const;

    /// Canonical term order: word length, then powers, then flags.
    bool operator<(const OpMonomial& rhs) const;
    bool operator==(const OpMonomial& rhs) const = default;
};

/// (cohomological, weight) bidegree: P^n contributes (2n(p-1), n(p-1)),
/// beta contributes (1, 0).
std::pair<long long, long long> bidegree(const OpMonomial& m);

/// Bidegree of a coefficient monomial tau^t rho^r: (r, t + r).
std::pair<long long, long long> coeff_bidegree(int tau_exp, int rho_exp);

enum class RewriteSide { Leftmost, Rightmost };

class SteenrodElement {
  public:
    SteenrodElement(const Prime& p, Mode mode) : p_(p), mode_(mode) {}

    static SteenrodElement zero(const Prime& p, Mode mode) { return SteenrodElement(p, mode); }
    static SteenrodElement from_monomial(const OpMonomial& m, const Prime& p, Mode mode)
    {
        SteenrodElement e(p, mode);
        e.add_term(m, TauRhoPoly::scalar(1, p));
        return e;
    }

    const Prime& prime() const { return p_; }
    Mode mode() const { return mode_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<OpMonomial, TauRhoPoly>& terms() const { return terms_; }

    /// Adds coeff * m, enforcing the mode: CharPChow discards Bockstein
    /// monomials and tau/rho coefficients outright.
    void add_term(const OpMonomial& m, const TauRhoPoly& coeff);

    SteenrodElement operator+(const SteenrodElement& rhs) const;
    SteenrodElement scaled(const TauRhoPoly& c) const;
    bool operator==(const SteenrodElement& rhs) const = default;

    bool all_admissible() const;
    /// Common bidegree of all terms; nullopt for 0 or inhomogeneous.
    std::optional<std::pair<long long, long long>> homogeneous_bidegree() const;

  private:
    Prime p_;
    Mode mode_;
    std::map<OpMonomial, TauRhoPoly> terms_;
};

/// Rewrites the chosen inadmissible adjacent pair of m once, using the
/// Adem relation of the mode. Throws if m is already admissible. The
/// result is generally not yet in normal form.
SteenrodElement adem_step(const OpMonomial& m, const Prime& p, Mode mode,
                          RewriteSide side = RewriteSide::Leftmost);

/// Fixed point of adem_step, term by term; every surviving monomial is
/// admissible. Idempotent. step_count, when given, receives the number
/// of single-pair rewrites performed.
SteenrodElement adem_reduce(const SteenrodElement& e, RewriteSide side = RewriteSide::Leftmost,
                            long long* step_count = nullptr);

/// Formal concatenation, bilinear; no Adem normalization. beta^2 = 0 is
/// applied when flags meet.
SteenrodElement compose_unreduced(const SteenrodElement& e1, const SteenrodElement& e2);

/// compose = adem_reduce(compose_unreduced(e1, e2)).
SteenrodElement compose(const SteenrodElement& e1, const SteenrodElement& e2);

/// Index set {(j, n-j) : j = 0..n} of the Cartan sum for P^n.
std::vector<std::pair<int, int>> cartan_expand(int n);

}  // namespace chowops

#endif
