#ifndef CHOWOPS_GRADED_HPP
#define CHOWOPS_GRADED_HPP

#include <map>
#include <utility>
#include <vector>

#include "fp.hpp"
#include "steenrod.hpp"

namespace chowops {

/// Mod-2 Chow ring of a split quadric of dimension dimX. Additive basis
/// h^i (codimension i) and l_i (dimension i) for 0 <= i <= d, with
/// d = floor(dimX/2). For even dimX only one middle class l_d is
/// modeled. Ring relations mod 2:
///   h * h^i = h^(i+1) for i < d, h * h^d = 0,
///   h * l_i = l_(i-1), h * l_0 = 0,
///   l_i * l_j = 0 except l_d^2 = l_0 when dimX is divisible by 4.
struct QuadricRing {
    int dimX = 1;

    explicit QuadricRing(int dim) : dimX(dim)
    {
        if (dim < 1)
            throw std::invalid_argument("QuadricRing: dimension must be positive");
    }

    int d() const { return dimX / 2; }
    bool operator==(const QuadricRing&) const = default;
};

/// Basis element of the quadric ring: h^idx or l_idx.
struct QuadricGen {
    enum class Kind { H, L };
    Kind kind = Kind::H;
    int idx = 0;

    auto operator<=>(const QuadricGen&) const = default;
};

class QuadricClass {
  public:
    explicit QuadricClass(const QuadricRing& ring) : ring_(ring) {}

    static QuadricClass h_power(const QuadricRing& ring, int i);
    static QuadricClass l_class(const QuadricRing& ring, int i);

    const QuadricRing& ring() const { return ring_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of a basis element, as 0/1.
    int coeff(const QuadricGen& g) const;
    const std::map<QuadricGen, int>& terms() const { return coeffs_; }

    /// F_2 addition; generators outside the basis range are rejected.
    void add_basis(const QuadricGen& g, int c);

    QuadricClass operator+(const QuadricClass& rhs) const;
    QuadricClass operator*(const QuadricClass& rhs) const;
    bool operator==(const QuadricClass& rhs) const = default;

  private:
    QuadricRing ring_;
    std::map<QuadricGen, int> coeffs_;  // value always 1
};

/// Sq^(2j) extended linearly over the basis:
///   Sq^(2j)(h^i) = C(i,j) h^(i+j),  Sq^(2j)(l_i) = C(dimX+1-i, j) l_(i-j),
/// with out-of-range targets sent to 0.
QuadricClass sq_on_quadric(int j, const QuadricClass& x);

/// Total operation Sq^0 + Sq^2 + Sq^4 + ... (finite by degree reasons).
QuadricClass total_sq(const QuadricClass& x);

/// Coefficient of l_0; input must be concentrated in dimension 0.
Fp degree(const QuadricClass& x);

/// Total Sq(l_i) computed independently of sq_on_quadric: the normal
/// bundle of a linear P^i inside the quadric has total Chern class
/// (1+H)^(dimX+1-i) mod 2, pushed forward by H^j -> l_(i-j).
QuadricClass wu_oracle_sq_l(int i, const QuadricRing& ring);

/// CH^*(P^n)/p: truncated polynomial ring on h with h^(n+1) = 0.
struct ProjSpaceRing {
    int n = 1;
    Prime prime;

    ProjSpaceRing(int n_, const Prime& p) : n(n_), prime(p)
    {
        if (n_ < 1)
            throw std::invalid_argument("ProjSpaceRing: n must be positive");
    }
    bool operator==(const ProjSpaceRing&) const = default;
};

class ProjClass {
  public:
    explicit ProjClass(const ProjSpaceRing& ring)
        : ring_(ring), coeffs_(ring.n + 1, Fp(0, ring.prime))
    {
    }

    static ProjClass h_power(const ProjSpaceRing& ring, int i, long long c = 1);

    const ProjSpaceRing& ring() const { return ring_; }
    bool is_zero() const;
    Fp coeff(int i) const { return coeffs_.at(i); }
    void add_coeff(int i, const Fp& c);

    ProjClass operator+(const ProjClass& rhs) const;
    ProjClass operator*(const ProjClass& rhs) const;
    ProjClass pow(int e) const;
    bool operator==(const ProjClass& rhs) const = default;

  private:
    ProjSpaceRing ring_;
    std::vector<Fp> coeffs_;
};

/// P^j(h^i) = C(i,j) h^(i + (p-1)j), linearly extended; h-powers above
/// n vanish.
ProjClass p_on_projspace(int j, const ProjClass& x);

/// Action of an operation element, monomial factors applied right to
/// left. Requires CharPChow mode; quadrics require p = 2.
QuadricClass act(const SteenrodElement& e, const QuadricClass& x);
ProjClass act(const SteenrodElement& e, const ProjClass& x);

}  // namespace chowops

#endif
