#ifndef CHOWOPS_CHARCLASS_HPP
#define CHOWOPS_CHARCLASS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "fp.hpp"

namespace chowops {

/// Truncated integer power series c_0 + c_1 h + ... + c_n h^n.
/// Arithmetic is exact over the integers; nothing is reduced mod p
/// until a caller asks for it.
class TruncSeries {
  public:
    explicit TruncSeries(int truncation) : coeffs_(truncation + 1, 0)
    {
        if (truncation < 0)
            throw std::invalid_argument("TruncSeries: negative truncation");
    }
    TruncSeries(int truncation, std::vector<long long> coeffs) : TruncSeries(truncation)
    {
        for (size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i)
            coeffs_[i] = coeffs[i];
    }

    static TruncSeries one(int truncation)
    {
        TruncSeries s(truncation);
        s.coeffs_[0] = 1;
        return s;
    }

    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
    long long coeff(int i) const { return (i >= 0 && i <= truncation()) ? coeffs_[i] : 0; }
    void set_coeff(int i, long long c) { coeffs_.at(i) = c; }

    bool operator==(const TruncSeries& rhs) const = default;

  private:
    std::vector<long long> coeffs_;
};

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
/// Inverse of a series with constant term +1 or -1.
TruncSeries series_inv(const TruncSeries& s);
/// Integer power, negative exponents via series_inv.
TruncSeries series_pow(const TruncSeries& s, long long e);

/// Product of factors (1 + a*h)^e; e may be negative. The virtual
/// tangent sheaf -T_X of the dimension-n split quadric is
/// {(2,+1), (1,-(n+2))}.
struct VirtualBundleSpec {
    struct Factor {
        long long a = 0;
        long long e = 0;
        bool operator==(const Factor&) const = default;
    };
    std::vector<Factor> factors;

    bool operator==(const VirtualBundleSpec&) const = default;

    static VirtualBundleSpec minus_tangent_quadric(int n)
    {
        return VirtualBundleSpec{{{2, 1}, {1, -(n + 2)}}};
    }
};

/// Total Chern class of the spec (exact integer coefficients).
TruncSeries chern_series(const VirtualBundleSpec& spec, int truncation);

/// Total class attached to f(x) = 1 + x^(p-1): a line factor (1+a*h)^e
/// contributes (1 + a^(p-1) h^(p-1))^e. For p = 2 this is the total
/// Chern class of the spec.
TruncSeries w_class(const VirtualBundleSpec& spec, const Prime& p, int truncation);

struct RostNumber {
    long long deg = 0;       // deg(w_n(-T_X)) on the split quadric of dimension n
    Fp quotient;             // (deg / p) mod p
};

/// deg(w_n(-T_X)) for the split n-dimensional quadric, together with
/// the mod-p quotient deg/p. Throws std::logic_error if p does not
/// divide deg; that would contradict the divisibility theorem and is
/// treated as a hard failure, not a recoverable condition.
RostNumber rost_number(int n, const Prime& p);

/// degWX/p == deg_f * (degWY/p) mod nY. Preconditions p | degWX and
/// p | degWY are enforced.
bool degree_formula_check(long long degWX, long long degWY, long long deg_f, long long nY,
                          const Prime& p);

}  // namespace chowops

#endif
