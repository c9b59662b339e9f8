#include "charclass.hpp"

namespace chowops {

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b)
{
    if (a.truncation() != b.truncation())
        throw std::invalid_argument("series_mul: truncation mismatch");
    const int n = a.truncation();
    TruncSeries r(n);
    for (int i = 0; i <= n; ++i) {
        long long c = 0;
        for (int j = 0; j <= i; ++j)
            c += a.coeff(j) * b.coeff(i - j);
        r.set_coeff(i, c);
    }
    return r;
}

TruncSeries series_inv(const TruncSeries& s)
{
    const long long c0 = s.coeff(0);
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument("series_inv: constant term must be +1 or -1");
    const int n = s.truncation();
    TruncSeries r(n);
    r.set_coeff(0, c0);  // c0 is its own inverse
    for (int i = 1; i <= n; ++i) {
        long long acc = 0;
        for (int j = 1; j <= i; ++j)
            acc += s.coeff(j) * r.coeff(i - j);
        r.set_coeff(i, -c0 * acc);
    }
    return r;
}

TruncSeries series_pow(const TruncSeries& s, long long e)
{
    TruncSeries base = e < 0 ? series_inv(s) : s;
    long long k = e < 0 ? -e : e;
    TruncSeries r = TruncSeries::one(s.truncation());
    while (k) {
        if (k & 1)
            r = series_mul(r, base);
        base = series_mul(base, base);
        k >>= 1;
    }
    return r;
}

TruncSeries chern_series(const VirtualBundleSpec& spec, int truncation)
{
    TruncSeries r = TruncSeries::one(truncation);
    for (const auto& f : spec.factors) {
        TruncSeries lin = TruncSeries::one(truncation);
        if (truncation >= 1)
            lin.set_coeff(1, f.a);
        r = series_mul(r, series_pow(lin, f.e));
    }
    return r;
}

TruncSeries w_class(const VirtualBundleSpec& spec, const Prime& p, int truncation)
{
    const int step = p.value() - 1;
    TruncSeries r = TruncSeries::one(truncation);
    for (const auto& f : spec.factors) {
        // w(1 + a*h) = 1 + (a*h)^(p-1)
        long long apow = 1;
        for (int i = 0; i < step; ++i)
            apow *= f.a;
        TruncSeries lin = TruncSeries::one(truncation);
        if (truncation >= step)
            lin.set_coeff(step, apow);
        r = series_mul(r, series_pow(lin, f.e));
    }
    return r;
}

RostNumber rost_number(int n, const Prime& p)
{
    if (n < 1)
        throw std::invalid_argument("rost_number: quadric dimension must be >= 1");
    const TruncSeries w = w_class(VirtualBundleSpec::minus_tangent_quadric(n), p, n);
    const long long c = w.coeff(n);
    const long long deg = 2 * c;  // deg(h^n) = 2 on a split quadric
    if (deg % p.value() != 0)
        throw std::logic_error("rost_number: p does not divide deg(w_d(-T_X))");
    RostNumber r;
    r.deg = deg;
    r.quotient = Fp(deg / p.value(), p);
    return r;
}

bool degree_formula_check(long long degWX, long long degWY, long long deg_f, long long nY,
                          const Prime& p)
{
    if (degWX % p.value() != 0 || degWY % p.value() != 0)
        throw std::invalid_argument("degree_formula_check: p must divide both degrees");
    if (nY < 1)
        throw std::invalid_argument("degree_formula_check: nY must be positive");
    const long long lhs = degWX / p.value();
    const long long rhs = deg_f * (degWY / p.value());
    return ((lhs - rhs) % nY + nY) % nY == 0;
}

}  // namespace chowops
