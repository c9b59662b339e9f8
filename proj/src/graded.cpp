#include "graded.hpp"

#include "charclass.hpp"

namespace chowops {

namespace {
    const Prime kTwo(2);
}

QuadricClass QuadricClass::h_power(const QuadricRing& ring, int i)
{
    QuadricClass x(ring);
    x.add_basis({QuadricGen::Kind::H, i}, 1);
    return x;
}

QuadricClass QuadricClass::l_class(const QuadricRing& ring, int i)
{
    QuadricClass x(ring);
    x.add_basis({QuadricGen::Kind::L, i}, 1);
    return x;
}

int QuadricClass::coeff(const QuadricGen& g) const
{
    auto it = coeffs_.find(g);
    return it == coeffs_.end() ? 0 : it->second;
}

void QuadricClass::add_basis(const QuadricGen& g, int c)
{
    if (g.idx < 0 || g.idx > ring_.d())
        throw std::invalid_argument("QuadricClass: basis index out of range");
    if (c % 2 == 0)
        return;
    auto it = coeffs_.find(g);
    if (it == coeffs_.end())
        coeffs_.emplace(g, 1);
    else
        coeffs_.erase(it);
}

QuadricClass QuadricClass::operator+(const QuadricClass& rhs) const
{
    if (ring_ != rhs.ring_)
        throw std::invalid_argument("QuadricClass: ring mismatch");
    QuadricClass r = *this;
    for (const auto& [g, c] : rhs.coeffs_)
        r.add_basis(g, c);
    return r;
}

QuadricClass QuadricClass::operator*(const QuadricClass& rhs) const
{
    if (ring_ != rhs.ring_)
        throw std::invalid_argument("QuadricClass: ring mismatch");
    const int d = ring_.d();
    QuadricClass r(ring_);
    for (const auto& [g1, c1] : coeffs_) {
        for (const auto& [g2, c2] : rhs.coeffs_) {
            using K = QuadricGen::Kind;
            if (g1.kind == K::H && g2.kind == K::H) {
                // h^(d+1) = 2 l_* vanishes mod 2
                if (g1.idx + g2.idx <= d)
                    r.add_basis({K::H, g1.idx + g2.idx}, 1);
            }
            else if (g1.kind == K::L && g2.kind == K::L) {
                if (g1.idx == d && g2.idx == d && ring_.dimX % 4 == 0)
                    r.add_basis({K::L, 0}, 1);
            }
            else {
                const int li = g1.kind == K::L ? g1.idx : g2.idx;
                const int hi = g1.kind == K::H ? g1.idx : g2.idx;
                if (li - hi >= 0)
                    r.add_basis({K::L, li - hi}, 1);
            }
        }
    }
    return r;
}

QuadricClass sq_on_quadric(int j, const QuadricClass& x)
{
    if (j < 0)
        throw std::invalid_argument("sq_on_quadric: negative index");
    const QuadricRing& ring = x.ring();
    QuadricClass r(ring);
    for (const auto& [g, c] : x.terms()) {
        if (g.kind == QuadricGen::Kind::H) {
            if (g.idx + j <= ring.d() && !binom_mod_p(g.idx, j, kTwo).is_zero())
                r.add_basis({QuadricGen::Kind::H, g.idx + j}, 1);
        }
        else {
            if (g.idx - j >= 0 && !binom_mod_p(ring.dimX + 1 - g.idx, j, kTwo).is_zero())
                r.add_basis({QuadricGen::Kind::L, g.idx - j}, 1);
        }
    }
    return r;
}

QuadricClass total_sq(const QuadricClass& x)
{
    QuadricClass r(x.ring());
    for (int j = 0; j <= x.ring().dimX + 1; ++j)
        r = r + sq_on_quadric(j, x);
    return r;
}

Fp degree(const QuadricClass& x)
{
    for (const auto& [g, c] : x.terms()) {
        const int dim = g.kind == QuadricGen::Kind::H ? x.ring().dimX - g.idx : g.idx;
        if (dim != 0)
            throw std::invalid_argument("degree: class not concentrated in dimension 0");
    }
    return Fp(x.coeff({QuadricGen::Kind::L, 0}), kTwo);
}

QuadricClass wu_oracle_sq_l(int i, const QuadricRing& ring)
{
    if (i < 0 || i > ring.d())
        throw std::invalid_argument("wu_oracle_sq_l: index out of range");
    // c(N) of P^i in X from the tangent sequences of P^i in X in
    // P^(dimX+1); the (1+2H) Euler factor is invisible mod 2.
    const TruncSeries cn = series_pow(TruncSeries(i, {1, 1}), ring.dimX + 1 - i);
    QuadricClass r(ring);
    for (int j = 0; j <= i; ++j)
        r.add_basis({QuadricGen::Kind::L, i - j}, static_cast<int>(cn.coeff(j) % 2));
    return r;
}

ProjClass ProjClass::h_power(const ProjSpaceRing& ring, int i, long long c)
{
    ProjClass x(ring);
    if (i < 0 || i > ring.n)
        throw std::invalid_argument("ProjClass: exponent out of range");
    x.add_coeff(i, Fp(c, ring.prime));
    return x;
}

bool ProjClass::is_zero() const
{
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

void ProjClass::add_coeff(int i, const Fp& c)
{
    if (i < 0)
        throw std::invalid_argument("ProjClass: negative exponent");
    if (i > ring_.n)
        return;
    coeffs_[i] = coeffs_[i] + c;
}

ProjClass ProjClass::operator+(const ProjClass& rhs) const
{
    if (ring_ != rhs.ring_)
        throw std::invalid_argument("ProjClass: ring mismatch");
    ProjClass r = *this;
    for (int i = 0; i <= ring_.n; ++i)
        r.coeffs_[i] = r.coeffs_[i] + rhs.coeffs_[i];
    return r;
}

ProjClass ProjClass::operator*(const ProjClass& rhs) const
{
    if (ring_ != rhs.ring_)
        throw std::invalid_argument("ProjClass: ring mismatch");
    ProjClass r(ring_);
    for (int i = 0; i <= ring_.n; ++i) {
        if (coeffs_[i].is_zero())
            continue;
        for (int j = 0; i + j <= ring_.n; ++j)
            r.add_coeff(i + j, coeffs_[i] * rhs.coeffs_[j]);
    }
    return r;
}

ProjClass ProjClass::pow(int e) const
{
    ProjClass r = ProjClass::h_power(ring_, 0);
    for (int i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

ProjClass p_on_projspace(int j, const ProjClass& x)
{
    if (j < 0)
        throw std::invalid_argument("p_on_projspace: negative index");
    const ProjSpaceRing& ring = x.ring();
    ProjClass r(ring);
    const int shift = (ring.prime.value() - 1) * j;
    for (int i = 0; i <= ring.n; ++i) {
        if (x.coeff(i).is_zero() || i + shift > ring.n)
            continue;
        r.add_coeff(i + shift, x.coeff(i) * binom_mod_p(i, j, ring.prime));
    }
    return r;
}

namespace {

    void check_act_mode(const SteenrodElement& e, int module_p)
    {
        if (e.mode() != Mode::CharPChow)
            throw std::invalid_argument("act: operations must be in CharPChow mode");
        if (e.prime().value() != module_p)
            throw std::invalid_argument("act: prime mismatch between operation and module");
    }

}  // namespace

QuadricClass act(const SteenrodElement& e, const QuadricClass& x)
{
    check_act_mode(e, 2);
    QuadricClass r(x.ring());
    for (const auto& [m, c] : e.terms()) {
        if (c.scalar_value() == 0)
            continue;
        QuadricClass y = x;
        for (size_t i = m.powers.size(); i-- > 0;)
            y = sq_on_quadric(m.powers[i], y);
        r = r + y;  // mod 2: nonzero scalar is 1
    }
    return r;
}

ProjClass act(const SteenrodElement& e, const ProjClass& x)
{
    check_act_mode(e, x.ring().prime.value());
    ProjClass r(x.ring());
    for (const auto& [m, c] : e.terms()) {
        ProjClass y = x;
        for (size_t i = m.powers.size(); i-- > 0;)
            y = p_on_projspace(m.powers[i], y);
        const Fp scalar(c.scalar_value(), x.ring().prime);
        for (int i = 0; i <= x.ring().n; ++i)
            r.add_coeff(i, y.coeff(i) * scalar);
    }
    return r;
}

}  // namespace chowops
