#include "steenrod.hpp"

#include <algorithm>

namespace chowops {

void TauRhoPoly::add_monomial(int tau_exp, int rho_exp, long long v)
{
    int r = static_cast<int>(v % p_);
    if (r < 0)
        r += p_;
    if (r == 0)
        return;
    auto key = std::make_pair(tau_exp, rho_exp);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_[key] = r;
        return;
    }
    it->second = (it->second + r) % p_;
    if (it->second == 0)
        terms_.erase(it);
}

bool TauRhoPoly::is_scalar() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == std::make_pair(0, 0));
}

int TauRhoPoly::scalar_value() const
{
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? 0 : it->second;
}

bool TauRhoPoly::has_tau_rho() const
{
    for (const auto& [key, v] : terms_)
        if (key != std::make_pair(0, 0))
            return true;
    return false;
}

TauRhoPoly TauRhoPoly::operator+(const TauRhoPoly& rhs) const
{
    if (p_ != rhs.p_)
        throw std::invalid_argument("TauRhoPoly: mixed moduli");
    TauRhoPoly r = *this;
    for (const auto& [key, v] : rhs.terms_)
        r.add_monomial(key.first, key.second, v);
    return r;
}

TauRhoPoly TauRhoPoly::operator*(const TauRhoPoly& rhs) const
{
    if (p_ != rhs.p_)
        throw std::invalid_argument("TauRhoPoly: mixed moduli");
    TauRhoPoly r{Prime(p_)};
    for (const auto& [k1, v1] : terms_)
        for (const auto& [k2, v2] : rhs.terms_)
            r.add_monomial(k1.first + k2.first, k1.second + k2.second,
                           static_cast<long long>(v1) * v2);
    return r;
}

TauRhoPoly TauRhoPoly::negate() const
{
    TauRhoPoly r{Prime(p_)};
    for (const auto& [key, v] : terms_)
        r.add_monomial(key.first, key.second, p_ - v);
    return r;
}

bool OpMonomial::has_bockstein() const
{
    return std::any_of(eps.begin(), eps.end(), [](int e) { return e != 0; });
}

bool OpMonomial::is_admissible() const
{
    for (size_t i = 0; i + 1 < powers.size(); ++i)
        if (powers[i] < p * powers[i + 1] + eps[i + 1])
            return false;
    return true;
}

bool OpMonomial::operator<(const OpMonomial& rhs) const
{
    if (powers.size() != rhs.powers.size())
        return powers.size() < rhs.powers.size();
    if (powers != rhs.powers)
        return powers < rhs.powers;
    return eps < rhs.eps;
}

std::pair<long long, long long> bidegree(const OpMonomial& m)
{
    long long first = 0, second = 0;
    for (int e : m.eps)
        first += e;
    for (int s : m.powers) {
        first += 2LL * s * (m.p - 1);
        second += static_cast<long long>(s) * (m.p - 1);
    }
    return {first, second};
}

std::pair<long long, long long> coeff_bidegree(int tau_exp, int rho_exp)
{
    return {rho_exp, tau_exp + rho_exp};
}

namespace {

    // Assembles a word generator by generator, collapsing beta^2 to 0
    // and discarding P^0.
    struct WordBuilder {
        OpMonomial m;
        bool dead = false;

        explicit WordBuilder(int p)
        {
            m.p = p;
            m.eps = {0};
        }

        void beta()
        {
            if (m.eps.back() == 1)
                dead = true;
            else
                m.eps.back() = 1;
        }

        void power(int s)
        {
            if (s == 0)
                return;
            m.powers.push_back(s);
            m.eps.push_back(0);
        }

        void flag_then_power(int flag, int s)
        {
            if (flag)
                beta();
            power(s);
        }

        // Sq^a at p = 2.
        void sq(int a)
        {
            if (a & 1)
                beta();
            power(a / 2);
        }
    };

    int find_inadmissible(const OpMonomial& m, RewriteSide side)
    {
        if (side == RewriteSide::Leftmost) {
            for (size_t i = 0; i + 1 < m.powers.size(); ++i)
                if (m.powers[i] < m.p * m.powers[i + 1] + m.eps[i + 1])
                    return static_cast<int>(i);
        }
        else {
            for (size_t i = m.powers.size(); i-- > 1;)
                if (m.powers[i - 1] < m.p * m.powers[i] + m.eps[i])
                    return static_cast<int>(i - 1);
        }
        return -1;
    }

    std::vector<int> to_sq_word(const OpMonomial& m)
    {
        std::vector<int> w;
        for (size_t i = 0; i < m.powers.size(); ++i)
            w.push_back(2 * m.powers[i] + m.eps[i]);
        if (m.eps.back() == 1)
            w.push_back(1);
        return w;
    }

    void emit_range(WordBuilder& b, const OpMonomial& m, size_t from)
    {
        for (size_t i = from; i < m.powers.size(); ++i)
            b.flag_then_power(m.eps[i], m.powers[i]);
        if (m.eps.back())
            b.beta();
    }

    // Single relation for operations on mod-p Chow groups:
    //   P^a P^b = sum_j (-1)^(a+j) C((p-1)(b-j)-1, a-pj) P^(a+b-j) P^j
    // for a < pb. Bockstein-free words only.
    void step_charp(const OpMonomial& m, int i, const Prime& p, SteenrodElement& out)
    {
        const int a = m.powers[i];
        const int b = m.powers[i + 1];
        for (int j = 0; j <= a / p.value(); ++j) {
            Fp c = binom_mod_p(static_cast<long long>(p.value() - 1) * (b - j) - 1,
                               a - static_cast<long long>(p.value()) * j, p);
            if (c.is_zero())
                continue;
            if ((a + j) % 2)
                c = -c;
            WordBuilder w(p.value());
            for (int k = 0; k < i; ++k)
                w.flag_then_power(m.eps[k], m.powers[k]);
            w.flag_then_power(m.eps[i], a + b - j);
            w.power(j);
            for (size_t k = i + 2; k < m.powers.size(); ++k)
                w.flag_then_power(m.eps[k], m.powers[k]);
            if (m.eps.back())
                w.beta();
            if (!w.dead)
                out.add_term(w.m, TauRhoPoly::scalar(c.v, p));
        }
    }

    // Char0Motivic, odd p. The two displayed relations: P^a P^b for
    // a < pb, and P^a beta P^b for a <= pb.
    void step_odd_char0(const OpMonomial& m, int i, const Prime& p, SteenrodElement& out)
    {
        const int a = m.powers[i];
        const int b = m.powers[i + 1];
        const int pv = p.value();

        auto emit = [&](bool lead_beta, int mid_beta, int j, const Fp& c) {
            WordBuilder w(pv);
            for (int k = 0; k < i; ++k)
                w.flag_then_power(m.eps[k], m.powers[k]);
            if (m.eps[i])
                w.beta();
            if (lead_beta)
                w.beta();
            w.power(a + b - j);
            if (mid_beta)
                w.beta();
            w.power(j);
            for (size_t k = i + 2; k < m.powers.size(); ++k)
                w.flag_then_power(m.eps[k], m.powers[k]);
            if (m.eps.back())
                w.beta();
            if (!w.dead)
                out.add_term(w.m, TauRhoPoly::scalar(c.v, p));
        };

        if (m.eps[i + 1] == 0) {
            for (int j = 0; j <= a / pv; ++j) {
                Fp c = binom_mod_p(static_cast<long long>(pv - 1) * (b - j) - 1,
                                   a - static_cast<long long>(pv) * j, p);
                if (c.is_zero())
                    continue;
                if ((a + j) % 2)
                    c = -c;
                emit(false, 0, j, c);
            }
        }
        else {
            for (int j = 0; j <= a / pv; ++j) {
                Fp c = binom_mod_p(static_cast<long long>(pv - 1) * (b - j) - 1,
                                   a - static_cast<long long>(pv) * j, p);
                if (c.is_zero())
                    continue;
                if ((a + j) % 2)
                    c = -c;
                emit(true, 0, j, c);
            }
            for (int j = 0; j <= (a - 1) / pv; ++j) {
                Fp c = binom_mod_p(static_cast<long long>(pv - 1) * (b - j) - 1,
                                   a - static_cast<long long>(pv) * j - 1, p);
                if (c.is_zero())
                    continue;
                if ((a + j + 1) % 2)
                    c = -c;
                emit(false, 1, j, c);
            }
        }
    }

    // Char0Motivic, p = 2, stated on Sq-indices: Sq^(2n) = P^n and
    // Sq^(2n+1) = beta Sq^(2n). Four cases by the parities of the pair,
    // with tau and rho entering the coefficients.
    void step_two_char0(const OpMonomial& m, int i, const Prime& p, SteenrodElement& out)
    {
        const std::vector<int> word = to_sq_word(m);
        const int a = word[i];
        const int b = word[i + 1];

        auto emit = [&](int tau_exp, int rho_exp, int first, int second) {
            WordBuilder w(2);
            for (int k = 0; k < i; ++k)
                w.sq(word[k]);
            w.sq(first);
            if (second > 0)
                w.sq(second);
            for (size_t k = i + 2; k < word.size(); ++k)
                w.sq(word[k]);
            if (!w.dead)
                out.add_term(w.m, TauRhoPoly::monomial(tau_exp, rho_exp, 1, p));
        };

        const bool a_even = a % 2 == 0;
        const bool b_even = b % 2 == 0;
        for (int j = 0; j <= a / 2; ++j) {
            const Fp main = binom_mod_p(b - 1 - j, a - 2LL * j, p);
            if (a_even && b_even) {
                if (!main.is_zero())
                    emit(j % 2, 0, a + b - j, j);
            }
            else if (a_even && !b_even) {
                if (!main.is_zero()) {
                    emit(0, 0, a + b - j, j);
                    if (j % 2 == 1)
                        emit(0, 1, a + b - j - 1, j);
                }
            }
            else if (!a_even && !b_even) {
                if (j % 2 == 1 && !main.is_zero())
                    emit(0, 0, a + b - j, j);
            }
            else {  // a odd, b even
                if (j % 2 == 0 && !main.is_zero())
                    emit(0, 0, a + b - j, j);
                if (j % 2 == 1) {
                    const Fp c = binom_mod_p(b - 1 - j, a - 1 - 2LL * j, p);
                    if (!c.is_zero())
                        emit(0, 1, a + b - j - 1, j);
                }
            }
        }
    }

}  // namespace

void SteenrodElement::add_term(const OpMonomial& m, const TauRhoPoly& coeff)
{
    if (m.p != p_.value())
        throw std::invalid_argument("SteenrodElement: monomial prime mismatch");
    if (coeff.prime() != p_.value())
        throw std::invalid_argument("SteenrodElement: coefficient prime mismatch");
    if (coeff.is_zero())
        return;
    if (mode_ == Mode::CharPChow && (m.has_bockstein() || coeff.has_tau_rho()))
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero())
        terms_.erase(it);
}

SteenrodElement SteenrodElement::operator+(const SteenrodElement& rhs) const
{
    if (p_.value() != rhs.p_.value() || mode_ != rhs.mode_)
        throw std::invalid_argument("SteenrodElement: mode/prime mismatch");
    SteenrodElement r = *this;
    for (const auto& [m, c] : rhs.terms_)
        r.add_term(m, c);
    return r;
}

SteenrodElement SteenrodElement::scaled(const TauRhoPoly& c) const
{
    SteenrodElement r(p_, mode_);
    for (const auto& [m, coeff] : terms_)
        r.add_term(m, coeff * c);
    return r;
}

bool SteenrodElement::all_admissible() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.is_admissible(); });
}

std::optional<std::pair<long long, long long>> SteenrodElement::homogeneous_bidegree() const
{
    std::optional<std::pair<long long, long long>> deg;
    for (const auto& [m, c] : terms_) {
        const auto mono = bidegree(m);
        for (const auto& [key, v] : c.terms()) {
            const auto cb = coeff_bidegree(key.first, key.second);
            const std::pair<long long, long long> total{mono.first + cb.first,
                                                        mono.second + cb.second};
            if (!deg)
                deg = total;
            else if (*deg != total)
                return std::nullopt;
        }
    }
    return deg;
}

SteenrodElement adem_step(const OpMonomial& m, const Prime& p, Mode mode, RewriteSide side)
{
    const int i = find_inadmissible(m, side);
    if (i < 0)
        throw std::invalid_argument("adem_step: monomial is already admissible");
    SteenrodElement out(p, mode);
    if (mode == Mode::CharPChow)
        step_charp(m, i, p, out);
    else if (p.value() == 2)
        step_two_char0(m, i, p, out);
    else
        step_odd_char0(m, i, p, out);
    return out;
}

SteenrodElement adem_reduce(const SteenrodElement& e, RewriteSide side, long long* step_count)
{
    long long steps = 0;
    SteenrodElement current = e;
    while (true) {
        SteenrodElement next(e.prime(), e.mode());
        bool changed = false;
        for (const auto& [m, c] : current.terms()) {
            if (m.is_admissible()) {
                next.add_term(m, c);
                continue;
            }
            changed = true;
            ++steps;
            next = next + adem_step(m, e.prime(), e.mode(), side).scaled(c);
        }
        current = std::move(next);
        if (!changed)
            break;
    }
    if (step_count)
        *step_count = steps;
    return current;
}

SteenrodElement compose_unreduced(const SteenrodElement& e1, const SteenrodElement& e2)
{
    if (e1.prime().value() != e2.prime().value() || e1.mode() != e2.mode())
        throw std::invalid_argument("compose: mode/prime mismatch");
    SteenrodElement out(e1.prime(), e1.mode());
    for (const auto& [m1, c1] : e1.terms()) {
        for (const auto& [m2, c2] : e2.terms()) {
            WordBuilder w(e1.prime().value());
            emit_range(w, m1, 0);
            emit_range(w, m2, 0);
            if (!w.dead)
                out.add_term(w.m, c1 * c2);
        }
    }
    return out;
}

SteenrodElement compose(const SteenrodElement& e1, const SteenrodElement& e2)
{
    return adem_reduce(compose_unreduced(e1, e2));
}

std::vector<std::pair<int, int>> cartan_expand(int n)
{
    if (n < 0)
        throw std::invalid_argument("cartan_expand: negative index");
    std::vector<std::pair<int, int>> r;
    r.reserve(n + 1);
    for (int j = 0; j <= n; ++j)
        r.emplace_back(j, n - j);
    return r;
}

}  // namespace chowops
