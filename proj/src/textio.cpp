#include "textio.hpp"

#include <algorithm>
#include <sstream>

namespace chowops {

namespace {

    // ---- lexer ----

    enum class Tok { Number, Name, Plus, Minus, Star, Dot, Caret, Underscore, LParen, RParen, At, End };

    struct Lexer {
        const std::string& s;
        size_t pos = 0;
        Tok tok = Tok::End;
        long long number = 0;
        std::string name;
        size_t tok_pos = 0;

        explicit Lexer(const std::string& str) : s(str) { advance(); }

        [[noreturn]] void fail(const std::string& what) const
        {
            std::ostringstream os;
            os << "parse error at position " << tok_pos << ": " << what;
            throw std::invalid_argument(os.str());
        }

        void advance()
        {
            while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t'))
                ++pos;
            tok_pos = pos;
            if (pos >= s.size()) {
                tok = Tok::End;
                return;
            }
            const char c = s[pos];
            if (c >= '0' && c <= '9') {
                number = 0;
                while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
                    number = number * 10 + (s[pos] - '0');
                    ++pos;
                }
                tok = Tok::Number;
                return;
            }
            if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
                name.clear();
                while (pos < s.size() && ((s[pos] >= 'a' && s[pos] <= 'z') || (s[pos] >= 'A' && s[pos] <= 'Z')))
                    name.push_back(s[pos++]);
                tok = Tok::Name;
                return;
            }
            ++pos;
            switch (c) {
                case '+': tok = Tok::Plus; return;
                case '-': tok = Tok::Minus; return;
                case '*': tok = Tok::Star; return;
                case '.': tok = Tok::Dot; return;
                case '^': tok = Tok::Caret; return;
                case '_': tok = Tok::Underscore; return;
                case '(': tok = Tok::LParen; return;
                case ')': tok = Tok::RParen; return;
                case '@': tok = Tok::At; return;
                default: tok_pos = pos - 1; fail(std::string("unexpected character '") + c + "'");
            }
        }

        long long expect_number(const char* what)
        {
            if (tok != Tok::Number)
                fail(std::string("expected ") + what);
            const long long n = number;
            advance();
            return n;
        }

        void expect(Tok t, const char* what)
        {
            if (tok != t)
                fail(std::string("expected ") + what);
            advance();
        }
    };

    // ---- small render helpers ----

    std::string coeff_term_text(int tau_exp, int rho_exp, int v)
    {
        std::vector<std::string> parts;
        if (v != 1 || (tau_exp == 0 && rho_exp == 0))
            parts.push_back(std::to_string(v));
        if (tau_exp == 1)
            parts.push_back("t");
        else if (tau_exp > 1)
            parts.push_back("t^" + std::to_string(tau_exp));
        if (rho_exp == 1)
            parts.push_back("r");
        else if (rho_exp > 1)
            parts.push_back("r^" + std::to_string(rho_exp));
        std::string out;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i)
                out += "*";
            out += parts[i];
        }
        return out;
    }

    std::string coeff_to_text(const TauRhoPoly& c)
    {
        if (c.is_zero())
            return "0";
        std::vector<std::string> parts;
        for (const auto& [key, v] : c.terms())
            parts.push_back(coeff_term_text(key.first, key.second, v));
        if (parts.size() == 1)
            return parts[0];
        std::string out = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i)
                out += " + ";
            out += parts[i];
        }
        return out + ")";
    }

    bool coeff_is_one(const TauRhoPoly& c) { return c.is_scalar() && c.scalar_value() == 1; }

    // ---- generator-list assembly (beta^2 = 0, P^0 dropped) ----

    struct MonoBuilder {
        OpMonomial m;
        bool dead = false;

        explicit MonoBuilder(int p)
        {
            m.p = p;
            m.eps = {0};
        }
        void beta()
        {
            if (m.eps.back())
                dead = true;
            else
                m.eps.back() = 1;
        }
        void power(int s)
        {
            if (s <= 0)
                return;
            m.powers.push_back(s);
            m.eps.push_back(0);
        }
    };

}  // namespace

std::string to_text(const OpMonomial& m)
{
    std::ostringstream os;
    if (m.p == 2) {
        bool first = true;
        for (size_t i = 0; i < m.powers.size(); ++i) {
            if (!first)
                os << ".";
            os << "Sq" << 2 * m.powers[i] + m.eps[i];
            first = false;
        }
        if (m.eps.back()) {
            if (!first)
                os << ".";
            os << "Sq1";
            first = false;
        }
        if (first)
            os << "Sq0";
        return os.str();
    }
    bool first = true;
    for (size_t i = 0; i < m.powers.size(); ++i) {
        if (m.eps[i]) {
            if (!first)
                os << ".";
            os << "b";
            first = false;
        }
        if (!first)
            os << ".";
        os << "P" << m.powers[i];
        first = false;
    }
    if (m.eps.back()) {
        if (!first)
            os << ".";
        os << "b";
        first = false;
    }
    if (first)
        os << "P0";
    return os.str();
}

std::string to_text(const SteenrodElement& e)
{
    if (e.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        if (!first)
            os << " + ";
        if (coeff_is_one(c))
            os << to_text(m);
        else
            os << coeff_to_text(c) << "*" << to_text(m);
        first = false;
    }
    return os.str();
}

std::string to_text(const DualMonomial& m)
{
    if (m.is_one())
        return "1";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& s) {
        if (!first)
            os << " ";
        os << s;
        first = false;
    };
    if (m.tau_mask & 1)
        emit("t0");
    int max_xi = 0;
    for (const auto& [j, r] : m.xi)
        max_xi = std::max(max_xi, j);
    for (int k = 1; k <= 62; ++k) {
        auto it = m.xi.find(k);
        if (it != m.xi.end()) {
            if (it->second == 1)
                emit("x" + std::to_string(k));
            else
                emit("x" + std::to_string(k) + "^" + std::to_string(it->second));
        }
        if (m.tau_mask >> k & 1)
            emit("t" + std::to_string(k));
        if (k > max_xi && (m.tau_mask >> k) == 0)
            break;
    }
    return os.str();
}

namespace {

    std::string bmu_part_text(int u_exp, int v_exp)
    {
        if (u_exp == 0 && v_exp == 0)
            return "1";
        std::string out;
        if (u_exp == 1)
            out = "u";
        if (v_exp > 0) {
            if (!out.empty())
                out += "*";
            out += v_exp == 1 ? "v" : "v^" + std::to_string(v_exp);
        }
        return out;
    }

}  // namespace

std::string to_text(const CoactionElement& e)
{
    if (e.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : e.terms()) {
        const auto& [m, u_exp, v_exp] = key;
        if (!first)
            os << " + ";
        if (c.v != 1)
            os << c.v << "*";
        if (m.is_one())
            os << bmu_part_text(u_exp, v_exp);
        else
            os << to_text(m) << "@" << bmu_part_text(u_exp, v_exp);
        first = false;
    }
    return os.str();
}

std::string to_text(const QuadricClass& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& s) {
        if (!first)
            os << " + ";
        os << s;
        first = false;
    };
    for (const auto& [g, c] : x.terms()) {
        if (g.kind != QuadricGen::Kind::H)
            continue;
        if (g.idx == 0)
            emit("1");
        else if (g.idx == 1)
            emit("h");
        else
            emit("h^" + std::to_string(g.idx));
    }
    std::vector<int> ls;
    for (const auto& [g, c] : x.terms())
        if (g.kind == QuadricGen::Kind::L)
            ls.push_back(g.idx);
    for (auto it = ls.rbegin(); it != ls.rend(); ++it)
        emit("l_" + std::to_string(*it));
    return os.str();
}

std::string to_text(const ProjClass& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= x.ring().n; ++i) {
        const Fp c = x.coeff(i);
        if (c.is_zero())
            continue;
        if (!first)
            os << " + ";
        if (i == 0)
            os << c.v;
        else {
            if (c.v != 1)
                os << c.v << "*";
            os << (i == 1 ? "h" : "h^" + std::to_string(i));
        }
        first = false;
    }
    return os.str();
}

std::string to_text(const TruncSeries& s)
{
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= s.truncation(); ++i) {
        long long c = s.coeff(i);
        if (c == 0)
            continue;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        }
        else {
            os << (c < 0 ? " - " : " + ");
            c = c < 0 ? -c : c;
        }
        if (i == 0)
            os << c;
        else {
            if (c != 1)
                os << c << "*";
            os << (i == 1 ? "h" : "h^" + std::to_string(i));
        }
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

std::string to_text(const VirtualBundleSpec& spec)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& f : spec.factors) {
        if (!first)
            os << " ";
        os << "(1";
        if (f.a >= 0)
            os << "+";
        else
            os << "-";
        const long long a = f.a < 0 ? -f.a : f.a;
        if (a != 1)
            os << a;
        os << "h)^" << f.e;
        first = false;
    }
    if (first)
        os << "(1+0h)^0";
    return os.str();
}

// ---- parsers ----

namespace {

    // coefficient := factor ('*' factor)*, factor := INT | t[^k] | r[^k] | '(' sum ')'
    TauRhoPoly parse_coeff_factor(Lexer& lx, const Prime& p);

    TauRhoPoly parse_coeff_sum(Lexer& lx, const Prime& p)
    {
        TauRhoPoly acc = parse_coeff_factor(lx, p);
        while (lx.tok == Tok::Star) {
            lx.advance();
            acc = acc * parse_coeff_factor(lx, p);
        }
        while (lx.tok == Tok::Plus) {
            lx.advance();
            TauRhoPoly term = parse_coeff_factor(lx, p);
            while (lx.tok == Tok::Star) {
                lx.advance();
                term = term * parse_coeff_factor(lx, p);
            }
            acc = acc + term;
        }
        return acc;
    }

    TauRhoPoly parse_coeff_factor(Lexer& lx, const Prime& p)
    {
        if (lx.tok == Tok::Number) {
            const long long v = lx.number;
            lx.advance();
            return TauRhoPoly::scalar(v, p);
        }
        if (lx.tok == Tok::Name && (lx.name == "t" || lx.name == "r")) {
            const bool is_tau = lx.name == "t";
            lx.advance();
            int e = 1;
            if (lx.tok == Tok::Caret) {
                lx.advance();
                e = static_cast<int>(lx.expect_number("exponent"));
            }
            return TauRhoPoly::monomial(is_tau ? e : 0, is_tau ? 0 : e, 1, p);
        }
        if (lx.tok == Tok::LParen) {
            lx.advance();
            TauRhoPoly inner = parse_coeff_sum(lx, p);
            lx.expect(Tok::RParen, "')'");
            return inner;
        }
        lx.fail("expected coefficient");
    }

    bool at_mono_start(const Lexer& lx)
    {
        return lx.tok == Tok::Name && (lx.name == "Sq" || lx.name == "P" || lx.name == "b");
    }

    // mono := gen ('.' gen)*; returns false when the word collapses to 0.
    bool parse_mono(Lexer& lx, const Prime& p, OpMonomial& out)
    {
        MonoBuilder b(p.value());
        while (true) {
            if (!at_mono_start(lx))
                lx.fail("expected operation generator");
            if (lx.name == "Sq") {
                if (p.value() != 2)
                    lx.fail("Sq generators require p = 2");
                lx.advance();
                const long long n = lx.expect_number("Sq index");
                if (n & 1)
                    b.beta();
                b.power(static_cast<int>(n / 2));
            }
            else if (lx.name == "P") {
                lx.advance();
                const long long n = lx.expect_number("P index");
                b.power(static_cast<int>(n));
            }
            else {  // b
                lx.advance();
                b.beta();
            }
            if (lx.tok != Tok::Dot)
                break;
            lx.advance();
        }
        out = b.m;
        return !b.dead;
    }

}  // namespace

SteenrodElement parse_steenrod(const std::string& expr, const Prime& p, Mode mode)
{
    Lexer lx(expr);
    SteenrodElement e(p, mode);
    if (lx.tok == Tok::End)
        lx.fail("empty expression");
    while (true) {
        TauRhoPoly coeff = TauRhoPoly::scalar(1, p);
        bool have_mono = false;
        OpMonomial mono = OpMonomial::identity(p);
        bool mono_alive = true;
        while (true) {
            if (at_mono_start(lx)) {
                mono_alive = parse_mono(lx, p, mono);
                have_mono = true;
                break;  // the word is the last factor of a term
            }
            coeff = coeff * parse_coeff_factor(lx, p);
            if (lx.tok == Tok::Star) {
                lx.advance();
                continue;
            }
            break;
        }
        (void)have_mono;
        if (mono_alive)
            e.add_term(mono, coeff);
        if (lx.tok == Tok::End)
            break;
        lx.expect(Tok::Plus, "'+' or end of expression");
    }
    return e;
}

DualMonomial parse_dual_monomial(const std::string& expr, const Prime& p)
{
    Lexer lx(expr);
    DualMonomial m = DualMonomial::one(p);
    if (lx.tok == Tok::Number && lx.number == 1) {
        lx.advance();
        if (lx.tok != Tok::End)
            lx.fail("trailing input after '1'");
        return m;
    }
    while (lx.tok != Tok::End) {
        if (lx.tok != Tok::Name || (lx.name != "t" && lx.name != "x"))
            lx.fail("expected generator t<i> or x<j>");
        const bool is_tau = lx.name == "t";
        lx.advance();
        const long long idx = lx.expect_number("generator index");
        if (is_tau) {
            if (idx > 62)
                lx.fail("tau index out of range");
            if (m.tau_mask >> idx & 1)
                lx.fail("tau exponent exceeds 1");
            m.tau_mask |= std::uint64_t{1} << idx;
        }
        else {
            if (idx < 1)
                lx.fail("xi index must be >= 1");
            int e = 1;
            if (lx.tok == Tok::Caret) {
                lx.advance();
                e = static_cast<int>(lx.expect_number("exponent"));
            }
            if (e > 0)
                m.xi[static_cast<int>(idx)] += e;
        }
    }
    return m;
}

QuadricClass parse_quadric_class(const std::string& expr, const QuadricRing& ring)
{
    Lexer lx(expr);
    QuadricClass x(ring);
    if (lx.tok == Tok::End)
        lx.fail("empty expression");
    while (true) {
        long long coeff = 1;
        if (lx.tok == Tok::Number) {
            coeff = lx.number;
            lx.advance();
            if (lx.tok == Tok::Star)
                lx.advance();
            else if (lx.tok == Tok::Name)
                lx.fail("expected '*' between coefficient and generator");
        }
        if (lx.tok == Tok::Name && lx.name == "h") {
            lx.advance();
            long long e = 1;
            if (lx.tok == Tok::Caret) {
                lx.advance();
                e = lx.expect_number("exponent");
            }
            if (e > ring.d())
                lx.fail("h-power outside the basis range");
            x.add_basis({QuadricGen::Kind::H, static_cast<int>(e)}, static_cast<int>(coeff % 2));
        }
        else if (lx.tok == Tok::Name && lx.name == "l") {
            lx.advance();
            lx.expect(Tok::Underscore, "'_' after l");
            const long long i = lx.expect_number("l index");
            if (i > ring.d())
                lx.fail("l index outside the basis range");
            x.add_basis({QuadricGen::Kind::L, static_cast<int>(i)}, static_cast<int>(coeff % 2));
        }
        else {
            // bare number: multiple of h^0
            x.add_basis({QuadricGen::Kind::H, 0}, static_cast<int>(coeff % 2));
        }
        if (lx.tok == Tok::End)
            break;
        lx.expect(Tok::Plus, "'+' or end of expression");
    }
    return x;
}

ProjClass parse_proj_class(const std::string& expr, const ProjSpaceRing& ring)
{
    Lexer lx(expr);
    ProjClass x(ring);
    if (lx.tok == Tok::End)
        lx.fail("empty expression");
    while (true) {
        long long coeff = 1;
        bool saw_coeff = false;
        if (lx.tok == Tok::Number) {
            coeff = lx.number;
            saw_coeff = true;
            lx.advance();
            if (lx.tok == Tok::Star)
                lx.advance();
            else if (lx.tok == Tok::Name)
                lx.fail("expected '*' between coefficient and generator");
        }
        if (lx.tok == Tok::Name && lx.name == "h") {
            lx.advance();
            long long e = 1;
            if (lx.tok == Tok::Caret) {
                lx.advance();
                e = lx.expect_number("exponent");
            }
            if (e > ring.n)
                lx.fail("h-power above the ring truncation");
            x.add_coeff(static_cast<int>(e), Fp(coeff, ring.prime));
        }
        else if (saw_coeff) {
            x.add_coeff(0, Fp(coeff, ring.prime));
        }
        else {
            lx.fail("expected term");
        }
        if (lx.tok == Tok::End)
            break;
        lx.expect(Tok::Plus, "'+' or end of expression");
    }
    return x;
}

VirtualBundleSpec parse_bundle_spec(const std::string& expr)
{
    Lexer lx(expr);
    VirtualBundleSpec spec;
    if (lx.tok == Tok::End)
        lx.fail("empty bundle spec");
    while (lx.tok != Tok::End) {
        lx.expect(Tok::LParen, "'('");
        if (lx.expect_number("leading 1") != 1)
            lx.fail("factor must start with 1");
        long long a = 0;
        if (lx.tok == Tok::Plus || lx.tok == Tok::Minus) {
            const bool neg = lx.tok == Tok::Minus;
            lx.advance();
            a = 1;
            if (lx.tok == Tok::Number) {
                a = lx.number;
                lx.advance();
            }
            if (lx.tok != Tok::Name || lx.name != "h")
                lx.fail("expected 'h'");
            lx.advance();
            if (neg)
                a = -a;
        }
        lx.expect(Tok::RParen, "')'");
        long long e = 1;
        if (lx.tok == Tok::Caret) {
            lx.advance();
            bool neg = false;
            if (lx.tok == Tok::Minus) {
                neg = true;
                lx.advance();
            }
            e = lx.expect_number("exponent");
            if (neg)
                e = -e;
        }
        spec.factors.push_back({a, e});
    }
    return spec;
}

std::vector<BmuMonomialTerm> parse_bmu_terms(const std::string& expr)
{
    Lexer lx(expr);
    std::vector<BmuMonomialTerm> terms;
    if (lx.tok == Tok::End)
        lx.fail("empty expression");
    while (true) {
        BmuMonomialTerm t;
        bool any = false;
        while (true) {
            if (lx.tok == Tok::Number) {
                t.coeff *= lx.number;
                lx.advance();
            }
            else if (lx.tok == Tok::Name && (lx.name == "u" || lx.name == "v")) {
                const bool is_u = lx.name == "u";
                lx.advance();
                long long e = 1;
                if (lx.tok == Tok::Caret) {
                    lx.advance();
                    e = lx.expect_number("exponent");
                }
                (is_u ? t.u_exp : t.v_exp) += static_cast<int>(e);
            }
            else {
                lx.fail("expected u, v or integer");
            }
            any = true;
            if (lx.tok == Tok::Star) {
                lx.advance();
                continue;
            }
            break;
        }
        if (!any)
            lx.fail("empty term");
        terms.push_back(t);
        if (lx.tok == Tok::End)
            break;
        lx.expect(Tok::Plus, "'+' or end of expression");
    }
    return terms;
}

CoactionElement evaluate_coaction(const std::vector<BmuMonomialTerm>& terms, const Prime& p,
                                  int truncation)
{
    CoactionElement r(p, truncation);
    for (const auto& t : terms) {
        const Fp c(t.coeff, p);
        if (c.is_zero())
            continue;
        CoactionElement part = coaction_of_monomial(t.u_exp, t.v_exp, p, truncation);
        CoactionElement scaled(p, truncation);
        for (const auto& [key, pc] : part.terms())
            scaled.add_term(std::get<0>(key), std::get<1>(key), std::get<2>(key), pc * c);
        r = r + scaled;
    }
    return r;
}

// ---- structured records ----

namespace {

    TauRhoPoly parse_coeff_string(const std::string& s, const Prime& p)
    {
        Lexer lx(s);
        TauRhoPoly c = parse_coeff_sum(lx, p);
        if (lx.tok != Tok::End)
            lx.fail("trailing input in coefficient");
        return c;
    }

}  // namespace

nlohmann::json to_json(const SteenrodElement& e)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : e.terms())
        terms.push_back({{"eps", m.eps}, {"powers", m.powers}, {"coeff", coeff_to_text(c)}});
    return {{"prime", e.prime().value()},
            {"mode", e.mode() == Mode::CharPChow ? "charp" : "char0"},
            {"terms", terms}};
}

SteenrodElement steenrod_from_json(const nlohmann::json& j)
{
    const Prime p(j.at("prime").get<int>());
    const std::string mode_s = j.at("mode").get<std::string>();
    if (mode_s != "charp" && mode_s != "char0")
        throw std::invalid_argument("steenrod_from_json: unknown mode");
    const Mode mode = mode_s == "charp" ? Mode::CharPChow : Mode::Char0Motivic;
    SteenrodElement e(p, mode);
    for (const auto& t : j.at("terms")) {
        OpMonomial m;
        m.p = p.value();
        m.eps = t.at("eps").get<std::vector<int>>();
        m.powers = t.at("powers").get<std::vector<int>>();
        if (m.eps.size() != m.powers.size() + 1)
            throw std::invalid_argument("steenrod_from_json: malformed monomial");
        for (int f : m.eps)
            if (f != 0 && f != 1)
                throw std::invalid_argument("steenrod_from_json: flags must be 0/1");
        for (int s : m.powers)
            if (s < 1)
                throw std::invalid_argument("steenrod_from_json: powers must be positive");
        e.add_term(m, parse_coeff_string(t.at("coeff").get<std::string>(), p));
    }
    return e;
}

nlohmann::json to_json(const DualMonomial& m)
{
    std::vector<int> eps;
    for (int i = 0; i <= 62; ++i)
        if (m.tau_mask >> i & 1)
            eps.push_back(i);
    nlohmann::json xi = nlohmann::json::object();
    for (const auto& [j, r] : m.xi)
        xi[std::to_string(j)] = r;
    return {{"prime", m.p}, {"eps", eps}, {"xi", xi}};
}

DualMonomial dual_monomial_from_json(const nlohmann::json& j)
{
    const Prime p(j.at("prime").get<int>());
    DualMonomial m = DualMonomial::one(p);
    for (int i : j.at("eps")) {
        if (i < 0 || i > 62)
            throw std::invalid_argument("dual_monomial_from_json: tau index out of range");
        if (m.tau_mask >> i & 1)
            throw std::invalid_argument("dual_monomial_from_json: repeated tau index");
        m.tau_mask |= std::uint64_t{1} << i;
    }
    for (const auto& [key, val] : j.at("xi").items()) {
        const int idx = std::stoi(key);
        const int r = val.get<int>();
        if (idx < 1 || r < 0)
            throw std::invalid_argument("dual_monomial_from_json: bad xi entry");
        if (r > 0)
            m.xi[idx] = r;
    }
    return m;
}

nlohmann::json to_json(const CoactionElement& e)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : e.terms()) {
        const auto& [m, u_exp, v_exp] = key;
        terms.push_back({{"dual", to_json(m)}, {"u", u_exp}, {"v", v_exp}, {"coeff", c.v}});
    }
    return {{"prime", e.prime().value()}, {"truncation", e.truncation()}, {"terms", terms}};
}

CoactionElement coaction_from_json(const nlohmann::json& j)
{
    const Prime p(j.at("prime").get<int>());
    CoactionElement e(p, j.at("truncation").get<int>());
    for (const auto& t : j.at("terms")) {
        e.add_term(dual_monomial_from_json(t.at("dual")), t.at("u").get<int>(),
                   t.at("v").get<int>(), Fp(t.at("coeff").get<long long>(), p));
    }
    return e;
}

nlohmann::json to_json(const QuadricClass& x)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [g, c] : x.terms())
        terms.push_back({{"gen", g.kind == QuadricGen::Kind::H ? "h" : "l"},
                         {"idx", g.idx},
                         {"coeff", c}});
    return {{"dimX", x.ring().dimX}, {"terms", terms}};
}

QuadricClass quadric_class_from_json(const nlohmann::json& j)
{
    const QuadricRing ring(j.at("dimX").get<int>());
    QuadricClass x(ring);
    for (const auto& t : j.at("terms")) {
        const std::string gen = t.at("gen").get<std::string>();
        if (gen != "h" && gen != "l")
            throw std::invalid_argument("quadric_class_from_json: unknown generator");
        x.add_basis({gen == "h" ? QuadricGen::Kind::H : QuadricGen::Kind::L,
                     t.at("idx").get<int>()},
                    t.at("coeff").get<int>());
    }
    return x;
}

nlohmann::json to_json(const ProjClass& x)
{
    nlohmann::json terms = nlohmann::json::array();
    for (int i = 0; i <= x.ring().n; ++i)
        if (!x.coeff(i).is_zero())
            terms.push_back({{"idx", i}, {"coeff", x.coeff(i).v}});
    return {{"n", x.ring().n}, {"prime", x.ring().prime.value()}, {"terms", terms}};
}

ProjClass proj_class_from_json(const nlohmann::json& j)
{
    const ProjSpaceRing ring(j.at("n").get<int>(), Prime(j.at("prime").get<int>()));
    ProjClass x(ring);
    for (const auto& t : j.at("terms"))
        x.add_coeff(t.at("idx").get<int>(), Fp(t.at("coeff").get<long long>(), ring.prime));
    return x;
}

nlohmann::json to_json(const TruncSeries& s)
{
    std::vector<long long> coeffs;
    for (int i = 0; i <= s.truncation(); ++i)
        coeffs.push_back(s.coeff(i));
    return {{"truncation", s.truncation()}, {"coeffs", coeffs}};
}

TruncSeries series_from_json(const nlohmann::json& j)
{
    return TruncSeries(j.at("truncation").get<int>(),
                       j.at("coeffs").get<std::vector<long long>>());
}

nlohmann::json to_json(const VirtualBundleSpec& spec)
{
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : spec.factors)
        factors.push_back({{"a", f.a}, {"e", f.e}});
    return {{"factors", factors}};
}

VirtualBundleSpec bundle_spec_from_json(const nlohmann::json& j)
{
    VirtualBundleSpec spec;
    for (const auto& f : j.at("factors"))
        spec.factors.push_back({f.at("a").get<long long>(), f.at("e").get<long long>()});
    return spec;
}

}  // namespace chowops
