#pragma once

#include "fold/rational.hpp"

#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fold {

enum class Gen : uint8_t { S = 0, T = 1 };

inline Gen other(Gen g) { return g == Gen::S ? Gen::T : Gen::S; }
inline char gen_char(Gen g) { return g == Gen::S ? 's' : 't'; }

// Monomial as^i * at^j, ordered by total degree, then power of as.
struct Mono {
    int i = 0;  // power of alpha_s
    int j = 0;  // power of alpha_t

    friend bool operator==(const Mono&, const Mono&) = default;
};

struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.i + a.j != b.i + b.j) return a.i + a.j < b.i + b.j;
        return a.i < b.i;
    }
};

// Element of R = Q[alpha_s, alpha_t] with deg(alpha_s) = deg(alpha_t) = 2.
// No zero coefficients are stored.
class Poly {
public:
    using Terms = std::map<Mono, Rational, MonoLess>;

    Poly() = default;
    explicit Poly(const Rational& c) {
        if (c != 0) terms_[Mono{0, 0}] = c;
    }
    explicit Poly(long long c) : Poly(Rational(c)) {}

    static Poly alpha(Gen g) {
        Poly p;
        p.terms_[g == Gen::S ? Mono{1, 0} : Mono{0, 1}] = 1;
        return p;
    }
    static Poly alpha_s() { return alpha(Gen::S); }
    static Poly alpha_t() { return alpha(Gen::T); }
    static Poly monomial(int i, int j, const Rational& c) {
        Poly p;
        if (c != 0) p.terms_[Mono{i, j}] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(int i, int j) const {
        auto it = terms_.find(Mono{i, j});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Total degree in the even grading (deg alpha = 2); 0 for the zero
    // polynomial by convention.
    int degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, 2 * (m.i + m.j));
        return d;
    }

    bool is_homogeneous() const {
        std::optional<int> d;
        for (const auto& [m, c] : terms_) {
            int md = m.i + m.j;
            if (d && *d != md) return false;
            d = md;
        }
        return true;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(Mono{ma.i + mb.i, ma.j + mb.j}, ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Rational& c, const Poly& p) {
        Poly r;
        if (c == 0) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_[m] = c * pc;
        return r;
    }

    Poly pow(int n) const {
        assert(n >= 0);
        Poly r(1);
        for (int k = 0; k < n; ++k) r *= *this;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    Terms terms_;

    void add_term(const Mono& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
};

// Simple-reflection action: s(as) = -as, s(at) = at and symmetrically for t.
inline Poly act_simple(Gen g, const Poly& f) {
    Poly r;
    for (const auto& [m, c] : f.terms()) {
        int flips = g == Gen::S ? m.i : m.j;
        r += Poly::monomial(m.i, m.j, (flips % 2 == 0) ? c : -c);
    }
    return r;
}

// Swap of alpha_s and alpha_t.
inline Poly tau(const Poly& f) {
    Poly r;
    for (const auto& [m, c] : f.terms()) r += Poly::monomial(m.j, m.i, c);
    return r;
}

// Exact division by alpha_g; the caller guarantees divisibility
// (checked, a failure is an internal arithmetic bug).
inline Poly divide_by_alpha(Gen g, const Poly& f) {
    Poly r;
    for (const auto& [m, c] : f.terms()) {
        if (g == Gen::S) {
            if (m.i == 0) throw std::logic_error("divide_by_alpha: not divisible by as");
            r += Poly::monomial(m.i - 1, m.j, c);
        } else {
            if (m.j == 0) throw std::logic_error("divide_by_alpha: not divisible by at");
            r += Poly::monomial(m.i, m.j - 1, c);
        }
    }
    return r;
}

// Demazure operator: (f - g(f)) / alpha_g. Lowers degree by 2.
inline Poly demazure(Gen g, const Poly& f) {
    return divide_by_alpha(g, f - act_simple(g, f));
}

// tau-invariant and tau-anti-invariant parts: f = Sym + Alt.
inline std::pair<Poly, Poly> sym_alt(const Poly& f) {
    Rational half(1, 2);
    Poly tf = tau(f);
    return {half * (f + tf), half * (f - tf)};
}

inline bool is_tau_invariant(const Poly& f) { return tau(f) == f; }

// Writes f = a + b * alpha_g with a, b fixed by the simple reflection g.
inline std::pair<Poly, Poly> split_over_invariants(Gen g, const Poly& f) {
    Rational half(1, 2);
    Poly a = half * (f + act_simple(g, f));
    Poly b = half * demazure(g, f);
    return {a, b};
}

// Exact division by (alpha_s - alpha_t); throws if not divisible. Used for
// the coefficient formulas of the derived relation families.
inline Poly divide_by_as_minus_at(const Poly& f) {
    // Long division by (as - at), eliminating the highest as-power first.
    Poly rem = f;
    Poly quot;
    while (!rem.is_zero()) {
        // pick the term with the largest i
        Mono lead{-1, -1};
        Rational lc;
        for (const auto& [m, c] : rem.terms()) {
            if (m.i > lead.i || (m.i == lead.i && m.j > lead.j)) {
                lead = m;
                lc = c;
            }
        }
        if (lead.i == 0) throw std::logic_error("not divisible by (as - at)");
        Poly piece = Poly::monomial(lead.i - 1, lead.j, lc);
        quot += piece;
        rem -= piece * (Poly::alpha_s() - Poly::alpha_t());
    }
    return quot;
}

// --- text form ------------------------------------------------------------
//
// Variables `as`, `at`; operators + - * ^; rational literals p/q.

inline std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        if (m.i == 1) mono += "as";
        else if (m.i > 1) mono += "as^" + std::to_string(m.i);
        if (m.j >= 1 && !mono.empty()) mono += "*";
        if (m.j == 1) mono += "at";
        else if (m.j > 1) mono += "at^" + std::to_string(m.j);
        if (mono.empty()) {
            out += to_string(a);
        } else {
            if (a != 1) out += to_string(a) + "*";
            out += mono;
        }
    }
    return out;
}

namespace detail {

class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("polynomial syntax error at byte " +
                                    std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly expr() {
        Poly acc = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                acc *= factor();
            } else {
                // implicit multiplication for juxtaposed factors: "2as", "as at"
                char c = peek();
                if (c == 'a' || c == '(' || (c >= '0' && c <= '9')) acc *= factor();
                else return acc;
            }
        }
    }

    Poly factor() {
        Poly base = atom();
        if (eat('^')) {
            skip_ws();
            size_t start = pos_;
            while (pos_ < s_.size() && isdigit((unsigned char)s_[pos_])) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(std::stoi(s_.substr(start, pos_ - start)));
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        if (eat('(')) {
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (s_.compare(pos_, 2, "as") == 0) {
            pos_ += 2;
            return Poly::alpha_s();
        }
        if (s_.compare(pos_, 2, "at") == 0) {
            pos_ += 2;
            return Poly::alpha_t();
        }
        if (isdigit((unsigned char)peek())) {
            size_t start = pos_;
            while (pos_ < s_.size() && isdigit((unsigned char)s_[pos_])) ++pos_;
            Integer num(s_.substr(start, pos_ - start));
            if (eat('/')) {
                skip_ws();
                size_t dstart = pos_;
                while (pos_ < s_.size() && isdigit((unsigned char)s_[pos_])) ++pos_;
                if (dstart == pos_) fail("expected denominator");
                Integer den(s_.substr(dstart, pos_ - dstart));
                if (den == 0) fail("zero denominator");
                return Poly(Rational(num, den));
            }
            return Poly(Rational(num));
        }
        fail("expected polynomial atom");
    }
};

}  // namespace detail

inline Poly parse_poly(const std::string& text) { return detail::PolyParser(text).parse(); }

}  // namespace fold
