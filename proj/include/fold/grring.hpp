#pragma once

#include "fold/equiv.hpp"
#include "fold/laurent.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fold {

// The split Grothendieck ring: a free rank-5 module over Z[v, v^-1] on the
// classes of the indecomposables, with multiplication determined by
//   X^2 = 1, XY = Y, Y^2 = (v+v^-1)Y + Z + XZ,
//   YZ = (v+v^-1)(Z+XZ), Z^2 = (v^2+1+v^-2)Z + XZ,
// commutative, and the shift convention [M[1]] = v [M].
struct RingElem {
    std::array<LaurentInt, 5> c{};  // coefficients on 1, X, Y, Z, XZ

    static RingElem basis(IndecName n, const LaurentInt& coeff = LaurentInt(1)) {
        RingElem r;
        r.c[size_t(n)] = coeff;
        return r;
    }
    static RingElem one() { return basis(IndecName::One); }

    bool is_zero() const {
        for (const auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }

    friend RingElem operator+(RingElem a, const RingElem& b) {
        for (size_t i = 0; i < 5; ++i) a.c[i] += b.c[i];
        return a;
    }
    friend RingElem operator-(RingElem a, const RingElem& b) {
        for (size_t i = 0; i < 5; ++i) a.c[i] -= b.c[i];
        return a;
    }
    friend RingElem operator*(const LaurentInt& s, RingElem a) {
        for (auto& x : a.c) x = s * x;
        return a;
    }
    friend bool operator==(const RingElem&, const RingElem&) = default;
};

namespace grdetail {

// products of basis classes, as rank-5 coefficient vectors
inline RingElem basis_product(IndecName a, IndecName b) {
    using N = IndecName;
    if (a == N::One) return RingElem::basis(b);
    if (b == N::One) return RingElem::basis(a);
    if (IndecName(a) > IndecName(b)) std::swap(a, b);  // commutative
    LaurentInt vv1 = LaurentInt::v_pow(1) + LaurentInt::v_pow(-1);
    LaurentInt v2v2 = LaurentInt::v_pow(2) + LaurentInt(1) + LaurentInt::v_pow(-2);
    if (a == N::X) {
        switch (b) {
            case N::X: return RingElem::one();
            case N::Y: return RingElem::basis(N::Y);
            case N::Z: return RingElem::basis(N::XZ);
            case N::XZ: return RingElem::basis(N::Z);
            default: break;
        }
    }
    if (a == N::Y) {
        switch (b) {
            case N::Y: return vv1 * RingElem::basis(N::Y) + RingElem::basis(N::Z) +
                              RingElem::basis(N::XZ);
            case N::Z: return vv1 * (RingElem::basis(N::Z) + RingElem::basis(N::XZ));
            case N::XZ: return vv1 * (RingElem::basis(N::Z) + RingElem::basis(N::XZ));
            default: break;
        }
    }
    if (a == N::Z) {
        switch (b) {
            case N::Z: return v2v2 * RingElem::basis(N::Z) + RingElem::basis(N::XZ);
            case N::XZ: return v2v2 * RingElem::basis(N::XZ) + RingElem::basis(N::Z);
            default: break;
        }
    }
    // XZ * XZ = Z^2
    return v2v2 * RingElem::basis(N::Z) + RingElem::basis(N::XZ);
}

}  // namespace grdetail

inline RingElem multiply(const RingElem& a, const RingElem& b) {
    RingElem out;
    for (size_t i = 0; i < 5; ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < 5; ++j) {
            if (b.c[j].is_zero()) continue;
            RingElem prod = grdetail::basis_product(IndecName(i), IndecName(j));
            out = out + ((a.c[i] * b.c[j]) * prod);
        }
    }
    return out;
}

// Substitutes X -> x (x = +1 or -1) and collects on the basis (1, Y, Z).
struct SpecializedElem {
    std::array<LaurentInt, 3> c{};  // coefficients on 1, Y, Z
    friend bool operator==(const SpecializedElem&, const SpecializedElem&) = default;
};

inline SpecializedElem specialize(const RingElem& a, int x) {
    if (x != 1 && x != -1) throw std::invalid_argument("specialization point must be +1 or -1");
    SpecializedElem out;
    LaurentInt sign(x);
    out.c[0] = a.c[size_t(IndecName::One)] + sign * a.c[size_t(IndecName::X)];
    out.c[1] = a.c[size_t(IndecName::Y)];
    out.c[2] = a.c[size_t(IndecName::Z)] + sign * a.c[size_t(IndecName::XZ)];
    return out;
}

// --- tensor words and decomposition ------------------------------------------

// A word of shifted indecomposables, e.g. Y * Z[2].
using TensorWord = std::vector<std::pair<IndecName, int>>;

// Multiset of shifted indecomposables (the summand list of a decomposition).
using SummandMultiset = std::map<std::pair<IndecName, int>, long long>;

inline RingElem ring_class(const TensorWord& w) {
    RingElem acc = RingElem::one();
    for (const auto& [n, k] : w) acc = multiply(acc, RingElem::basis(n, LaurentInt::v_pow(k)));
    return acc;
}

inline RingElem ring_class(const SummandMultiset& m) {
    RingElem acc;
    for (const auto& [key, count] : m)
        acc = acc + RingElem::basis(key.first, LaurentInt::v_pow(key.second, count));
    return acc;
}

namespace grdetail {

// pairwise tensor decompositions of the six isomorphism families, as
// summand lists (name, relative shift)
inline std::vector<std::pair<IndecName, int>> pair_decomposition(IndecName a, IndecName b) {
    using N = IndecName;
    if (a == N::One) return {{b, 0}};
    if (b == N::One) return {{a, 0}};
    if (a > b) std::swap(a, b);
    if (a == N::X) {
        switch (b) {
            case N::X: return {{N::One, 0}};
            case N::Y: return {{N::Y, 0}};
            case N::Z: return {{N::XZ, 0}};
            case N::XZ: return {{N::Z, 0}};
            default: break;
        }
    }
    if (a == N::Y) {
        switch (b) {
            case N::Y: return {{N::Y, -1}, {N::Y, 1}, {N::Z, 0}, {N::XZ, 0}};
            case N::Z: return {{N::Z, -1}, {N::Z, 1}, {N::XZ, -1}, {N::XZ, 1}};
            case N::XZ: return {{N::Z, -1}, {N::Z, 1}, {N::XZ, -1}, {N::XZ, 1}};
            default: break;
        }
    }
    if (a == N::Z) {
        switch (b) {
            case N::Z: return {{N::Z, -2}, {N::Z, 0}, {N::Z, 2}, {N::XZ, 0}};
            case N::XZ: return {{N::XZ, -2}, {N::XZ, 0}, {N::XZ, 2}, {N::Z, 0}};
            default: break;
        }
    }
    return {{N::Z, -2}, {N::Z, 0}, {N::Z, 2}, {N::XZ, 0}};  // XZ * XZ
}

}  // namespace grdetail

// Repeated application of the pairwise isomorphisms, folding left to right.
inline SummandMultiset decompose_word(const TensorWord& w) {
    SummandMultiset acc{{{IndecName::One, 0}, 1}};
    for (const auto& [n, k] : w) {
        SummandMultiset next;
        for (const auto& [key, count] : acc)
            for (const auto& [m, rel] : grdetail::pair_decomposition(key.first, n))
                next[{m, key.second + k + rel}] += count;
        acc = std::move(next);
    }
    return acc;
}

// The trace form used as a cross-check oracle against the Hom-space solver:
// the numerator of grdim Hom(A, 1) for each basis class.
inline LaurentInt oracle_trace(const RingElem& a) {
    LaurentInt out;
    out += a.c[size_t(IndecName::One)];
    out += a.c[size_t(IndecName::X)] * LaurentInt::v_pow(2);
    out += a.c[size_t(IndecName::Y)] * (LaurentInt::v_pow(1) + LaurentInt::v_pow(3));
    out += a.c[size_t(IndecName::Z)] * LaurentInt::v_pow(2);
    out += a.c[size_t(IndecName::XZ)] * LaurentInt::v_pow(4);
    return out;
}

// Predicted numerator of grdim Hom(F(A), F(B)) over the invariant ring.
inline LaurentInt predicted_grdim(const TensorWord& a, const TensorWord& b) {
    return oracle_trace(multiply(ring_class(a), ring_class(b)));
}

// --- text forms ---------------------------------------------------------------

inline std::string to_string(const RingElem& a) {
    std::string out;
    for (size_t i = 0; i < 5; ++i) {
        if (a.c[i].is_zero()) continue;
        std::string coeff = to_string(a.c[i]);
        std::string basis = to_string(IndecName(i));
        if (!out.empty()) out += " + ";
        if (i == 0) out += coeff;
        else if (coeff == "1") out += basis;
        else if (a.c[i].terms().size() == 1) out += coeff + basis;
        else out += "(" + coeff + ")" + basis;
    }
    return out.empty() ? "0" : out;
}

inline std::string to_string(const SpecializedElem& a) {
    static const char* names[3] = {"1", "Y", "Z"};
    std::string out;
    for (size_t i = 0; i < 3; ++i) {
        if (a.c[i].is_zero()) continue;
        std::string coeff = to_string(a.c[i]);
        if (!out.empty()) out += " + ";
        if (i == 0) out += coeff;
        else if (coeff == "1") out += names[i];
        else if (a.c[i].terms().size() == 1) out += coeff + names[i];
        else out += "(" + coeff + ")" + names[i];
    }
    return out.empty() ? "0" : out;
}

// Parses a tensor word like "Y*Z[2]*X" (letters 1, X, Y, Z, XZ; shifts [k]).
inline TensorWord parse_tensor_word(const std::string& text) {
    TensorWord out;
    size_t pos = 0;
    auto skip = [&] { while (pos < text.size() && isspace((unsigned char)text[pos])) ++pos; };
    skip();
    while (pos < text.size()) {
        size_t start = pos;
        while (pos < text.size() && (isalnum((unsigned char)text[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("bad tensor word at byte " + std::to_string(pos));
        IndecName n = indec_from_string(text.substr(start, pos - start));
        int shift = 0;
        skip();
        if (pos < text.size() && text[pos] == '[') {
            size_t close = text.find(']', pos);
            if (close == std::string::npos) throw std::invalid_argument("unterminated shift");
            shift = std::stoi(text.substr(pos + 1, close - pos - 1));
            pos = close + 1;
        }
        out.push_back({n, shift});
        skip();
        if (pos < text.size()) {
            if (text[pos] != '*') throw std::invalid_argument("expected '*' between factors");
            ++pos;
            skip();
        }
    }
    return out;
}

// Parses ring expressions over 1, X, Y, Z, XZ, v with + * ^ and shifts [k].
namespace grdetail {

class RingParser {
public:
    explicit RingParser(const std::string& s) : s_(s) {}
    RingElem parse() {
        RingElem e = sum();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return e;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& m) {
        throw std::invalid_argument("ring syntax error at byte " + std::to_string(pos_) + ": " + m);
    }
    void skip() { while (pos_ < s_.size() && isspace((unsigned char)s_[pos_])) ++pos_; }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    int integer() {
        skip();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && isdigit((unsigned char)s_[pos_])) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stoi(s_.substr(start, pos_ - start));
    }

    RingElem sum() {
        RingElem acc = eat('-') ? (LaurentInt(-1) * term()) : term();
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }
    RingElem term() {
        RingElem acc = factor();
        while (eat('*')) acc = multiply(acc, factor());
        return acc;
    }
    RingElem factor() {
        RingElem base = atom();
        for (;;) {
            skip();
            if (eat('[')) {
                int k = integer();
                if (!eat(']')) fail("expected ']'");
                base = LaurentInt::v_pow(k) * base;
            } else if (eat('^')) {
                int k = integer();
                if (k < 0) fail("negative powers only for v");
                RingElem acc = RingElem::one();
                for (int i = 0; i < k; ++i) acc = multiply(acc, base);
                base = acc;
            } else {
                return base;
            }
        }
    }
    RingElem atom() {
        skip();
        if (eat('(')) {
            RingElem e = sum();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (pos_ < s_.size() && s_[pos_] == 'v') {
            ++pos_;
            int k = 1;
            if (eat('^')) k = integer();
            return RingElem::basis(IndecName::One, LaurentInt::v_pow(k));
        }
        if (pos_ < s_.size() && isdigit((unsigned char)s_[pos_])) {
            size_t start = pos_;
            while (pos_ < s_.size() && isdigit((unsigned char)s_[pos_])) ++pos_;
            long long n = std::stoll(s_.substr(start, pos_ - start));
            if (n == 1 && (pos_ >= s_.size() || !isalnum((unsigned char)s_[pos_])))
                return RingElem::one();
            return RingElem::basis(IndecName::One, LaurentInt(n));
        }
        if (s_.compare(pos_, 2, "XZ") == 0) { pos_ += 2; return RingElem::basis(IndecName::XZ); }
        if (pos_ < s_.size()) {
            switch (s_[pos_]) {
                case 'X': ++pos_; return RingElem::basis(IndecName::X);
                case 'Y': ++pos_; return RingElem::basis(IndecName::Y);
                case 'Z': ++pos_; return RingElem::basis(IndecName::Z);
                default: break;
            }
        }
        fail("expected ring atom");
    }
};

}  // namespace grdetail

inline RingElem parse_ring_expr(const std::string& text) {
    return grdetail::RingParser(text).parse();
}

}  // namespace fold
