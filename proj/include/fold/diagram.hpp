#pragma once

#include "fold/poly.hpp"

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fold {

// Object letters of the folded diagrammatic category: X (orange strand),
// Y (green), Z (brown). Objects are words in these letters; the empty word
// is the unit object, written 1.
enum class Strand : uint8_t { X, Y, Z };

using DWord = std::vector<Strand>;

inline char strand_char(Strand s) {
    switch (s) {
        case Strand::X: return 'X';
        case Strand::Y: return 'Y';
        case Strand::Z: return 'Z';
    }
    return '?';
}

inline std::string to_string(const DWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (Strand x : w) s += strand_char(x);
    return s;
}

inline DWord dword_from_string(const std::string& s) {
    DWord w;
    for (char c : s) {
        switch (c) {
            case 'X': w.push_back(Strand::X); break;
            case 'Y': w.push_back(Strand::Y); break;
            case 'Z': w.push_back(Strand::Z); break;
            case '1': break;  // unit letter contributes nothing
            default: throw std::invalid_argument("bad object letter: " + std::string(1, c));
        }
    }
    return w;
}

// The generating morphisms of the free folded category. Names follow the
// expression grammar: colors g (green, Y), b (brown, Z), o (orange, X);
// u/d for the variant mapping towards/away from shorter words.
enum class GenName : uint8_t {
    dotu_g, dotd_g, dotu_o, dotd_o, dotu_b, dotd_b,
    cap_g, cup_g, cap_o, cup_o, cap_b, cup_b,
    merge_ggg, split_ggg, merge_bbb, split_bbb,
    tri_u_gbb, tri_d_gbb, tri_u_bgg, tri_d_bgg,
    land_u_ogg, land_d_ogg,
    x_bo, x_ob, x_go, x_og, x_oo,
    biv_gb, biv_bg, biv_og, biv_go,
};

struct GenInfo {
    GenName name;
    const char* token;
    DWord src;
    DWord tgt;
    int degree;
};

inline const std::vector<GenInfo>& generator_table() {
    using S = Strand;
    static const std::vector<GenInfo> table = {
        {GenName::dotu_g, "dotu_g", {S::Y}, {}, 1},
        {GenName::dotd_g, "dotd_g", {}, {S::Y}, 1},
        {GenName::dotu_o, "dotu_o", {S::X}, {}, 2},
        {GenName::dotd_o, "dotd_o", {}, {S::X}, 2},
        {GenName::dotu_b, "dotu_b", {S::Z}, {}, 2},
        {GenName::dotd_b, "dotd_b", {}, {S::Z}, 2},
        {GenName::cap_g, "cap_g", {S::Y, S::Y}, {}, 0},
        {GenName::cup_g, "cup_g", {}, {S::Y, S::Y}, 0},
        {GenName::cap_o, "cap_o", {S::X, S::X}, {}, 0},
        {GenName::cup_o, "cup_o", {}, {S::X, S::X}, 0},
        {GenName::cap_b, "cap_b", {S::Z, S::Z}, {}, 0},
        {GenName::cup_b, "cup_b", {}, {S::Z, S::Z}, 0},
        {GenName::merge_ggg, "merge_ggg", {S::Y, S::Y}, {S::Y}, -1},
        {GenName::split_ggg, "split_ggg", {S::Y}, {S::Y, S::Y}, -1},
        {GenName::merge_bbb, "merge_bbb", {S::Z, S::Z}, {S::Z}, -2},
        {GenName::split_bbb, "split_bbb", {S::Z}, {S::Z, S::Z}, -2},
        {GenName::tri_u_gbb, "tri_u_gbb", {S::Z, S::Z}, {S::Y}, -1},
        {GenName::tri_d_gbb, "tri_d_gbb", {S::Y}, {S::Z, S::Z}, -1},
        {GenName::tri_u_bgg, "tri_u_bgg", {S::Y, S::Y}, {S::Z}, 0},
        {GenName::tri_d_bgg, "tri_d_bgg", {S::Z}, {S::Y, S::Y}, 0},
        {GenName::land_u_ogg, "land_u_ogg", {S::Y, S::Y}, {S::X}, 0},
        {GenName::land_d_ogg, "land_d_ogg", {S::X}, {S::Y, S::Y}, 0},
        {GenName::x_bo, "x_bo", {S::Z, S::X}, {S::X, S::Z}, 0},
        {GenName::x_ob, "x_ob", {S::X, S::Z}, {S::Z, S::X}, 0},
        {GenName::x_go, "x_go", {S::Y, S::X}, {S::X, S::Y}, 0},
        {GenName::x_og, "x_og", {S::X, S::Y}, {S::Y, S::X}, 0},
        {GenName::x_oo, "x_oo", {S::X, S::X}, {S::X, S::X}, 0},
        {GenName::biv_gb, "biv_gb", {S::Z}, {S::Y}, 1},
        {GenName::biv_bg, "biv_bg", {S::Y}, {S::Z}, 1},
        {GenName::biv_og, "biv_og", {S::Y}, {S::X}, 1},
        {GenName::biv_go, "biv_go", {S::X}, {S::Y}, 1},
    };
    return table;
}

inline const GenInfo& gen_info(GenName n) { return generator_table()[size_t(n)]; }

inline std::optional<GenName> gen_by_token(const std::string& token) {
    for (const auto& g : generator_table()) {
        if (token == g.token) return g.name;
        // tolerate the compressed spelling (capg for cap_g)
        std::string compressed;
        for (const char* p = g.token; *p; ++p)
            if (*p != '_') compressed += *p;
        if (token == compressed) return g.name;
    }
    return std::nullopt;
}

// Expression in the diagram language: a well-shaped composite of generators.
class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
public:
    enum class Kind { Gen, Id, Compose, Tensor, Add, Scale, ScalePoly };

    Kind kind;
    GenName gen{};                // Kind::Gen
    DWord id_word;                // Kind::Id
    ExprPtr lhs, rhs;             // Compose/Tensor/Add (rhs unused for Scale*)
    Rational scalar;              // Kind::Scale
    Poly poly;                    // Kind::ScalePoly

    DWord src;
    DWord tgt;
    int degree = 0;

    static ExprPtr generator(GenName g) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Gen;
        e->gen = g;
        e->src = gen_info(g).src;
        e->tgt = gen_info(g).tgt;
        e->degree = gen_info(g).degree;
        return e;
    }

    static ExprPtr identity(const DWord& w) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Id;
        e->id_word = w;
        e->src = w;
        e->tgt = w;
        e->degree = 0;
        return e;
    }

    static ExprPtr poly_box(const Poly& f) {
        if (!is_tau_invariant(f))
            throw std::invalid_argument("polynomial box must be tau-invariant: " + fold::to_string(f));
        auto e = std::make_shared<Expr>();
        e->kind = Kind::ScalePoly;
        e->poly = f;
        e->lhs = identity({});
        e->src = {};
        e->tgt = {};
        e->degree = f.degree();
        return e;
    }

    // g after f (g o f).
    static ExprPtr compose(ExprPtr g, ExprPtr f) {
        if (f->tgt != g->src)
            throw std::invalid_argument("composition boundary mismatch: " + fold::to_string(f->tgt) +
                                        " vs " + fold::to_string(g->src));
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Compose;
        e->lhs = std::move(g);
        e->rhs = std::move(f);
        e->src = e->rhs->src;
        e->tgt = e->lhs->tgt;
        e->degree = e->lhs->degree + e->rhs->degree;
        return e;
    }

    static ExprPtr tensor(ExprPtr a, ExprPtr b) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Tensor;
        e->src = a->src;
        e->src.insert(e->src.end(), b->src.begin(), b->src.end());
        e->tgt = a->tgt;
        e->tgt.insert(e->tgt.end(), b->tgt.begin(), b->tgt.end());
        e->degree = a->degree + b->degree;
        e->lhs = std::move(a);
        e->rhs = std::move(b);
        return e;
    }

    // True for expressions that are zero for syntactic reasons (a zero
    // scalar somewhere along every summand); such terms are exempt from the
    // degree check in sums.
    bool is_syntactic_zero() const {
        switch (kind) {
            case Kind::Scale: return scalar == 0 || lhs->is_syntactic_zero();
            case Kind::ScalePoly: return poly.is_zero() || (lhs && lhs->is_syntactic_zero());
            case Kind::Add: return lhs->is_syntactic_zero() && rhs->is_syntactic_zero();
            case Kind::Compose:
            case Kind::Tensor: return lhs->is_syntactic_zero() || rhs->is_syntactic_zero();
            default: return false;
        }
    }

    static ExprPtr add(ExprPtr a, ExprPtr b) {
        if (a->src != b->src || a->tgt != b->tgt)
            throw std::invalid_argument("sum boundary mismatch");
        if (a->degree != b->degree && !a->is_syntactic_zero() && !b->is_syntactic_zero())
            throw std::invalid_argument("sum degree mismatch: " + std::to_string(a->degree) + " vs " +
                                        std::to_string(b->degree));
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Add;
        e->src = a->src;
        e->tgt = a->tgt;
        e->degree = a->is_syntactic_zero() ? b->degree : a->degree;
        e->lhs = std::move(a);
        e->rhs = std::move(b);
        return e;
    }

    static ExprPtr scale(const Rational& c, ExprPtr a) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Scale;
        e->scalar = c;
        e->src = a->src;
        e->tgt = a->tgt;
        e->degree = a->degree;
        e->lhs = std::move(a);
        return e;
    }

    static ExprPtr scale_poly(const Poly& f, ExprPtr a) {
        if (!is_tau_invariant(f))
            throw std::invalid_argument("scalar polynomial must be tau-invariant");
        auto e = std::make_shared<Expr>();
        e->kind = Kind::ScalePoly;
        e->poly = f;
        e->src = a->src;
        e->tgt = a->tgt;
        e->degree = a->degree + f.degree();
        e->lhs = std::move(a);
        return e;
    }
};

// Short builders used throughout the catalog.
inline ExprPtr egen(GenName g) { return Expr::generator(g); }
inline ExprPtr eid(const std::string& w) { return Expr::identity(dword_from_string(w)); }
inline ExprPtr operator*(const Rational& c, ExprPtr e) { return Expr::scale(c, std::move(e)); }
inline ExprPtr operator+(ExprPtr a, ExprPtr b) { return Expr::add(std::move(a), std::move(b)); }
inline ExprPtr operator-(ExprPtr a, ExprPtr b) {
    return Expr::add(std::move(a), Expr::scale(Rational(-1), std::move(b)));
}
// g o f, read right to left like the grammar's '.'
inline ExprPtr operator<<(ExprPtr g, ExprPtr f) { return Expr::compose(std::move(g), std::move(f)); }
inline ExprPtr etens(ExprPtr a, ExprPtr b) { return Expr::tensor(std::move(a), std::move(b)); }
inline ExprPtr etens(ExprPtr a, ExprPtr b, ExprPtr c) { return etens(etens(a, b), c); }
inline ExprPtr etens(ExprPtr a, ExprPtr b, ExprPtr c, ExprPtr d) { return etens(etens(a, b, c), d); }

// --- printing ----------------------------------------------------------------

namespace detail {
inline void collect_chain(const ExprPtr& e, Expr::Kind kind, std::vector<ExprPtr>& out) {
    if (e->kind == kind) {
        collect_chain(e->lhs, kind, out);
        collect_chain(e->rhs, kind, out);
    } else {
        out.push_back(e);
    }
}
}  // namespace detail

inline std::string to_text(const ExprPtr& e, int parent_prec = 0) {
    // precedence levels: 1 sum, 2 compose, 3 tensor, 4 atom; associative
    // chains are flattened so printed text re-parses to the same text
    auto wrap = [&](int prec, const std::string& s) {
        return prec < parent_prec ? "(" + s + ")" : s;
    };
    switch (e->kind) {
        case Expr::Kind::Gen: return gen_info(e->gen).token;
        case Expr::Kind::Id: return "id(" + to_string(e->id_word) + ")";
        case Expr::Kind::Compose: {
            std::vector<ExprPtr> parts;
            detail::collect_chain(e, Expr::Kind::Compose, parts);
            std::string s;
            for (size_t i = 0; i < parts.size(); ++i)
                s += (i ? " . " : "") + to_text(parts[i], 3);
            return wrap(2, s);
        }
        case Expr::Kind::Tensor: {
            std::vector<ExprPtr> parts;
            detail::collect_chain(e, Expr::Kind::Tensor, parts);
            std::string s;
            for (size_t i = 0; i < parts.size(); ++i)
                s += (i ? " x " : "") + to_text(parts[i], 4);
            return wrap(3, s);
        }
        case Expr::Kind::Add: {
            std::vector<ExprPtr> parts;
            detail::collect_chain(e, Expr::Kind::Add, parts);
            std::string s = to_text(parts[0], 1);
            for (size_t i = 1; i < parts.size(); ++i) {
                if (parts[i]->kind == Expr::Kind::Scale && parts[i]->scalar == -1)
                    s += " - " + to_text(parts[i]->lhs, 2);
                else s += " + " + to_text(parts[i], 2);
            }
            return wrap(1, s);
        }
        case Expr::Kind::Scale:
            return wrap(2, to_string(e->scalar) + " * " + to_text(e->lhs, 4));
        case Expr::Kind::ScalePoly: {
            if (e->lhs->kind == Expr::Kind::Id && e->lhs->id_word.empty())
                return "poly[" + to_string(e->poly) + "]";
            // a left polynomial coefficient is the same as tensoring the box
            // in on the left, so print it as one flat tensor chain
            std::vector<ExprPtr> parts;
            detail::collect_chain(e->lhs, Expr::Kind::Tensor, parts);
            std::string s = "poly[" + to_string(e->poly) + "]";
            for (const auto& p : parts) s += " x " + to_text(p, 4);
            return wrap(3, s);
        }
    }
    return "?";
}

// --- parsing -----------------------------------------------------------------

namespace detail {

class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    ExprPtr parse() {
        ExprPtr e = sum();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return e;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("expression syntax error at byte " + std::to_string(pos_) +
                                    ": " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && isspace((unsigned char)s_[pos_])) ++pos_;
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

    ExprPtr wrap_errors(const std::function<ExprPtr()>& f) {
        size_t at = pos_;
        try {
            return f();
        } catch (const std::invalid_argument& err) {
            std::string what = err.what();
            if (what.find("syntax error") != std::string::npos) throw;
            throw std::invalid_argument("shape error at byte " + std::to_string(at) + ": " + what);
        }
    }

    ExprPtr sum() {
        ExprPtr acc = chain();  // leading '-' is handled by scaled()
        for (;;) {
            skip_ws();
            if (eat('+')) {
                ExprPtr rhs = chain();
                acc = wrap_errors([&] { return Expr::add(acc, rhs); });
            } else if (eat('-')) {
                ExprPtr rhs = chain();
                acc = wrap_errors([&] { return Expr::add(acc, Expr::scale(Rational(-1), rhs)); });
            } else {
                return acc;
            }
        }
    }

    // composition chain, right operand applied first
    ExprPtr chain() {
        std::vector<ExprPtr> parts{scaled()};
        while (eat('.')) parts.push_back(scaled());
        ExprPtr acc = parts.back();
        for (size_t i = parts.size() - 1; i-- > 0;)
            acc = wrap_errors([&] { return Expr::compose(parts[i], acc); });
        return acc;
    }

    // optional rational scalar prefix: [-]p/q * <tensor chain>
    ExprPtr scaled() {
        skip_ws();
        bool negated = false;
        if (peek() == '-') {
            ++pos_;
            negated = true;
        }
        if (isdigit((unsigned char)peek())) {
            size_t save = pos_;
            Rational c = rational();
            if (negated) c = -c;
            if (eat('*')) return Expr::scale(c, tensor_chain());
            pos_ = save;  // bare number is not an expression
            fail("expected '*' after scalar");
        }
        if (negated) return Expr::scale(Rational(-1), tensor_chain());
        return tensor_chain();
    }

    ExprPtr tensor_chain() {
        ExprPtr acc = atom();
        for (;;) {
            skip_ws();
            // the letter x is the tensor operator; identifiers never start
            // with a bare x followed by whitespace or an atom
            if (peek() == 'x' && pos_ + 1 < s_.size() &&
                (isspace((unsigned char)s_[pos_ + 1]) || s_[pos_ + 1] == '(')) {
                ++pos_;
                ExprPtr rhs = atom();
                acc = Expr::tensor(acc, rhs);
            } else {
                return acc;
            }
        }
    }

    Rational rational() {
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
            return Rational(num, den);
        }
        return Rational(num);
    }

    ExprPtr atom() {
        skip_ws();
        if (eat('(')) {
            ExprPtr e = sum();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        size_t at = pos_;
        if (s_.compare(pos_, 5, "poly[") == 0) {
            pos_ += 5;
            size_t depth = 1, start = pos_;
            while (pos_ < s_.size() && depth > 0) {
                if (s_[pos_] == '[') ++depth;
                if (s_[pos_] == ']') --depth;
                ++pos_;
            }
            if (depth != 0) fail("unterminated poly[");
            std::string inner = s_.substr(start, pos_ - 1 - start);
            return wrap_errors([&] { return Expr::poly_box(parse_poly(inner)); });
        }
        if (s_.compare(pos_, 3, "id(") == 0) {
            pos_ += 3;
            size_t start = pos_;
            while (pos_ < s_.size() && s_[pos_] != ')') ++pos_;
            if (pos_ == s_.size()) fail("unterminated id(");
            std::string inner = s_.substr(start, pos_ - start);
            ++pos_;
            return wrap_errors([&] { return Expr::identity(dword_from_string(inner)); });
        }
        // generator token
        size_t start = pos_;
        while (pos_ < s_.size() && (isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_')) ++pos_;
        if (start == pos_) fail("expected expression atom");
        std::string tok = s_.substr(start, pos_ - start);
        if (auto g = gen_by_token(tok)) return Expr::generator(*g);
        pos_ = at;
        fail("unknown generator token '" + tok + "'");
    }
};

}  // namespace detail

inline ExprPtr parse_expr(const std::string& text) { return detail::ExprParser(text).parse(); }

}  // namespace fold
