#pragma once

#include "fold/poly.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fold {

// Word in the simple reflections; indexes a Bott-Samelson bimodule
// B_w = R (x)_{R^{c1}} R (x)_{R^{c2}} ... (x)_{R^{cm}} R.
using Word = std::vector<Gen>;

inline Word word_from_string(const std::string& s) {
    Word w;
    for (char c : s) {
        if (c == 's') w.push_back(Gen::S);
        else if (c == 't') w.push_back(Gen::T);
        else throw std::invalid_argument("bad word letter: " + std::string(1, c));
    }
    return w;
}

inline std::string to_string(const Word& w) {
    std::string s;
    for (Gen g : w) s += gen_char(g);
    return s;
}

inline Word tau(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (Gen g : w) r.push_back(other(g));
    return r;
}

inline Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

// Bott-Samelson object with a grading shift. An element of M[k] has degree
// (underlying degree) - k.
struct Obj {
    Word word;
    int shift = 0;

    size_t rank() const { return size_t(1) << word.size(); }
    friend bool operator==(const Obj&, const Obj&) = default;
};

inline Obj tau(const Obj& o) { return Obj{tau(o.word), o.shift}; }
inline Obj tensor(const Obj& a, const Obj& b) { return Obj{concat(a.word, b.word), a.shift + b.shift}; }
inline Obj shifted(Obj o, int k) {
    o.shift += k;
    return o;
}

// Left-module basis of B_w: bit i of the mask says slot i+1 holds its
// simple root instead of 1.
inline int basis_degree(uint32_t mask, const Obj& o) {
    return 2 * std::popcount(mask) - int(o.word.size()) - o.shift;
}

// Element of a Bott-Samelson bimodule in slot normal form: a left
// R-combination of basis masks.
struct BSElement {
    Obj obj;
    std::map<uint32_t, Poly> coeffs;

    void add(uint32_t mask, const Poly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs.emplace(mask, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
    bool is_zero() const { return coeffs.empty(); }
    friend bool operator==(const BSElement&, const BSElement&) = default;
};

namespace detail {

// Normalizes a pure tensor given by per-slot contents (arbitrary
// polynomials), emitting the expansion over the slot basis. The pending
// polynomial entering slot i from the right must be multiplied in before
// splitting over the slot's invariant subring.
inline void normalize_slots(const Word& word, const std::vector<Poly>& contents,
                            const Poly& outer, BSElement& out) {
    size_t m = word.size();
    // states: (mask over slots > i already fixed, polynomial pending at slot i)
    std::vector<std::pair<uint32_t, Poly>> states{{0u, Poly(1)}};
    for (size_t ii = m; ii-- > 0;) {
        std::vector<std::pair<uint32_t, Poly>> next;
        next.reserve(states.size() * 2);
        for (auto& [mask, pending] : states) {
            Poly q = contents[ii] * pending;
            if (q.is_zero()) continue;
            auto [a, b] = split_over_invariants(word[ii], q);
            if (!a.is_zero()) next.emplace_back(mask, a);
            if (!b.is_zero()) next.emplace_back(mask | (1u << ii), b);
        }
        states = std::move(next);
    }
    for (auto& [mask, pending] : states) out.add(mask, outer * pending);
}

}  // namespace detail

// Right action x * f, result in normal form: f multiplies into the
// rightmost slot, invariant parts slide left slot by slot.
inline BSElement right_mul(const BSElement& x, const Poly& f) {
    BSElement out{x.obj, {}};
    if (f.is_zero()) return out;
    size_t m = x.obj.word.size();
    for (const auto& [mask, c] : x.coeffs) {
        if (m == 0) {
            out.add(0, c * f);
            continue;
        }
        std::vector<Poly> contents(m);
        for (size_t i = 0; i < m; ++i)
            contents[i] = (mask >> i) & 1 ? Poly::alpha(x.obj.word[i]) : Poly(1);
        contents[m - 1] *= f;
        detail::normalize_slots(x.obj.word, contents, c, out);
    }
    return out;
}

inline BSElement tau(const BSElement& x) {
    BSElement out{tau(x.obj), {}};
    for (const auto& [mask, c] : x.coeffs) out.add(mask, tau(c));
    return out;
}

// Graded bimodule map between Bott-Samelson objects as a matrix over R in
// the slot basis: columns indexed by the source basis, rows by the target.
struct Morphism {
    Obj src;
    Obj tgt;
    int deg = 0;
    std::vector<Poly> mat;  // row-major, tgt.rank() x src.rank()

    static Morphism zero(const Obj& src, const Obj& tgt, int deg) {
        return Morphism{src, tgt, deg, std::vector<Poly>(tgt.rank() * src.rank())};
    }
    static Morphism identity(const Obj& o) {
        Morphism m = zero(o, o, 0);
        for (size_t i = 0; i < o.rank(); ++i) m.at(i, i) = Poly(1);
        return m;
    }

    Poly& at(size_t row, size_t col) { return mat[row * src.rank() + col]; }
    const Poly& at(size_t row, size_t col) const { return mat[row * src.rank() + col]; }

    bool is_zero() const {
        for (const auto& p : mat)
            if (!p.is_zero()) return false;
        return true;
    }

    BSElement column(size_t col) const {
        BSElement e{tgt, {}};
        for (size_t r = 0; r < tgt.rank(); ++r) e.add(uint32_t(r), at(r, col));
        return e;
    }

    friend Morphism operator+(const Morphism& a, const Morphism& b) {
        if (a.src != b.src || a.tgt != b.tgt)
            throw std::invalid_argument("morphism sum: boundary mismatch");
        if (a.deg != b.deg && !a.is_zero() && !b.is_zero())
            throw std::invalid_argument("morphism sum: degree mismatch");
        Morphism r = a;
        if (r.is_zero()) r.deg = b.deg;
        for (size_t i = 0; i < r.mat.size(); ++i) r.mat[i] += b.mat[i];
        return r;
    }
    friend Morphism operator-(const Morphism& a, const Morphism& b) { return a + (Rational(-1) * b); }
    friend Morphism operator*(const Rational& c, const Morphism& m) {
        Morphism r = m;
        for (auto& p : r.mat) p = c * p;
        return r;
    }
};

// Left multiplication by a polynomial (acts on the outer coefficient, so it
// commutes with every bimodule map of matching boundary).
inline Morphism scale_poly(const Poly& f, const Morphism& m) {
    Morphism r = m;
    r.deg += f.degree();
    for (auto& p : r.mat) p = f * p;
    return r;
}

inline Morphism compose(const Morphism& g, const Morphism& f) {
    if (f.tgt != g.src) throw std::invalid_argument("compose: boundary mismatch");
    Morphism r = Morphism::zero(f.src, g.tgt, f.deg + g.deg);
    size_t inner = f.tgt.rank();
    for (size_t i = 0; i < g.tgt.rank(); ++i)
        for (size_t k = 0; k < inner; ++k) {
            const Poly& gik = g.at(i, k);
            if (gik.is_zero()) continue;
            for (size_t j = 0; j < f.src.rank(); ++j) {
                const Poly& fkj = f.at(k, j);
                if (!fkj.is_zero()) r.at(i, j) += gik * fkj;
            }
        }
    return r;
}

inline BSElement apply(const Morphism& m, const BSElement& x) {
    if (x.obj != m.src) throw std::invalid_argument("apply: element not in source");
    BSElement out{m.tgt, {}};
    for (const auto& [mask, c] : x.coeffs)
        for (size_t r = 0; r < m.tgt.rank(); ++r) out.add(uint32_t(r), c * m.at(r, mask));
    return out;
}

// Tensor product (horizontal composition): on a basis column b1 (x) b2,
// expand g(b2) in the target basis with left coefficients, push each
// coefficient through f(b1) by the right action, then concatenate.
inline Morphism tensor(const Morphism& f, const Morphism& g) {
    Obj src = tensor(f.src, g.src);
    Obj tgt = tensor(f.tgt, g.tgt);
    Morphism r = Morphism::zero(src, tgt, f.deg + g.deg);
    size_t m1s = f.src.word.size(), m1t = f.tgt.word.size();
    for (size_t c2 = 0; c2 < g.src.rank(); ++c2)
        for (size_t j = 0; j < g.tgt.rank(); ++j) {
            const Poly& d = g.at(j, c2);
            if (d.is_zero()) continue;
            for (size_t c1 = 0; c1 < f.src.rank(); ++c1) {
                BSElement z = right_mul(f.column(c1), d);
                size_t col = c1 | (c2 << m1s);
                for (const auto& [mask, e] : z.coeffs) r.at(mask | (j << m1t), col) += e;
            }
        }
    return r;
}

inline Morphism tau(const Morphism& m) {
    Morphism r{tau(m.src), tau(m.tgt), m.deg, m.mat};
    for (auto& p : r.mat) p = tau(p);
    return r;
}

// True iff m commutes with the right action of both simple roots.
inline bool check_bimodule_map(const Morphism& m) {
    for (Gen g : {Gen::S, Gen::T}) {
        Poly a = Poly::alpha(g);
        for (size_t c = 0; c < m.src.rank(); ++c) {
            BSElement basis{m.src, {{uint32_t(c), Poly(1)}}};
            if (apply(m, right_mul(basis, a)) != right_mul(m.column(c), a)) return false;
        }
    }
    return true;
}

// Checks homogeneity against the declared degree; returns the degree.
inline int degree_of(const Morphism& m) {
    for (size_t r = 0; r < m.tgt.rank(); ++r)
        for (size_t c = 0; c < m.src.rank(); ++c) {
            const Poly& e = m.at(r, c);
            if (e.is_zero()) continue;
            int want = m.deg + basis_degree(uint32_t(c), m.src) - basis_degree(uint32_t(r), m.tgt);
            if (!e.is_homogeneous() || e.degree() != want)
                throw std::invalid_argument("inhomogeneous matrix entry");
        }
    return m.deg;
}

// Entrywise equality on matching boundaries; zero maps compare equal
// regardless of their nominal degree.
inline bool equal(const Morphism& a, const Morphism& b) {
    if (a.src != b.src || a.tgt != b.tgt) return false;
    if (a.mat != b.mat) return false;
    return a.deg == b.deg || a.is_zero();
}

// --- generators of H(A1 x A1) ----------------------------------------------

inline Obj unit_obj() { return Obj{{}, 0}; }
inline Obj gen_obj(Gen g) { return Obj{{g}, 0}; }

// B_c -> 1, f (x) g -> f g, degree 1.
inline Morphism dot_up(Gen c) {
    Morphism m = Morphism::zero(gen_obj(c), unit_obj(), 1);
    m.at(0, 0) = Poly(1);
    m.at(0, 1) = Poly::alpha(c);
    return m;
}

// 1 -> B_c, 1 -> (alpha_c (1(x)1) + 1(x)alpha_c) / 2, degree 1.
inline Morphism dot_down(Gen c) {
    Morphism m = Morphism::zero(unit_obj(), gen_obj(c), 1);
    m.at(0, 0) = Rational(1, 2) * Poly::alpha(c);
    m.at(1, 0) = Poly(Rational(1, 2));
    return m;
}

// B_c B_c -> B_c, f (x) g (x) h -> f d_c(g) (x) h, degree -1.
inline Morphism merge(Gen c) {
    Obj cc{{c, c}, 0};
    Morphism m = Morphism::zero(cc, gen_obj(c), -1);
    m.at(0, 1) = Poly(2);  // d_c(alpha_c) = 2
    m.at(1, 3) = Poly(2);
    return m;
}

// B_c -> B_c B_c, f (x) g -> f (x) 1 (x) g, degree -1.
inline Morphism split(Gen c) {
    Obj cc{{c, c}, 0};
    Morphism m = Morphism::zero(gen_obj(c), cc, -1);
    m.at(0, 0) = Poly(1);
    m.at(2, 1) = Poly(1);  // alpha lands in the second slot
    return m;
}

// B_a B_b -> B_b B_a (a != b): the basis permutation, degree 0.
inline Morphism crossing(Gen a, Gen b) {
    if (a == b) throw std::invalid_argument("crossing needs two distinct colors");
    Obj src{{a, b}, 0}, tgt{{b, a}, 0};
    Morphism m = Morphism::zero(src, tgt, 0);
    for (uint32_t mask = 0; mask < 4; ++mask) {
        uint32_t swapped = ((mask & 1) << 1) | ((mask >> 1) & 1);
        m.at(swapped, mask) = Poly(1);
    }
    return m;
}

// 1 -> 1, multiplication by f.
inline Morphism poly_box(const Poly& f) {
    Morphism m = Morphism::zero(unit_obj(), unit_obj(), f.degree());
    m.at(0, 0) = f;
    return m;
}

// cap = dot_up o merge : B_c B_c -> 1; cup = split o dot_down : 1 -> B_c B_c.
inline Morphism cap(Gen c) { return compose(dot_up(c), merge(c)); }
inline Morphism cup(Gen c) { return compose(split(c), dot_down(c)); }

}  // namespace fold
