#pragma once

#include "fold/bimod.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace fold {

// Formal direct sum of Bott-Samelson objects, in a fixed block order.
struct SumObj {
    std::vector<Obj> blocks;

    size_t size() const { return blocks.size(); }
    friend bool operator==(const SumObj&, const SumObj&) = default;
};

inline SumObj sum_obj(std::initializer_list<Obj> blocks) { return SumObj{blocks}; }

inline SumObj tau(const SumObj& s) {
    SumObj r;
    r.blocks.reserve(s.size());
    for (const auto& o : s.blocks) r.blocks.push_back(tau(o));
    return r;
}

// Tensor ordering is row-major in the left factor, matching the
// lexicographic summand convention (s > t reads Y (x) Y as ss, st, ts, tt).
inline SumObj tensor(const SumObj& a, const SumObj& b) {
    SumObj r;
    r.blocks.reserve(a.size() * b.size());
    for (const auto& x : a.blocks)
        for (const auto& y : b.blocks) r.blocks.push_back(tensor(x, y));
    return r;
}

inline SumObj shifted(SumObj s, int k) {
    for (auto& o : s.blocks) o.shift += k;
    return s;
}

// Block matrix of morphisms with a single overall degree.
struct SumMor {
    SumObj src;
    SumObj tgt;
    int deg = 0;
    std::vector<Morphism> blocks;  // row-major, tgt.size() x src.size()

    static SumMor zero(const SumObj& src, const SumObj& tgt, int deg) {
        SumMor m{src, tgt, deg, {}};
        m.blocks.reserve(src.size() * tgt.size());
        for (const auto& t : tgt.blocks)
            for (const auto& s : src.blocks) m.blocks.push_back(Morphism::zero(s, t, deg));
        return m;
    }
    static SumMor identity(const SumObj& o) {
        SumMor m = zero(o, o, 0);
        for (size_t i = 0; i < o.size(); ++i) m.at(i, i) = Morphism::identity(o.blocks[i]);
        return m;
    }
    static SumMor from(const Morphism& single) {
        SumMor m{SumObj{{single.src}}, SumObj{{single.tgt}}, single.deg, {single}};
        return m;
    }

    Morphism& at(size_t row, size_t col) { return blocks[row * src.size() + col]; }
    const Morphism& at(size_t row, size_t col) const { return blocks[row * src.size() + col]; }

    bool is_zero() const {
        for (const auto& b : blocks)
            if (!b.is_zero()) return false;
        return true;
    }

    friend SumMor operator+(const SumMor& a, const SumMor& b) {
        if (a.src != b.src || a.tgt != b.tgt) throw std::invalid_argument("block sum: boundary mismatch");
        if (a.deg != b.deg && !a.is_zero() && !b.is_zero())
            throw std::invalid_argument("block sum: degree mismatch");
        SumMor r = a;
        r.deg = a.is_zero() ? b.deg : a.deg;
        for (size_t i = 0; i < r.blocks.size(); ++i) {
            r.blocks[i] = r.blocks[i] + b.blocks[i];
            r.blocks[i].deg = r.deg;
        }
        return r;
    }
    friend SumMor operator-(const SumMor& a, const SumMor& b) { return a + (Rational(-1) * b); }
    friend SumMor operator*(const Rational& c, const SumMor& m) {
        SumMor r = m;
        for (auto& b : r.blocks) b = c * b;
        return r;
    }
};

inline SumMor scale_poly(const Poly& f, const SumMor& m) {
    SumMor r = m;
    r.deg += f.degree();
    for (auto& b : r.blocks) b = scale_poly(f, b);
    return r;
}

inline SumMor compose(const SumMor& g, const SumMor& f) {
    if (f.tgt != g.src) throw std::invalid_argument("block compose: boundary mismatch");
    SumMor r = SumMor::zero(f.src, g.tgt, f.deg + g.deg);
    for (size_t i = 0; i < g.tgt.size(); ++i)
        for (size_t j = 0; j < f.src.size(); ++j) {
            Morphism acc = Morphism::zero(f.src.blocks[j], g.tgt.blocks[i], r.deg);
            for (size_t k = 0; k < f.tgt.size(); ++k) {
                const Morphism& gik = g.at(i, k);
                const Morphism& fkj = f.at(k, j);
                if (gik.is_zero() || fkj.is_zero()) continue;
                Morphism prod = compose(gik, fkj);
                prod.deg = r.deg;
                acc = acc + prod;
            }
            r.at(i, j) = acc;
        }
    return r;
}

inline SumMor tensor(const SumMor& f, const SumMor& g) {
    SumObj src = tensor(f.src, g.src);
    SumObj tgt = tensor(f.tgt, g.tgt);
    SumMor r = SumMor::zero(src, tgt, f.deg + g.deg);
    for (size_t i1 = 0; i1 < f.tgt.size(); ++i1)
        for (size_t i2 = 0; i2 < g.tgt.size(); ++i2)
            for (size_t j1 = 0; j1 < f.src.size(); ++j1)
                for (size_t j2 = 0; j2 < g.src.size(); ++j2) {
                    const Morphism& a = f.at(i1, j1);
                    const Morphism& b = g.at(i2, j2);
                    if (a.is_zero() || b.is_zero()) continue;
                    Morphism prod = tensor(a, b);
                    prod.deg = r.deg;
                    r.at(i1 * g.tgt.size() + i2, j1 * g.src.size() + j2) = prod;
                }
    return r;
}

inline SumMor tau(const SumMor& m) {
    SumMor r{tau(m.src), tau(m.tgt), m.deg, {}};
    r.blocks.reserve(m.blocks.size());
    for (const auto& b : m.blocks) r.blocks.push_back(tau(b));
    return r;
}

inline bool check_bimodule_map(const SumMor& m) {
    for (const auto& b : m.blocks)
        if (!check_bimodule_map(b)) return false;
    return true;
}

inline bool equal(const SumMor& a, const SumMor& b) {
    if (a.src != b.src || a.tgt != b.tgt) return false;
    for (size_t i = 0; i < a.blocks.size(); ++i)
        if (a.blocks[i].mat != b.blocks[i].mat) return false;
    return a.deg == b.deg || a.is_zero();
}

}  // namespace fold
