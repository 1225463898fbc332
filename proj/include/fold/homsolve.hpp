#pragma once

#include "fold/equiv.hpp"
#include "fold/laurent.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace fold {

// Degreewise computation of Hom spaces by exact linear algebra: unknown
// monomial coefficients subject to entry-degree constraints, right
// multiplication equivariance, and the tau-intertwining condition.

namespace homdetail {

// Sparse row over Q with deterministic column order.
using Row = std::map<int, Rational>;

// Reduced row echelon basis of the null space of the sparse system
// rows * x = 0 over unknowns 0..n-1. Returns vectors in a deterministic
// reduced form (each with leading coefficient 1 at its pivot).
inline std::vector<std::vector<Rational>> nullspace(std::vector<Row> rows, int n) {
    // Gaussian elimination tracking pivot columns.
    std::vector<Row> reduced;
    std::vector<int> pivots;
    for (Row& r : rows) {
        Row cur = std::move(r);
        for (;;) {
            // reduce by existing pivots
            bool changed = false;
            for (size_t k = 0; k < reduced.size(); ++k) {
                auto it = cur.find(pivots[k]);
                if (it == cur.end()) continue;
                Rational f = it->second;
                for (const auto& [c, v] : reduced[k]) {
                    auto jt = cur.emplace(c, Rational(0)).first;
                    jt->second -= f * v;
                    if (jt->second == 0) cur.erase(jt);
                }
                changed = true;
            }
            if (!changed) break;
        }
        if (cur.empty()) continue;
        int p = cur.begin()->first;
        Rational lead = cur.begin()->second;
        for (auto& [c, v] : cur) v /= lead;
        reduced.push_back(std::move(cur));
        pivots.push_back(p);
    }
    // back substitution to full reduced echelon form
    for (size_t k = reduced.size(); k-- > 0;) {
        for (size_t j = 0; j < k; ++j) {
            auto it = reduced[j].find(pivots[k]);
            if (it == reduced[j].end()) continue;
            Rational f = it->second;
            for (const auto& [c, v] : reduced[k]) {
                auto jt = reduced[j].emplace(c, Rational(0)).first;
                jt->second -= f * v;
                if (jt->second == 0) reduced[j].erase(jt);
            }
        }
    }
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    std::map<int, size_t> pivot_row;
    for (size_t k = 0; k < pivots.size(); ++k) pivot_row[pivots[k]] = k;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(n);
        v[free] = 1;
        for (const auto& [p, k] : pivot_row) {
            auto it = reduced[k].find(free);
            if (it != reduced[k].end()) v[p] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Monomials of a fixed even degree in as, at; deterministic order.
inline std::vector<Mono> monomials_of_degree(int deg) {
    std::vector<Mono> out;
    if (deg < 0 || deg % 2 != 0) return out;
    int total = deg / 2;
    for (int i = total; i >= 0; --i) out.push_back(Mono{i, total - i});
    return out;
}

// Unknown layout for a single block pair: one variable per (row, col,
// monomial) with the entry degree fixed by homogeneity.
struct BlockVars {
    Obj src;
    Obj tgt;
    int deg;
    struct Slot {
        size_t row, col;
        Mono mono;
    };
    std::vector<Slot> slots;
    std::map<std::tuple<size_t, size_t, int, int>, int> index;  // -> global var id

    void build(int first_id) {
        int id = first_id;
        for (size_t c = 0; c < src.rank(); ++c)
            for (size_t r = 0; r < tgt.rank(); ++r) {
                int ed = deg + basis_degree(uint32_t(c), src) - basis_degree(uint32_t(r), tgt);
                for (const Mono& m : monomials_of_degree(ed)) {
                    index[{r, c, m.i, m.j}] = id++;
                    slots.push_back({r, c, m});
                }
            }
    }
};

}  // namespace homdetail

// Basis of the space of degree-d bimodule maps B_src -> B_tgt over Q,
// returned as concrete matrices. Cached per (src word/shift, tgt
// word/shift, d).
inline std::vector<Morphism> bimodule_hom_basis(const Obj& src, const Obj& tgt, int d) {
    using namespace homdetail;
    static std::map<std::tuple<std::string, int, std::string, int, int>, std::vector<Morphism>>
        cache;
    static std::mutex cache_mutex;
    auto key = std::make_tuple(to_string(src.word), src.shift, to_string(tgt.word), tgt.shift, d);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto hit = cache.find(key);
        if (hit != cache.end()) return hit->second;
    }

    BlockVars vars{src, tgt, d, {}, {}};
    vars.build(0);
    int n = int(vars.slots.size());

    // right-multiplication equivariance: M(x * a) = M(x) * a for a in
    // {alpha_s, alpha_t} and every source basis element x.
    std::vector<Row> rows;
    for (Gen g : {Gen::S, Gen::T}) {
        Poly a = Poly::alpha(g);
        // precompute the expansions basis_c * a in the source and target
        std::vector<BSElement> src_mul(src.rank()), tgt_mul(tgt.rank());
        for (size_t c = 0; c < src.rank(); ++c)
            src_mul[c] = right_mul(BSElement{src, {{uint32_t(c), Poly(1)}}}, a);
        for (size_t r = 0; r < tgt.rank(); ++r)
            tgt_mul[r] = right_mul(BSElement{tgt, {{uint32_t(r), Poly(1)}}}, a);
        for (size_t c = 0; c < src.rank(); ++c) {
            // coefficient of target basis r and monomial m in
            // M(x_c * a) - M(x_c) * a = 0
            std::map<std::pair<size_t, Mono>, Row, decltype([](const auto& x, const auto& y) {
                         if (x.first != y.first) return x.first < y.first;
                         return MonoLess{}(x.second, y.second);
                     })>
                eqs;
            // M applied to the expansion of x_c * a
            for (const auto& [mask, coeff] : src_mul[c].coeffs)
                for (size_t r = 0; r < tgt.rank(); ++r) {
                    int ed = d + basis_degree(mask, src) - basis_degree(uint32_t(r), tgt);
                    for (const Mono& m : monomials_of_degree(ed)) {
                        int var = vars.index.at({r, mask, m.i, m.j});
                        for (const auto& [cm, cc] : coeff.terms())
                            eqs[{r, Mono{m.i + cm.i, m.j + cm.j}}][var] += cc;
                    }
                }
            // minus (M x_c) * a: entry (r', c) times the expansion of
            // basis_{r'} * a in the target
            for (size_t rp = 0; rp < tgt.rank(); ++rp) {
                int ed = d + basis_degree(uint32_t(c), src) - basis_degree(uint32_t(rp), tgt);
                for (const Mono& m : monomials_of_degree(ed)) {
                    int var = vars.index.at({rp, c, m.i, m.j});
                    for (const auto& [mask2, coeff2] : tgt_mul[rp].coeffs)
                        for (const auto& [cm, cc] : coeff2.terms())
                            eqs[{size_t(mask2), Mono{m.i + cm.i, m.j + cm.j}}][var] -= cc;
                }
            }
            for (auto& [k2, row] : eqs) {
                std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
                if (!row.empty()) rows.push_back(std::move(row));
            }
        }
    }

    std::vector<Morphism> out;
    for (const auto& vec : homdetail::nullspace(std::move(rows), n)) {
        Morphism m = Morphism::zero(src, tgt, d);
        for (int v = 0; v < n; ++v) {
            if (vec[v] == 0) continue;
            const auto& slot = vars.slots[v];
            m.at(slot.row, slot.col) += Poly::monomial(slot.mono.i, slot.mono.j, vec[v]);
        }
        out.push_back(std::move(m));
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache[key] = out;
    return out;
}

// The graded Hom space between two equivariant objects in a fixed degree.
struct HomSpace {
    EqObj source;
    EqObj target;
    int degree = 0;
    std::vector<SumMor> basis;

    int dim() const { return int(basis.size()); }
};

// Basis of Hom^d((A, f_A), (B, f_B)): blockwise bimodule bases assembled,
// then projected onto the tau-equivariant part by T -> (T + sigma(T)) / 2,
// sigma(T) = f_B o tau(T) o tau(f_A), followed by exact row reduction.
inline HomSpace hom_basis(const EqObj& a, const EqObj& b, int d) {
    // assemble the full bimodule hom space blockwise
    std::vector<SumMor> big;
    for (size_t i = 0; i < b.underlying.size(); ++i)
        for (size_t j = 0; j < a.underlying.size(); ++j)
            for (const Morphism& m :
                 bimodule_hom_basis(a.underlying.blocks[j], b.underlying.blocks[i], d)) {
                SumMor s = SumMor::zero(a.underlying, b.underlying, d);
                s.at(i, j) = m;
                big.push_back(std::move(s));
            }

    // sigma is an involution whose fixed space is the equivariant part
    SumMor tau_fa = tau(a.f_tau);
    auto sigma = [&](const SumMor& t) { return compose(b.f_tau, compose(tau(t), tau_fa)); };

    // flatten projected vectors and row-reduce for a deterministic basis
    struct Flat {
        std::map<std::tuple<size_t, size_t, size_t, size_t, int, int>, Rational> v;
    };
    auto flatten = [&](const SumMor& t) {
        Flat f;
        for (size_t i = 0; i < t.tgt.size(); ++i)
            for (size_t j = 0; j < t.src.size(); ++j) {
                const Morphism& m = t.at(i, j);
                for (size_t r = 0; r < m.tgt.rank(); ++r)
                    for (size_t c = 0; c < m.src.rank(); ++c)
                        for (const auto& [mono, q] : m.at(r, c).terms())
                            f.v[{i, j, r, c, mono.i, mono.j}] = q;
            }
        return f;
    };

    HomSpace out{a, b, d, {}};
    std::vector<Flat> reduced;
    std::vector<std::tuple<size_t, size_t, size_t, size_t, int, int>> pivots;
    Rational half(1, 2);
    for (const SumMor& t : big) {
        SumMor proj = half * (t + sigma(t));
        Flat f = flatten(proj);
        for (size_t k = 0; k < reduced.size(); ++k) {
            auto it = f.v.find(pivots[k]);
            if (it == f.v.end()) continue;
            Rational c = it->second;
            proj = proj - (c * out.basis[k]);
            for (const auto& [key, val] : reduced[k].v) {
                auto jt = f.v.emplace(key, Rational(0)).first;
                jt->second -= c * val;
                if (jt->second == 0) f.v.erase(jt);
            }
        }
        if (f.v.empty()) continue;
        Rational lead = f.v.begin()->second;
        proj = (Rational(1) / lead) * proj;
        Flat fn;
        for (auto& [key, val] : f.v) fn.v[key] = val / lead;
        pivots.push_back(fn.v.begin()->first);
        reduced.push_back(std::move(fn));
        out.basis.push_back(std::move(proj));
    }
    return out;
}

// Lowest degree that can carry a nonzero map between the two objects.
inline int min_hom_degree(const EqObj& a, const EqObj& b) {
    int best = 0;
    bool first = true;
    for (const auto& s : a.underlying.blocks)
        for (const auto& t : b.underlying.blocks) {
            // entry degree deg + deg(src basis) - deg(tgt basis) >= 0 must
            // admit solutions; the least possible map degree pairs the top
            // source basis element with the bottom target one.
            int d = basis_degree(0, t) - basis_degree(uint32_t(s.rank() - 1), s);
            if (first || d < best) best = d;
            first = false;
        }
    return best;
}

// Truncated graded dimension sum_d dim Hom^d(A, B) v^d for d <= bound.
inline LaurentInt graded_dim(const EqObj& a, const EqObj& b, int bound) {
    LaurentInt out;
    for (int d = min_hom_degree(a, b); d <= bound; ++d) {
        int dim = hom_basis(a, b, d).dim();
        if (dim != 0) out += LaurentInt::v_pow(d, dim);
    }
    return out;
}

// Finds the numerator polynomial p with graded_dim = p / ((1-v^2)(1-v^4))
// through the bound; empty when no nonnegative polynomial numerator fits
// (which would signal non-freeness over the invariant ring in this range).
inline std::optional<LaurentInt> free_rank_over_rtau(const EqObj& a, const EqObj& b, int bound) {
    LaurentInt series = graded_dim(a, b, bound);
    LaurentInt denom = (LaurentInt(1) - LaurentInt::v_pow(2)) * (LaurentInt(1) - LaurentInt::v_pow(4));
    // the series is exact through the bound, so the numerator coefficients
    // are exact there too; freeness is certified only through the bound
    LaurentInt numer = (series * denom).truncate(bound);
    if (!numer.nonnegative()) return std::nullopt;
    int hilb_to = bound - std::min(0, numer.min_degree());
    LaurentInt check = (numer * rtau_hilbert_series(hilb_to)).truncate(bound);
    if (!(check == series)) return std::nullopt;
    return numer;
}

// Checks that the given equivariant maps A -> One generate Hom(A, One) freely
// over the invariant ring through the degree bound: in every degree the
// products (monomial basis of R^tau) x (generators) span a space of the
// same dimension as the solver's Hom space, and that dimension matches the
// generator count against the invariant Hilbert series.
inline bool verify_spanning(const EqObj& a, const std::vector<SumMor>& generators, int bound) {
    EqObj one = indecomposable(IndecName::One);
    // group generators by degree
    for (int d = min_hom_degree(a, one); d <= bound; ++d) {
        HomSpace hs = hom_basis(a, one, d);
        // span of { f * g : g generator, f invariant monomial of degree d - deg g }
        std::vector<SumMor> span;
        long long expected = 0;
        for (const SumMor& g : generators) {
            int need = d - g.deg;
            if (need < 0 || need % 2 != 0) continue;
            // invariant monomials (as+at)^i (as*at)^j of degree need
            for (int i = 0; 2 * i <= need; ++i) {
                int rem = need - 2 * i;
                if (rem % 4 != 0) continue;
                int j = rem / 4;
                Poly f = (Poly::alpha_s() + Poly::alpha_t()).pow(i) *
                         (Poly::alpha_s() * Poly::alpha_t()).pow(j);
                span.push_back(scale_poly(f, g));
                ++expected;
            }
        }
        // rank of the span by row reduction
        std::vector<std::map<std::tuple<size_t, size_t, size_t, size_t, int, int>, Rational>> rows;
        for (const SumMor& s : span) {
            std::map<std::tuple<size_t, size_t, size_t, size_t, int, int>, Rational> f;
            for (size_t i = 0; i < s.tgt.size(); ++i)
                for (size_t j = 0; j < s.src.size(); ++j) {
                    const Morphism& m = s.at(i, j);
                    for (size_t r = 0; r < m.tgt.rank(); ++r)
                        for (size_t c = 0; c < m.src.rank(); ++c)
                            for (const auto& [mono, q] : m.at(r, c).terms())
                                f[{i, j, r, c, mono.i, mono.j}] = q;
                }
            for (auto& prev : rows) {
                if (f.empty()) break;
                auto it = f.find(prev.begin()->first);
                if (it == f.end()) continue;
                Rational c = it->second / prev.begin()->second;
                for (const auto& [key, val] : prev) {
                    auto jt = f.emplace(key, Rational(0)).first;
                    jt->second -= c * val;
                    if (jt->second == 0) f.erase(jt);
                }
            }
            if (!f.empty()) rows.push_back(std::move(f));
        }
        // free generation: the products are independent and exhaust Hom^d
        if (static_cast<long long>(rows.size()) != expected) return false;
        if (int(rows.size()) != hs.dim()) return false;
    }
    return true;
}

}  // namespace fold
