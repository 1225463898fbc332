#pragma once

#include "fold/summor.hpp"

#include <stdexcept>
#include <string>

namespace fold {

// Z/2-equivariant object: an underlying sum of Bott-Samelson objects with a
// degree-0 structure map f_tau : tau(U) -> U satisfying f_tau o tau(f_tau) = id.
struct EqObj {
    SumObj underlying;
    SumMor f_tau;

    friend bool operator==(const EqObj& a, const EqObj& b) {
        return a.underlying == b.underlying && equal(a.f_tau, b.f_tau);
    }
};

inline bool is_valid_eqobj(const EqObj& e) {
    if (e.f_tau.src != tau(e.underlying) || e.f_tau.tgt != e.underlying) return false;
    if (e.f_tau.deg != 0) return false;
    if (!equal(compose(e.f_tau, tau(e.f_tau)), SumMor::identity(e.underlying))) return false;
    return check_bimodule_map(e.f_tau);
}

// Equivariant morphism: map o f_src = f_tgt o tau(map).
struct EqMor {
    EqObj src;
    EqObj tgt;
    SumMor map;
};

inline bool is_equivariant(const EqObj& src, const EqObj& tgt, const SumMor& m) {
    return equal(compose(m, src.f_tau), compose(tgt.f_tau, tau(m)));
}

inline bool is_valid_eqmor(const EqMor& m) {
    if (m.map.src != m.src.underlying || m.map.tgt != m.tgt.underlying) return false;
    if (!check_bimodule_map(m.map)) return false;
    return is_equivariant(m.src, m.tgt, m.map);
}

inline EqMor eq_identity(const EqObj& o) { return EqMor{o, o, SumMor::identity(o.underlying)}; }

inline EqMor compose(const EqMor& g, const EqMor& f) {
    if (!(f.tgt == g.src)) throw std::invalid_argument("equivariant compose: boundary mismatch");
    return EqMor{f.src, g.tgt, compose(g.map, f.map)};
}

inline EqObj tensor_eq(const EqObj& a, const EqObj& b) {
    return EqObj{tensor(a.underlying, b.underlying), tensor(a.f_tau, b.f_tau)};
}

inline EqMor tensor_eq_mor(const EqMor& a, const EqMor& b) {
    return EqMor{tensor_eq(a.src, b.src), tensor_eq(a.tgt, b.tgt), tensor(a.map, b.map)};
}

inline EqMor operator+(const EqMor& a, const EqMor& b) {
    if (!(a.src == b.src && a.tgt == b.tgt))
        throw std::invalid_argument("equivariant sum: boundary mismatch");
    return EqMor{a.src, a.tgt, a.map + b.map};
}
inline EqMor operator-(const EqMor& a, const EqMor& b) { return a + EqMor{b.src, b.tgt, Rational(-1) * b.map}; }
inline EqMor operator*(const Rational& c, const EqMor& m) { return EqMor{m.src, m.tgt, c * m.map}; }
inline EqMor scale_poly(const Poly& f, const EqMor& m) {
    if (!is_tau_invariant(f)) throw std::invalid_argument("scalar polynomial must be tau-invariant");
    return EqMor{m.src, m.tgt, scale_poly(f, m.map)};
}

inline bool equal(const EqMor& a, const EqMor& b) {
    return a.src == b.src && a.tgt == b.tgt && equal(a.map, b.map);
}

// --- the five indecomposables ------------------------------------------------

enum class IndecName { One, X, Y, Z, XZ };

inline std::string to_string(IndecName n) {
    switch (n) {
        case IndecName::One: return "1";
        case IndecName::X: return "X";
        case IndecName::Y: return "Y";
        case IndecName::Z: return "Z";
        case IndecName::XZ: return "XZ";
    }
    return "?";
}

inline IndecName indec_from_string(const std::string& s) {
    if (s == "1") return IndecName::One;
    if (s == "X") return IndecName::X;
    if (s == "Y") return IndecName::Y;
    if (s == "Z") return IndecName::Z;
    if (s == "XZ") return IndecName::XZ;
    throw std::invalid_argument("unknown indecomposable: " + s);
}

inline EqObj indecomposable(IndecName name, int shift = 0) {
    switch (name) {
        case IndecName::One: {
            SumObj u = sum_obj({shifted(unit_obj(), shift)});
            return EqObj{u, SumMor::identity(u)};
        }
        case IndecName::X: {
            SumObj u = sum_obj({shifted(unit_obj(), shift)});
            return EqObj{u, Rational(-1) * SumMor::identity(u)};
        }
        case IndecName::Y: {
            SumObj u = sum_obj({shifted(gen_obj(Gen::S), shift), shifted(gen_obj(Gen::T), shift)});
            SumMor f = SumMor::zero(tau(u), u, 0);
            f.at(0, 1) = Morphism::identity(u.blocks[0]);
            f.at(1, 0) = Morphism::identity(u.blocks[1]);
            return EqObj{u, f};
        }
        case IndecName::Z:
        case IndecName::XZ: {
            SumObj u = sum_obj({shifted(Obj{word_from_string("st"), 0}, shift)});
            Morphism x = crossing(Gen::T, Gen::S);
            x.src.shift += shift;
            x.tgt.shift += shift;
            SumMor f{tau(u), u, 0, {name == IndecName::Z ? x : Rational(-1) * x}};
            return EqObj{u, f};
        }
    }
    throw std::logic_error("unreachable");
}

// --- induction / restriction -------------------------------------------------

inline SumObj restrict_obj(const EqObj& e) { return e.underlying; }
inline SumMor restrict_mor(const EqMor& m) { return m.map; }

// Ind(M) = (M + tau(M), block swap).
inline EqObj induce(const SumObj& m) {
    SumObj u;
    u.blocks = m.blocks;
    SumObj tm = tau(m);
    u.blocks.insert(u.blocks.end(), tm.blocks.begin(), tm.blocks.end());
    SumMor f = SumMor::zero(tau(u), u, 0);
    size_t n = m.size();
    // tau(u) = [tau(M), M]; the swap sends the second group identically onto
    // the first and vice versa.
    for (size_t i = 0; i < n; ++i) {
        f.at(i, n + i) = Morphism::identity(m.blocks[i]);
        f.at(n + i, i) = Morphism::identity(tm.blocks[i]);
    }
    return EqObj{u, f};
}

inline SumMor induce_mor(const SumMor& t) {
    SumMor tt = tau(t);
    SumObj src = induce(t.src).underlying;
    SumObj tgt = induce(t.tgt).underlying;
    SumMor r = SumMor::zero(src, tgt, t.deg);
    size_t ns = t.src.size(), nt = t.tgt.size();
    for (size_t i = 0; i < nt; ++i)
        for (size_t j = 0; j < ns; ++j) {
            r.at(i, j) = t.at(i, j);
            Morphism b = tt.at(i, j);
            b.deg = t.deg;
            r.at(nt + i, ns + j) = b;
        }
    return r;
}

// The unit/counit style maps Phi, Psi of the induction-restriction
// adjunction, specialized to G = Z/2.
//
// Phi : Hom(M, Res N) -> Hom(Ind M, N),  phi -> (phi, f_N o tau(phi)).
inline EqMor adjunction_phi(const SumMor& phi, const EqObj& n) {
    if (phi.tgt != n.underlying) throw std::invalid_argument("Phi: target mismatch");
    EqObj ind = induce(phi.src);
    SumMor r = SumMor::zero(ind.underlying, n.underlying, phi.deg);
    SumMor second = compose(n.f_tau, tau(phi));
    size_t ns = phi.src.size();
    for (size_t i = 0; i < n.underlying.size(); ++i)
        for (size_t j = 0; j < ns; ++j) {
            r.at(i, j) = phi.at(i, j);
            Morphism b = second.at(i, j);
            b.deg = phi.deg;
            r.at(i, ns + j) = b;
        }
    return EqMor{ind, n, r};
}

// Psi : Hom(Ind M, N) -> Hom(M, Res N): restriction to the identity block.
inline SumMor adjunction_psi(const EqMor& psi, const SumObj& m) {
    SumMor r = SumMor::zero(m, psi.tgt.underlying, psi.map.deg);
    for (size_t i = 0; i < r.tgt.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) r.at(i, j) = psi.map.at(i, j);
    return r;
}

// Phi' : Hom(Res M, N) -> Hom(M, Ind N),  phi -> (phi, tau(phi) o tau(f_M)).
inline EqMor adjunction_phi_prime(const SumMor& phi, const EqObj& m) {
    if (phi.src != m.underlying) throw std::invalid_argument("Phi': source mismatch");
    EqObj ind = induce(phi.tgt);
    SumMor r = SumMor::zero(m.underlying, ind.underlying, phi.deg);
    SumMor second = compose(tau(phi), tau(m.f_tau));
    size_t nt = phi.tgt.size();
    for (size_t i = 0; i < nt; ++i)
        for (size_t j = 0; j < m.underlying.size(); ++j) {
            r.at(i, j) = phi.at(i, j);
            Morphism b = second.at(i, j);
            b.deg = phi.deg;
            r.at(nt + i, j) = b;
        }
    return EqMor{m, ind, r};
}

// Psi' : Hom(M, Ind N) -> Hom(Res M, N): projection to the identity block.
inline SumMor adjunction_psi_prime(const EqMor& psi, const SumObj& n) {
    SumMor r = SumMor::zero(psi.src.underlying, n, psi.map.deg);
    for (size_t i = 0; i < n.size(); ++i)
        for (size_t j = 0; j < r.src.size(); ++j) r.at(i, j) = psi.map.at(i, j);
    return r;
}

// Splittings p : Ind(Res E) -> E and iota : E -> Ind(Res E) with
// p o iota = 2 id and (iota o p)/2 idempotent.
struct Splitting {
    EqMor iota;
    EqMor p;
};

inline Splitting splitting_maps(const EqObj& e) {
    EqObj ind = induce(e.underlying);
    size_t n = e.underlying.size();
    SumMor p = SumMor::zero(ind.underlying, e.underlying, 0);
    SumMor iota = SumMor::zero(e.underlying, ind.underlying, 0);
    SumMor tf = tau(e.f_tau);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) {
                p.at(i, j) = Morphism::identity(e.underlying.blocks[i]);
                iota.at(i, j) = Morphism::identity(e.underlying.blocks[i]);
            }
            p.at(i, n + j) = e.f_tau.at(i, j);
            iota.at(n + i, j) = tf.at(i, j);
        }
    return Splitting{EqMor{e, ind, iota}, EqMor{ind, e, p}};
}

}  // namespace fold
