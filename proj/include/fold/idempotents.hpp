#pragma once

#include "fold/catalog.hpp"
#include "fold/homsolve.hpp"

namespace fold {

// Orthogonal idempotent decompositions of YY, ZZ and YZ, with the shifted
// indecomposable each summand factors through. The projection out of the
// tensor square is a closed-form expression; the section back is either
// closed-form or solved exactly in the relevant Hom space.

enum class TensorPair { YY, ZZ, YZ };

inline const char* to_string(TensorPair p) {
    switch (p) {
        case TensorPair::YY: return "YY";
        case TensorPair::ZZ: return "ZZ";
        case TensorPair::YZ: return "YZ";
    }
    return "?";
}

struct IdempotentPiece {
    ExprPtr idempotent;
    IndecName through;
    int shift;        // the summand is through[shift]
    ExprPtr pi;       // tensor square -> summand (degree = shift)
    ExprPtr iota;     // summand -> tensor square (degree = -shift)
};

namespace idemdetail {

// I with a brown middle and an orange thread between the two vertices (the
// fourth summand of the YY decomposition).
inline ExprPtr decorated_I_gbg_bottom() {
    using G = GenName;
    return etens(eidx(), egen(G::tri_u_bgg)) << etens(s_g2og(), eidy());
}
inline ExprPtr decorated_I_gbg_top() {
    using G = GenName;
    return etens(m_og2g(), eidy()) << etens(eidx(), egen(G::tri_d_bgg));
}

}  // namespace idemdetail

inline std::vector<IdempotentPiece> idempotent_suite(TensorPair pair) {
    using G = GenName;
    Rational half(1, 2), quarter(1, 4), eighth(1, 8);
    std::vector<IdempotentPiece> out;
    switch (pair) {
        case TensorPair::YY: {
            ExprPtr M = egen(G::merge_ggg), S = egen(G::split_ggg);
            ExprPtr barbtop = between(eidy(), barb_g(), eidy());
            ExprPtr pi1 = M;
            ExprPtr iota1 = half * (barbtop << S);
            out.push_back({Expr::compose(iota1, pi1), IndecName::Y, -1, pi1, iota1});

            ExprPtr pi2 = M << etens(od_right(), eidy());
            ExprPtr iota2 = half * S;
            out.push_back({Expr::compose(iota2, pi2), IndecName::Y, 1, pi2, iota2});

            ExprPtr pi3 = egen(G::tri_u_bgg);
            ExprPtr iota3 = half * egen(G::tri_d_bgg);
            out.push_back({Expr::compose(iota3, pi3), IndecName::Z, 0, pi3, iota3});

            ExprPtr pi4 = idemdetail::decorated_I_gbg_bottom();
            ExprPtr iota4 = half * idemdetail::decorated_I_gbg_top();
            out.push_back({Expr::compose(iota4, pi4), IndecName::XZ, 0, pi4, iota4});
            break;
        }
        case TensorPair::ZZ: {
            ExprPtr M = egen(G::merge_bbb), S = egen(G::split_bbb);
            ExprPtr bmid = between(eidz(), barb_b(), eidz());
            ExprPtr gmid = between(eidz(), barb_g(), eidz());
            ExprPtr pi1 = M;
            ExprPtr iota1 = quarter * (bmid << S);
            out.push_back({Expr::compose(iota1, pi1), IndecName::Z, -2, pi1, iota1});

            ExprPtr pi2 = M << bmid;
            ExprPtr iota2 = quarter * S;
            out.push_back({Expr::compose(iota2, pi2), IndecName::Z, 2, pi2, iota2});

            ExprPtr pi3 = M << gmid;
            ExprPtr iota3 = eighth * (gmid << S);
            out.push_back({Expr::compose(iota3, pi3), IndecName::Z, 0, pi3, iota3});

            // orange barbell threaded beside the brown middle; the summand is
            // the brown pair with the inverted equivariant structure
            ExprPtr pi4 = etens(egen(G::merge_bbb), eid("X")) << etens(eidz(), egen(G::x_ob))
                          << etens(eidz(), egen(G::dotd_o), eidz());
            ExprPtr iota4 = Rational(-1, 8) *
                            (between(eidz(), egen(G::dotu_o), eidz()) << etens(eidz(), egen(G::x_bo))
                             << etens(egen(G::split_bbb), eid("X")));
            out.push_back({Expr::compose(iota4, pi4), IndecName::XZ, 0, pi4, iota4});
            break;
        }
        case TensorPair::YZ: {
            // plain and dotted projections land on Z[-1] and Z[1]
            ExprPtr pi1 = m_gb2b();
            ExprPtr iota1 = quarter * (between(eidy(), barb_g(), eidz()) << s_b2gb());
            out.push_back({Expr::compose(iota1, pi1), IndecName::Z, -1, pi1, iota1});

            ExprPtr pi2 = m_gb2b() << etens(od_right(), eidz());
            ExprPtr iota2 = quarter * s_b2gb();
            out.push_back({Expr::compose(iota2, pi2), IndecName::Z, 1, pi2, iota2});

            // orange-augmented projections keep an X factor and reach the
            // XZ[-1] and XZ[1] summands
            ExprPtr u = etens(eidx(), m_gb2b()) << etens(s_g2og(), eidz());
            ExprPtr d = etens(m_og2g(), eidz()) << etens(eidx(), s_b2gb());
            ExprPtr pi3 = u;
            ExprPtr iota3 = quarter * (between(eidy(), barb_g(), eidz()) << d);
            out.push_back({Expr::compose(iota3, pi3), IndecName::XZ, -1, pi3, iota3});

            ExprPtr pi4 = u << etens(od_right(), eidz());
            ExprPtr iota4 = quarter * d;
            out.push_back({Expr::compose(iota4, pi4), IndecName::XZ, 1, pi4, iota4});
            break;
        }
    }
    return out;
}

// The tensor square an idempotent suite decomposes.
inline DWord suite_word(TensorPair pair) {
    switch (pair) {
        case TensorPair::YY: return dword_from_string("YY");
        case TensorPair::ZZ: return dword_from_string("ZZ");
        case TensorPair::YZ: return dword_from_string("YZ");
    }
    return {};
}

struct SuiteReport {
    bool complete = false;      // sum of idempotents is the identity
    bool orthogonal = false;    // e_i e_j = delta_ij e_i
    bool factors = false;       // pi_i iota_i = id on each summand
    bool ok() const { return complete && orthogonal && factors; }
};

inline SuiteReport check_idempotent_suite(TensorPair pair) {
    SuiteReport rep;
    auto suite = idempotent_suite(pair);
    EqObj square = eval_object(suite_word(pair));
    std::vector<EqMor> es;
    for (const auto& p : suite) es.push_back(f_eval(p.idempotent));

    SumMor sum = es[0].map;
    for (size_t i = 1; i < es.size(); ++i) sum = sum + es[i].map;
    rep.complete = equal(sum, SumMor::identity(square.underlying));

    rep.orthogonal = true;
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = 0; j < es.size(); ++j) {
            SumMor prod = compose(es[i].map, es[j].map);
            if (i == j ? !equal(prod, es[i].map) : !prod.is_zero()) rep.orthogonal = false;
        }

    rep.factors = true;
    for (const auto& p : suite) {
        EqMor pi = f_eval(p.pi), iota = f_eval(p.iota);
        EqObj through = indecomposable(p.through);
        if (pi.map.deg != p.shift || iota.map.deg != -p.shift) rep.factors = false;
        SumMor round = compose(pi.map, iota.map);
        if (!equal(round, SumMor::identity(through.underlying))) rep.factors = false;
    }
    return rep;
}

}  // namespace fold
