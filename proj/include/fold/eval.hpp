#pragma once

#include "fold/diagram.hpp"
#include "fold/equiv.hpp"

#include <stdexcept>

namespace fold {

// Evaluation of diagram expressions in the equivariantized category: each
// generator is sent to an explicit matrix of bimodule maps, and the AST is
// folded through composition, tensor and linear structure.

inline EqObj eval_object(Strand s) {
    switch (s) {
        case Strand::X: return indecomposable(IndecName::X);
        case Strand::Y: return indecomposable(IndecName::Y);
        case Strand::Z: return indecomposable(IndecName::Z);
    }
    throw std::logic_error("unreachable");
}

inline EqObj eval_object(const DWord& w) {
    EqObj acc = indecomposable(IndecName::One);
    for (Strand s : w) acc = tensor_eq(acc, eval_object(s));
    return acc;
}

namespace detail {

// id_s (x) x_ts (x) id_t : B_stst -> B_sstt, the strand rearrangement used
// by every brown-pair image.
inline Morphism untwist_stst() {
    return tensor(tensor(Morphism::identity(gen_obj(Gen::S)), crossing(Gen::T, Gen::S)),
                  Morphism::identity(gen_obj(Gen::T)));
}

inline Morphism retwist_sstt() {
    return tensor(tensor(Morphism::identity(gen_obj(Gen::S)), crossing(Gen::S, Gen::T)),
                  Morphism::identity(gen_obj(Gen::T)));
}

inline SumMor eval_generator_map(GenName g) {
    const Morphism ids = Morphism::identity(gen_obj(Gen::S));
    const Morphism idt = Morphism::identity(gen_obj(Gen::T));
    const Morphism id1 = Morphism::identity(unit_obj());
    const Obj bst{word_from_string("st"), 0};
    const Morphism idst = Morphism::identity(bst);

    const EqObj src = eval_object(gen_info(g).src);
    const EqObj tgt = eval_object(gen_info(g).tgt);
    SumMor m = SumMor::zero(src.underlying, tgt.underlying, gen_info(g).degree);

    switch (g) {
        case GenName::dotu_g:
            m.at(0, 0) = dot_up(Gen::S);
            m.at(0, 1) = dot_up(Gen::T);
            break;
        case GenName::dotd_g:
            m.at(0, 0) = dot_down(Gen::S);
            m.at(1, 0) = dot_down(Gen::T);
            break;
        case GenName::dotu_o:
        case GenName::dotd_o:
            m.at(0, 0) = poly_box(Poly::alpha_s() - Poly::alpha_t());
            break;
        case GenName::dotu_b:
            m.at(0, 0) = tensor(dot_up(Gen::S), dot_up(Gen::T));
            break;
        case GenName::dotd_b:
            m.at(0, 0) = tensor(dot_down(Gen::S), dot_down(Gen::T));
            break;
        case GenName::cap_g:
            m.at(0, 0) = cap(Gen::S);
            m.at(0, 3) = cap(Gen::T);
            break;
        case GenName::cup_g:
            m.at(0, 0) = cup(Gen::S);
            m.at(3, 0) = cup(Gen::T);
            break;
        case GenName::cap_o:
        case GenName::cup_o:
        case GenName::x_oo:
            m.at(0, 0) = id1;
            break;
        case GenName::cap_b:
            m.at(0, 0) = compose(tensor(cap(Gen::S), cap(Gen::T)), untwist_stst());
            break;
        case GenName::cup_b:
            m.at(0, 0) = compose(retwist_sstt(), tensor(cup(Gen::S), cup(Gen::T)));
            break;
        case GenName::merge_ggg:
            m.at(0, 0) = merge(Gen::S);
            m.at(1, 3) = merge(Gen::T);
            break;
        case GenName::split_ggg:
            m.at(0, 0) = split(Gen::S);
            m.at(3, 1) = split(Gen::T);
            break;
        case GenName::merge_bbb:
            m.at(0, 0) = compose(tensor(merge(Gen::S), merge(Gen::T)), untwist_stst());
            break;
        case GenName::split_bbb:
            m.at(0, 0) = compose(retwist_sstt(), tensor(split(Gen::S), split(Gen::T)));
            break;
        case GenName::tri_u_gbb:
            m.at(0, 0) = compose(tensor(merge(Gen::S), cap(Gen::T)), untwist_stst());
            m.at(1, 0) = compose(tensor(cap(Gen::S), merge(Gen::T)), untwist_stst());
            break;
        case GenName::tri_d_gbb:
            m.at(0, 0) = compose(retwist_sstt(), tensor(split(Gen::S), cup(Gen::T)));
            m.at(0, 1) = compose(retwist_sstt(), tensor(cup(Gen::S), split(Gen::T)));
            break;
        case GenName::tri_u_bgg:
            m.at(0, 1) = idst;
            m.at(0, 2) = crossing(Gen::T, Gen::S);
            break;
        case GenName::tri_d_bgg:
            m.at(1, 0) = idst;
            m.at(2, 0) = crossing(Gen::S, Gen::T);
            break;
        case GenName::land_u_ogg:
            m.at(0, 0) = cap(Gen::S);
            m.at(0, 3) = Rational(-1) * cap(Gen::T);
            break;
        case GenName::land_d_ogg:
            m.at(0, 0) = cup(Gen::S);
            m.at(3, 0) = Rational(-1) * cup(Gen::T);
            break;
        case GenName::x_bo:
        case GenName::x_ob:
            m.at(0, 0) = idst;
            break;
        case GenName::x_go:
        case GenName::x_og:
            m.at(0, 0) = ids;
            m.at(1, 1) = idt;
            break;
        case GenName::biv_gb:
            m.at(0, 0) = tensor(ids, dot_up(Gen::T));
            m.at(1, 0) = tensor(dot_up(Gen::S), idt);
            break;
        case GenName::biv_bg:
            m.at(0, 0) = tensor(ids, dot_down(Gen::T));
            m.at(0, 1) = tensor(dot_down(Gen::S), idt);
            break;
        case GenName::biv_og:
            m.at(0, 0) = dot_up(Gen::S);
            m.at(0, 1) = Rational(-1) * dot_up(Gen::T);
            break;
        case GenName::biv_go:
            m.at(0, 0) = dot_down(Gen::S);
            m.at(1, 0) = Rational(-1) * dot_down(Gen::T);
            break;
    }
    for (auto& b : m.blocks) b.deg = m.deg;
    return m;
}

}  // namespace detail

inline EqMor eval_generator(GenName g) {
    return EqMor{eval_object(gen_info(g).src), eval_object(gen_info(g).tgt),
                 detail::eval_generator_map(g)};
}

inline EqMor f_eval(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::Gen: return eval_generator(e->gen);
        case Expr::Kind::Id: return eq_identity(eval_object(e->id_word));
        case Expr::Kind::Compose: return compose(f_eval(e->lhs), f_eval(e->rhs));
        case Expr::Kind::Tensor: return tensor_eq_mor(f_eval(e->lhs), f_eval(e->rhs));
        case Expr::Kind::Add: return f_eval(e->lhs) + f_eval(e->rhs);
        case Expr::Kind::Scale: return e->scalar * f_eval(e->lhs);
        case Expr::Kind::ScalePoly: return scale_poly(e->poly, f_eval(e->lhs));
    }
    throw std::logic_error("unreachable");
}

inline EqMor f_eval(const std::string& text) { return f_eval(parse_expr(text)); }

}  // namespace fold
