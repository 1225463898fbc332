#pragma once

#include "fold/combinators.hpp"

#include <algorithm>

namespace fold {

// Nested cups and caps for arbitrary words, and the 180-degree rotation of
// an expression they induce. Rotating twice must give back the original
// morphism; the catalog's isotopy property tests check exactly that.

inline ExprPtr cap_of(Strand s) {
    switch (s) {
        case Strand::X: return egen(GenName::cap_o);
        case Strand::Y: return egen(GenName::cap_g);
        case Strand::Z: return egen(GenName::cap_b);
    }
    throw std::logic_error("unreachable");
}
inline ExprPtr cup_of(Strand s) {
    switch (s) {
        case Strand::X: return egen(GenName::cup_o);
        case Strand::Y: return egen(GenName::cup_g);
        case Strand::Z: return egen(GenName::cup_b);
    }
    throw std::logic_error("unreachable");
}
inline ExprPtr x_from_o(Strand s) {
    switch (s) {
        case Strand::X: return egen(GenName::x_oo);
        case Strand::Y: return egen(GenName::x_og);
        case Strand::Z: return egen(GenName::x_ob);
    }
    throw std::logic_error("unreachable");
}
inline ExprPtr x_to_o(Strand s) {
    switch (s) {
        case Strand::X: return egen(GenName::x_oo);
        case Strand::Y: return egen(GenName::x_go);
        case Strand::Z: return egen(GenName::x_bo);
    }
    throw std::logic_error("unreachable");
}

inline DWord reversed(DWord w) {
    std::reverse(w.begin(), w.end());
    return w;
}

// cup_word(w) : 1 -> rev(w) w, nesting one letter at a time.
inline ExprPtr cup_word(const DWord& w) {
    if (w.empty()) return eid("1");
    DWord head(w.begin(), w.end() - 1);
    Strand c = w.back();
    return etens(Expr::identity({c}), etens(cup_word(head), Expr::identity({c}))) << cup_of(c);
}

// cap_word(w) : w rev(w) -> 1.
inline ExprPtr cap_word(const DWord& w) {
    if (w.empty()) return eid("1");
    DWord head(w.begin(), w.end() - 1);
    Strand c = w.back();
    return cap_word(head) <<
           etens(Expr::identity(head), etens(cap_of(c), Expr::identity(reversed(head))));
}

// Rotation by 180 degrees: rev(tgt) -> rev(src).
inline ExprPtr rotate180(const ExprPtr& e) {
    DWord ra = reversed(e->src), rb = reversed(e->tgt);
    ExprPtr top = etens(Expr::identity(ra), cap_word(e->tgt));
    ExprPtr mid = etens(Expr::identity(ra), etens(e, Expr::identity(rb)));
    ExprPtr bot = etens(cup_word(e->src), Expr::identity(rb));
    return top << mid << bot;
}

// X (x) w -> w (x) X by crossing one strand at a time.
inline ExprPtr cross_orange_through(const DWord& w) {
    DWord start{Strand::X};
    start.insert(start.end(), w.begin(), w.end());
    ExprPtr acc = Expr::identity(start);
    for (size_t i = 0; i < w.size(); ++i) {
        DWord left(w.begin(), w.begin() + i);
        DWord right(w.begin() + i + 1, w.end());
        ExprPtr step = etens(Expr::identity(left),
                             etens(x_from_o(w[i]), Expr::identity(right)));
        acc = Expr::compose(step, acc);
    }
    return acc;
}

// w (x) X -> X (x) w, the reverse sweep.
inline ExprPtr cross_orange_back(const DWord& w) {
    DWord start = w;
    start.push_back(Strand::X);
    ExprPtr acc = Expr::identity(start);
    for (size_t ii = w.size(); ii-- > 0;) {
        DWord left(w.begin(), w.begin() + ii);
        DWord right(w.begin() + ii + 1, w.end());
        ExprPtr step = etens(Expr::identity(left),
                             etens(x_to_o(w[ii]), Expr::identity(right)));
        acc = Expr::compose(step, acc);
    }
    return acc;
}

// An orange circle around an expression; by the sliding theorem this equals
// the expression itself whenever its boundary has no orange strands.
inline ExprPtr encircle(const ExprPtr& e) {
    ExprPtr x1 = Expr::identity(DWord{Strand::X});
    ExprPtr birth = etens(Expr::identity(e->src), egen(GenName::cup_o));
    ExprPtr bottom = etens(cross_orange_back(e->src), x1) << birth;
    ExprPtr across = etens(x1, etens(e, x1));
    ExprPtr up = etens(Expr::identity(e->tgt), egen(GenName::cap_o))
                 << etens(cross_orange_through(e->tgt), x1);
    return up << across << bottom;
}

}  // namespace fold
