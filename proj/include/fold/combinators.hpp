#pragma once

#include "fold/diagram.hpp"

namespace fold {

// Frequently used composites of the generating diagrams: closed barbells and
// circles, rotated trivalent vertices (a generator with one leg bent by a
// cup or cap), and strands decorated by a landed orange dot. Everything here
// is an Expr, so the same composites print back as grammar text.

inline ExprPtr eidx() { return eid("X"); }
inline ExprPtr eidy() { return eid("Y"); }
inline ExprPtr eidz() { return eid("Z"); }

inline ExprPtr barb_g() { return egen(GenName::dotu_g) << egen(GenName::dotd_g); }
inline ExprPtr barb_b() { return egen(GenName::dotu_b) << egen(GenName::dotd_b); }
inline ExprPtr barb_o() { return egen(GenName::dotu_o) << egen(GenName::dotd_o); }

inline ExprPtr circle_g() { return egen(GenName::cap_g) << egen(GenName::cup_g); }
inline ExprPtr circle_b() { return egen(GenName::cap_b) << egen(GenName::cup_b); }
inline ExprPtr circle_o() { return egen(GenName::cap_o) << egen(GenName::cup_o); }

// Rotated orange landings. The landing generator is YY -> X (and its
// mirror); bending one green leg gives the four strand-absorbing and
// strand-emitting forms.
//
// m_og2g : XY -> Y      (orange absorbed into the green strand from the left)
inline ExprPtr m_og2g() {
    return etens(eidy(), egen(GenName::cap_g)) << etens(egen(GenName::land_d_ogg), eidy());
}
// m_go2g : YX -> Y
inline ExprPtr m_go2g() {
    return etens(egen(GenName::cap_g), eidy()) << etens(eidy(), egen(GenName::land_d_ogg));
}
// s_g2og : Y -> XY      (orange emitted up-left)
inline ExprPtr s_g2og() {
    return etens(egen(GenName::land_u_ogg), eidy()) << etens(eidy(), egen(GenName::cup_g));
}
// s_g2go : Y -> YX
inline ExprPtr s_g2go() {
    return etens(eidy(), egen(GenName::land_u_ogg)) << etens(egen(GenName::cup_g), eidy());
}

// Rotated brown-green-green vertices (one brown, two green strands).
//
// m_bg2g : ZY -> Y
inline ExprPtr m_bg2g() {
    return etens(eidy(), egen(GenName::cap_g)) << etens(egen(GenName::tri_d_bgg), eidy());
}
// m_gb2g : YZ -> Y
inline ExprPtr m_gb2g() {
    return etens(egen(GenName::cap_g), eidy()) << etens(eidy(), egen(GenName::tri_d_bgg));
}
// s_g2bg : Y -> ZY
inline ExprPtr s_g2bg() {
    return etens(egen(GenName::tri_u_bgg), eidy()) << etens(eidy(), egen(GenName::cup_g));
}
// s_g2gb : Y -> YZ
inline ExprPtr s_g2gb() {
    return etens(eidy(), egen(GenName::tri_u_bgg)) << etens(egen(GenName::cup_g), eidy());
}

// Rotated green-brown-brown vertices (one green, two brown strands).
//
// m_gb2b : YZ -> Z
inline ExprPtr m_gb2b() {
    return etens(eidz(), egen(GenName::cap_b)) << etens(egen(GenName::tri_d_gbb), eidz());
}
// m_bg2b : ZY -> Z
inline ExprPtr m_bg2b() {
    return etens(egen(GenName::cap_b), eidz()) << etens(eidz(), egen(GenName::tri_d_gbb));
}
// s_b2yz : Z -> YZ
inline ExprPtr s_b2gb() {
    return etens(egen(GenName::tri_u_gbb), eidz()) << etens(eidz(), egen(GenName::cup_b));
}
// s_b2zy : Z -> ZY
inline ExprPtr s_b2bg() {
    return etens(eidz(), egen(GenName::tri_u_gbb)) << etens(egen(GenName::cup_b), eidz());
}

// Orange dot landed on a green strand, from the left or the right (degree 2).
inline ExprPtr od_left() { return m_og2g() << etens(egen(GenName::dotd_o), eidy()); }
inline ExprPtr od_right() { return m_go2g() << etens(eidy(), egen(GenName::dotd_o)); }

// Brown dot hanging off a green strand (degree 2).
inline ExprPtr bd_left() { return m_bg2g() << etens(egen(GenName::dotd_b), eidy()); }

// Green strand terminating in an orange dot (the degree-3 generator of the
// reduction theorem) and its mirror.
inline ExprPtr gdot_up() { return egen(GenName::dotu_o) << egen(GenName::biv_og); }
inline ExprPtr gdot_down() { return egen(GenName::biv_go) << egen(GenName::dotd_o); }

// Brown strand pierced by an orange strand that ends in a dot on the far
// side (degree 2): XZ -> Z, and its mirror Z -> XZ.
inline ExprPtr bdot_through() {
    return etens(eidz(), egen(GenName::dotu_o)) << egen(GenName::x_ob);
}
inline ExprPtr bdot_through_up() {
    return egen(GenName::x_bo) << etens(eidz(), egen(GenName::dotd_o));
}

// Green sandwich on a brown strand (degree 2).
inline ExprPtr sandwich_b() { return egen(GenName::biv_bg) << egen(GenName::biv_gb); }

// Insert a floating closed diagram between two strands of an identity slab.
inline ExprPtr between(ExprPtr left_id, ExprPtr closed, ExprPtr right_id) {
    return etens(etens(std::move(left_id), std::move(closed)), std::move(right_id));
}

}  // namespace fold
