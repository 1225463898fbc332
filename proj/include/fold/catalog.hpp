#pragma once

#include "fold/combinators.hpp"
#include "fold/eval.hpp"

#include <string>
#include <vector>

namespace fold {

// One verified identity of the folded category: both sides are well-shaped
// expressions with equal boundaries, and verification means exact equality
// of the evaluated matrices.
struct Relation {
    std::string id;
    ExprPtr lhs;
    ExprPtr rhs;
    std::string origin;
    bool defining = false;
};

inline bool verify_relation(const Relation& r) {
    EqMor a = f_eval(r.lhs);
    EqMor b = f_eval(r.rhs);
    return equal(a, b);
}

namespace detail {

inline ExprPtr zero_like(const ExprPtr& e) { return Expr::scale(Rational(0), e); }

inline ExprPtr pbox(const char* text) { return Expr::poly_box(parse_poly(text)); }

// tau-invariant coefficient in front of an expression.
inline ExprPtr coeff(const Poly& f, ExprPtr e) {
    if (f.is_zero()) return zero_like(Expr::scale_poly(Poly(1), std::move(e)));
    return Expr::scale_poly(f, std::move(e));
}

struct CatalogBuilder {
    std::vector<Relation> out;

    void add(const std::string& id, ExprPtr lhs, ExprPtr rhs, const std::string& origin,
             bool defining) {
        out.push_back(Relation{id, std::move(lhs), std::move(rhs), origin, defining});
    }
    void def(const std::string& id, ExprPtr lhs, ExprPtr rhs, const std::string& origin) {
        add(id, std::move(lhs), std::move(rhs), origin, true);
    }
    void der(const std::string& id, ExprPtr lhs, ExprPtr rhs, const std::string& origin) {
        add(id, std::move(lhs), std::move(rhs), origin, false);
    }

    // --- defining relations ---------------------------------------------

    void barbells() {
        def("barbell.green", barb_g(), pbox("as+at"), "barbell relations");
        def("barbell.brown", barb_b(), pbox("as*at"), "barbell relations");
        def("barbell.orange", barb_o(), pbox("(as-at)^2"), "barbell relations");
    }

    void vertex_definitions() {
        using G = GenName;
        // the green-brown-brown vertex as a triangle of bgg vertices
        ExprPtr triangle = egen(G::merge_ggg) << between(eidy(), egen(G::cap_g), eidy())
                                              << etens(egen(G::tri_d_bgg), egen(G::tri_d_bgg));
        def("vertexdef.tri_gbb", egen(G::tri_u_gbb), triangle, "vertex definitions");

        // the green-orange crossing splits into two landings
        def("vertexdef.x_go", egen(G::x_go), s_g2og() << m_go2g(), "vertex definitions");
        der("vertexdef.x_og", egen(G::x_og), s_g2go() << m_og2g(), "vertex definitions, mirror");

        // two parallel orange strands
        def("vertexdef.x_oo", egen(G::x_oo), eid("XX"), "vertex definitions");

        // the brown-orange crossing as -1/2 of a double crossbar
        ExprPtr h1 = etens(eidy(), m_go2g()) << etens(egen(G::tri_d_bgg), eidx());
        ExprPtr h2 = etens(eidx(), egen(G::tri_u_bgg)) << etens(s_g2og(), eidy());
        def("vertexdef.x_bo", egen(G::x_bo), Rational(-1, 2) * (h2 << h1), "vertex definitions");
        ExprPtr h1m = etens(m_og2g(), eidy()) << etens(eidx(), egen(G::tri_d_bgg));
        ExprPtr h2m = etens(egen(G::tri_u_bgg), eidx()) << etens(eidy(), s_g2go());
        der("vertexdef.x_ob", egen(G::x_ob), Rational(-1, 2) * (h2m << h1m),
            "vertex definitions, mirror");

        // bivalent vertices as dotted trivalent vertices (right and left legs)
        def("bivdef.right.bg", egen(G::biv_bg), egen(G::tri_u_bgg) << etens(eidy(), egen(G::dotd_g)),
            "bivalent definition, right");
        def("bivdef.right.og", egen(G::biv_og), egen(G::land_u_ogg) << etens(eidy(), egen(G::dotd_g)),
            "bivalent definition, right");
        def("bivdef.left.bg", egen(G::biv_bg), egen(G::tri_u_bgg) << etens(egen(G::dotd_g), eidy()),
            "bivalent definition, left");
        def("bivdef.left.og", egen(G::biv_og), egen(G::land_u_ogg) << etens(egen(G::dotd_g), eidy()),
            "bivalent definition, left");
        der("bivdef.gb", egen(G::biv_gb), m_bg2g() << etens(eidz(), egen(G::dotd_g)),
            "bivalent definition, rotated");
        der("bivdef.go", egen(G::biv_go), m_og2g() << etens(eidx(), egen(G::dotd_g)),
            "bivalent definition, rotated");
    }

    void circles_and_needles() {
        using G = GenName;
        def("circle.orange", circle_o(), eid("1"), "needle relations");
        def("needle.ggg", egen(G::cap_g) << egen(G::split_ggg),
            zero_like(egen(G::cap_g) << egen(G::split_ggg)), "needle relations");
        def("needle.g_loop_b_stem", egen(G::cap_g) << egen(G::tri_d_bgg),
            zero_like(egen(G::cap_g) << egen(G::tri_d_bgg)), "needle relations");
        def("needle.bbb", egen(G::cap_b) << egen(G::split_bbb),
            zero_like(egen(G::cap_b) << egen(G::split_bbb)), "needle relations");
    }

    void unit_relations() {
        using G = GenName;
        def("unit.green", egen(G::merge_ggg) << etens(egen(G::dotd_g), eidy()), eidy(),
            "one color unit relation");
        def("unit.brown", egen(G::merge_bbb) << etens(egen(G::dotd_b), eidz()), eidz(),
            "one color unit relation");
        der("unit.green.right", egen(G::merge_ggg) << etens(eidy(), egen(G::dotd_g)), eidy(),
            "one color unit relation, mirror");
        der("unit.brown.right", egen(G::merge_bbb) << etens(eidz(), egen(G::dotd_b)), eidz(),
            "one color unit relation, mirror");

        // 2 (green strand with a brown dot leg) = broken strand - orange sandwich
        def("unit.brown_green", Rational(2) * bd_left(),
            (egen(G::dotd_g) << egen(G::dotu_g)) - (egen(G::biv_go) << egen(G::biv_og)),
            "brown green unit relation");

        // orange over green over brown tower vanishes
        def("unit.ogz", egen(G::biv_og) << egen(G::biv_gb),
            zero_like(egen(G::biv_og) << egen(G::biv_gb)), "orange green green = 0 unit relation");

        // green dot on the green-orange bivalent gives the orange dot
        def("unit.green_orange", egen(G::dotu_g) << egen(G::biv_go), egen(G::dotu_o),
            "green orange unit relation");
    }

    void polynomial_forcing_defining() {
        using G = GenName;
        ExprPtr lhs = etens(barb_g(), eidy()) + od_right();
        ExprPtr rhs = (egen(G::dotd_g) << egen(G::dotu_g)) + (egen(G::biv_go) << egen(G::biv_og));
        def("forcing.green1", lhs, rhs, "polynomial forcing relation");
    }

    void landing_slides() {
        using G = GenName;
        def("slide.xy_idem", s_g2og() << m_og2g(), eid("XY"), "XY idempotent decomposition");

        // the landing slides across a green merge vertex
        def("slide.ggg_orange", s_g2go() << egen(G::merge_ggg),
            etens(egen(G::merge_ggg), eidx()) << etens(eidy(), s_g2go()), "GGG orange");

        // landing on either green leg of the brown vertex, with a sign
        def("slide.ggb_orange1", egen(G::tri_u_bgg) << etens(m_go2g(), eidy()),
            Rational(-1) * (egen(G::tri_u_bgg) << etens(eidy(), m_og2g())), "GGB orange 1");

        // same, routed around the brown stem
        def("slide.ggb_orange2",
            egen(G::x_ob) << etens(eidx(), egen(G::tri_u_bgg)) << etens(s_g2og(), eidy()),
            Rational(-1) * (etens(egen(G::tri_u_bgg), eidx()) << etens(eidy(), s_g2go())),
            "GGB triv orange 2");
    }

    void bigons() {
        using G = GenName;
        def("bigon.brown", egen(G::tri_u_bgg) << egen(G::tri_d_bgg), Rational(2) * eidz(),
            "bigon brown");
        ExprPtr triangle = egen(G::land_u_ogg) << between(eidy(), egen(G::cap_g), eidy())
                                               << etens(egen(G::tri_d_bgg), egen(G::tri_d_bgg));
        def("bigon.brown_orange", triangle, zero_like(triangle), "bigon brown orange");
    }

    // I with a decorated brown middle: the orange thread leaves the bottom
    // bgg vertex at its left leg and lands back on the top vertex's left leg.
    ExprPtr decorated_I_gbg() {
        using G = GenName;
        ExprPtr bottom = etens(eidx(), egen(G::tri_u_bgg)) << etens(s_g2og(), eidy());
        ExprPtr top = etens(m_og2g(), eidy()) << etens(eidx(), egen(G::tri_d_bgg));
        return top << bottom;
    }

    void h_equals_i_defining() {
        using G = GenName;
        ExprPtr h_ggg = etens(eidy(), egen(G::merge_ggg)) << etens(egen(G::split_ggg), eidy());
        def("HI.one_color.green", h_ggg, egen(G::split_ggg) << egen(G::merge_ggg), "H=I one color");
        ExprPtr h_bbb = etens(eidz(), egen(G::merge_bbb)) << etens(egen(G::split_bbb), eidz());
        def("HI.one_color.brown", h_bbb, egen(G::split_bbb) << egen(G::merge_bbb), "H=I one color");

        // bottom (Y,Z), bar Z, top (Z,Y)
        ExprPtr h1 = etens(eidz(), egen(G::tri_u_gbb)) << etens(egen(G::tri_d_gbb), eidz());
        ExprPtr i1 = s_b2bg() << m_gb2b();
        def("HI.bicolor.zy", h1, i1, "H=I bicolor associativity");

        // bottom (Y,Z), bar Z, top (Z,Z)
        ExprPtr h2 = etens(eidz(), egen(G::merge_bbb)) << etens(egen(G::tri_d_gbb), eidz());
        ExprPtr i2 = egen(G::split_bbb) << m_gb2b();
        def("HI.bicolor.zz", h2, i2, "H=I bicolor associativity");

        // bottom (Z,Z), bar Z, top (Y,Y)
        ExprPtr h3 = etens(eidy(), egen(G::tri_u_gbb)) << etens(s_b2gb(), eidz());
        ExprPtr i3a = egen(G::split_ggg) << egen(G::tri_u_gbb);
        ExprPtr i3b = egen(G::tri_d_bgg) << egen(G::merge_bbb);
        def("HI.top_brown", h3, i3a + i3b, "H=I top brown");

        // bottom (Y,Y), bar Z, top (Y,Z)
        ExprPtr h4 = etens(eidy(), m_bg2b()) << etens(s_g2gb(), eidy());
        ExprPtr i4a = s_g2gb() << egen(G::merge_ggg);
        ExprPtr i4b = s_b2gb() << egen(G::tri_u_bgg);
        ExprPtr i4dec = (etens(m_og2g(), eidz()) << etens(eidx(), s_b2gb())) <<
                        (etens(eidx(), egen(G::tri_u_bgg)) << etens(s_g2og(), eidy()));
        def("HI.L_brown_leg", Rational(2) * h4, (Rational(2) * i4a + i4b) - i4dec,
            "H=I L brown leg");

        // bottom (Y,Y), bar Z, top (Y,Y)
        ExprPtr h5 = etens(eidy(), m_bg2g()) << etens(s_g2gb(), eidy());
        ExprPtr caps = egen(G::cup_g) << egen(G::cap_g);
        ExprPtr caps_orange = egen(G::land_d_ogg) << egen(G::land_u_ogg);
        ExprPtr i5 = egen(G::tri_d_bgg) << egen(G::tri_u_bgg);
        def("HI.middle_brown", Rational(2) * h5, ((caps - caps_orange) + i5) - decorated_I_gbg(),
            "H=I middle brown");
    }

    // --- derived relations ------------------------------------------------

    void polynomial_forcing_derived() {
        using G = GenName;
        // two brown barbells across a green strand
        ExprPtr lhs2 = Rational(2) * (etens(barb_b(), eidy()) + etens(eidy(), barb_b()));
        ExprPtr rhs2 = (etens(barb_g(), egen(G::dotd_g) << egen(G::dotu_g)) +
                        etens(barb_g(), egen(G::biv_go) << egen(G::biv_og))) -
                       ((gdot_down() << egen(G::dotu_g)) + (egen(G::dotd_g) << gdot_up()));
        der("forcing.green2", lhs2, rhs2, "polynomial forcing, green 2");

        ExprPtr lhs3 = etens(barb_g(), eidz()) + etens(eidz(), barb_g());
        der("forcing.brown1", lhs3, Rational(2) * sandwich_b(), "polynomial forcing, brown 1");

        ExprPtr lhs4 = bdot_through() + etens(egen(G::dotu_o), eidz());
        ExprPtr rhs4 = Rational(-2) *
                       (egen(G::biv_bg) << m_og2g() << etens(eidx(), egen(G::biv_gb)));
        der("forcing.brown2", lhs4, rhs4, "polynomial forcing, brown 2");

        ExprPtr sandwich_gbarb = egen(G::biv_bg) << etens(eidy(), barb_g()) << egen(G::biv_gb);
        ExprPtr sandwich_od = egen(G::biv_bg) << od_right() << egen(G::biv_gb);
        ExprPtr lhs5 = etens(barb_b(), eidz()) + sandwich_gbarb + sandwich_od;
        ExprPtr rhs5 = Rational(4) * (egen(G::dotd_b) << egen(G::dotu_b)) + etens(eidz(), barb_b());
        der("forcing.brown3", lhs5, rhs5, "polynomial forcing, brown 3");
    }

    void orange_sliding() {
        using G = GenName;
        der("slide.x2_idem", egen(G::cup_o) << egen(G::cap_o), eid("XX"),
            "X2 idempotent decomposition");
        der("slide.orange_dot", egen(G::x_oo) << etens(egen(G::dotd_o), eidx()),
            etens(eidx(), egen(G::dotd_o)), "orange jump dot orange relation");
        der("slide.orange_dots_merger", egen(G::dotd_o) << egen(G::dotu_o),
            Expr::scale_poly(parse_poly("(as-at)^2"), eidx()), "orange dots merger");
        der("slide.orange_barb", etens(barb_o(), eidx()), etens(eidx(), barb_o()),
            "orange dots merger");
        der("slide.orange_green_uncross", egen(G::x_og) << egen(G::x_go), eid("YX"),
            "orange green uncross");
        der("slide.orange_brown_uncross", egen(G::x_ob) << egen(G::x_bo), eid("ZX"),
            "orange brown uncross");
        der("slide.green_dot_orange", egen(G::x_go) << etens(egen(G::dotd_g), eidx()),
            etens(eidx(), egen(G::dotd_g)), "green dot orange relation");
        der("slide.brown_dot_orange", egen(G::x_bo) << etens(egen(G::dotd_b), eidx()),
            etens(eidx(), egen(G::dotd_b)), "brown dot orange relation");

        // the orange strand routed left or right of a merge-type vertex
        struct Jump {
            const char* id;
            ExprPtr vertex;
            Strand a, b, c;
        };
        std::vector<Jump> jumps = {
            {"slide.jump_ggg", egen(G::merge_ggg), Strand::Y, Strand::Y, Strand::Y},
            {"slide.jump_ggb", egen(G::tri_u_bgg), Strand::Y, Strand::Y, Strand::Z},
            {"slide.jump_gbb", egen(G::tri_u_gbb), Strand::Z, Strand::Z, Strand::Y},
            {"slide.jump_bbb", egen(G::merge_bbb), Strand::Z, Strand::Z, Strand::Z},
            {"slide.jump_land", egen(G::land_u_ogg), Strand::Y, Strand::Y, Strand::X},
            {"slide.jump_land_left", m_og2g(), Strand::X, Strand::Y, Strand::Y},
            {"slide.jump_land_right", m_go2g(), Strand::Y, Strand::X, Strand::Y},
        };
        // crossing X (x) c -> c (x) X
        auto x_from_o = [](Strand s) {
            switch (s) {
                case Strand::X: return egen(G::x_oo);
                case Strand::Y: return egen(G::x_og);
                case Strand::Z: return egen(G::x_ob);
            }
            throw std::logic_error("unreachable");
        };
        for (auto& j : jumps) {
            ExprPtr ida = Expr::identity({j.a});
            ExprPtr idb = Expr::identity({j.b});
            ExprPtr left = x_from_o(j.c) << etens(Expr::identity({Strand::X}), j.vertex);
            ExprPtr right = etens(j.vertex, Expr::identity({Strand::X}))
                            << etens(ida, x_from_o(j.b)) << etens(x_from_o(j.a), idb);
            der(j.id, left, right, "orange slides over trivalent vertices");
        }
    }

    void derived_needles_units() {
        using G = GenName;
        ExprPtr n1 = egen(G::cap_b) << egen(G::tri_d_gbb);
        der("needle2.b_loop_g_stem", n1, zero_like(n1), "derived needle relations");
        ExprPtr n2 = egen(G::cap_g) << etens(m_og2g(), eidy()) << etens(eidx(), egen(G::split_ggg));
        der("needle2.g_loop_go_stems", n2, zero_like(n2), "derived needle relations");
        ExprPtr n3 = egen(G::cap_g) << etens(m_og2g(), eidy()) << etens(eidx(), egen(G::tri_d_bgg));
        der("needle2.g_loop_bo_stems", n3, zero_like(n3), "derived needle relations");

        der("unit2.gbb1", m_gb2b() << etens(egen(G::dotd_g), eidz()), Rational(2) * eidz(),
            "derived unit relations (GBB 1)");
        ExprPtr tri = egen(G::tri_u_bgg) << between(eidy(), egen(G::cap_g), eidy())
                                         << etens(egen(G::land_d_ogg), egen(G::tri_d_bgg));
        der("unit2.gbb3_orange", tri, zero_like(tri), "derived unit relations (GBB 3, orange)");
        der("unit2.gbb2", m_bg2b() << etens(egen(G::dotd_b), eidy()), egen(G::biv_bg),
            "derived unit relations (GBB 2)");
        der("unit2.ggb", egen(G::dotu_g) << egen(G::biv_gb), Rational(2) * egen(G::dotu_b),
            "derived unit relations (GGB)");
    }

    void derived_h_equals_i() {
        using G = GenName;
        // bottom (Y,Z), bar Y, top (Y,Z)
        ExprPtr h_side = etens(eidy(), m_gb2b()) << etens(egen(G::split_ggg), eidz());
        ExprPtr i_side = s_b2gb() << m_gb2b();
        ExprPtr i_side_dec = (etens(m_og2g(), eidz()) << etens(eidx(), s_b2gb())) <<
                             (etens(eidx(), m_gb2b()) << etens(s_g2og(), eidz()));
        der("HI.side_brown", Rational(2) * h_side, i_side + i_side_dec, "derived H=I side brown");

        // bottom (Y,Z), bar Z, top (Y,Z): T-shaped brown
        ExprPtr h_t = etens(eidy(), egen(G::merge_bbb)) << etens(s_g2gb(), eidz());
        der("HI.T_brown", Rational(2) * h_t, i_side - i_side_dec, "derived H=I T brown");

        // bottom (Z,Z), bar Y, top (Z,Z): green crossbar on four brown legs
        ExprPtr h_arms = etens(eidz(), m_gb2b()) << etens(s_b2bg(), eidz());
        ExprPtr i_bbb = egen(G::split_bbb) << egen(G::merge_bbb);
        ExprPtr i_barb_bot = i_bbb << between(eidz(), barb_g(), eidz());
        ExprPtr i_barb_top = between(eidz(), barb_g(), eidz()) << i_bbb;
        der("HI.brown_arms_legs", Rational(2) * h_arms, i_barb_bot + i_barb_top,
            "derived H=I brown arms and legs");

        // bottom (Y,Y), bar Y, top (Y,Z)
        ExprPtr h_leg = etens(eidy(), egen(G::tri_u_bgg)) << etens(egen(G::split_ggg), eidy());
        ExprPtr i_leg = s_b2gb() << egen(G::tri_u_bgg);
        ExprPtr i_leg_dec = (etens(m_og2g(), eidz()) << etens(eidx(), s_b2gb())) <<
                            (etens(eidx(), egen(G::tri_u_bgg)) << etens(s_g2og(), eidy()));
        der("HI.brown_leg", Rational(2) * h_leg, i_leg + i_leg_dec, "derived H=I brown leg");

        // The remaining crossbar relations admit several orange routings
        // that differ by signs; the right-hand sides below are pinned by
        // projecting the crossbar onto the middle summands.

        // bottom (Y,Y), bar Y, top (Z,Z)
        ExprPtr h_feet = etens(eidz(), egen(G::tri_u_bgg)) << etens(s_g2bg(), eidy());
        ExprPtr i_feet = egen(G::tri_d_gbb) << egen(G::merge_ggg);
        ExprPtr i_feet_mid_od = egen(G::tri_d_gbb) << od_right() << egen(G::merge_ggg);
        ExprPtr i_feet_leg_od = i_feet << etens(od_right(), eidy());
        ExprPtr feet_through_y = etens(eidz(), egen(G::biv_bg)) << s_g2bg() << egen(G::merge_ggg);
        der("HI.brown_bottom_feet", Rational(4) * h_feet,
            (Rational(2) * i_feet_leg_od - Rational(2) * i_feet_mid_od) +
                Rational(4) * feet_through_y,
            "derived H=I brown bottom feet");

        // bottom (Y,Z), bar Y, top (Z,Z): the last summand threads an orange
        // strand from the green leg across the brown middle, where it ends
        // in a dot between the two top strands.
        ExprPtr h_edges = etens(eidz(), m_gb2b()) << etens(s_g2bg(), eidz());
        ExprPtr i_edges = egen(G::split_bbb) << m_gb2b();
        ExprPtr u_edges = etens(m_gb2b(), eid("X")) << etens(eidy(), egen(G::x_ob))
                          << etens(s_g2go(), eidz());
        ExprPtr a_edges = between(eidz(), egen(G::dotu_o), eidz()) << etens(eidz(), egen(G::x_bo))
                          << etens(egen(G::split_bbb), eid("X"));
        der("HI.3_brown_edges", Rational(4) * h_edges,
            ((between(eidz(), barb_g(), eidz()) << i_edges) +
             (i_edges << etens(od_right(), eidz())) - (i_edges << etens(od_left(), eidz()))) +
                (Rational(2) * (i_edges << etens(bd_left(), eidz())) + (a_edges << u_edges)),
            "derived H=I 3 brown edges");

        // bottom (Y,Z), bar Y, top (Z,Y)
        ExprPtr h_opp = etens(eidz(), m_gb2g()) << etens(s_g2bg(), eidz());
        ExprPtr i_opp = s_b2bg() << m_gb2b();
        ExprPtr i_opp_th = (etens(eidz(), m_go2g()) << etens(s_b2bg(), eidx())) << egen(G::x_ob)
                           << (etens(eidx(), m_gb2b()) << etens(s_g2og(), eidz()));
        ExprPtr through_y = s_g2bg() << m_gb2g();
        ExprPtr od_diff_bot = etens(od_right(), eidz());
        auto leg = [&](const ExprPtr& base) {
            return (base << etens(od_right(), eidz())) - (base << etens(od_left(), eidz()));
        };
        auto top = [&](const ExprPtr& base) {
            return (etens(eidz(), od_right()) << base) - (etens(eidz(), od_left()) << base);
        };
        der("HI.opposite_brown_edges", Rational(8) * h_opp,
            ((Rational(2) * leg(i_opp) + Rational(2) * leg(i_opp_th)) -
             (Rational(2) * top(i_opp) + Rational(2) * top(i_opp_th))) +
                Rational(8) * through_y,
            "derived H=I opposite brown edges");
    }

    void general_families(const std::vector<Poly>& fs) {
        using G = GenName;
        Poly delta = parse_poly("as-at");
        for (const Poly& f : fs) {
            std::string tag = "[" + to_string(f) + "]";
            Poly sf = act_simple(Gen::S, f);
            Poly dsf = demazure(Gen::S, f);

            // general polynomial forcing, green strand
            {
                auto [sym_sf, alt_sf] = sym_alt(sf);
                auto [sym_dsf, alt_dsf] = sym_alt(dsf);
                ExprPtr lhs = etens(eidy(), Expr::poly_box(f));
                ExprPtr rhs = coeff(sym_sf, eidy()) +
                              coeff(divide_by_as_minus_at(alt_sf), od_left()) +
                              Rational(1, 2) *
                                  (coeff(sym_dsf, egen(G::dotd_g) << egen(G::dotu_g)) +
                                   coeff(sym_dsf, egen(G::biv_go) << egen(G::biv_og))) +
                              Rational(1, 2) *
                                  (coeff(divide_by_as_minus_at(alt_dsf),
                                         gdot_down() << egen(G::dotu_g)) +
                                   coeff(divide_by_as_minus_at(alt_dsf),
                                         egen(G::dotd_g) << gdot_up()));
                der("general_forcing.green" + tag, lhs, rhs, "general polynomial forcing");
            }

            // general polynomial forcing, green strand with a landed orange dot
            {
                Poly fd = f * delta;
                auto [sym_sfd, alt_sfd] = sym_alt(act_simple(Gen::S, fd));
                auto [sym_dsfd, alt_dsfd] = sym_alt(demazure(Gen::S, fd));
                ExprPtr lhs = etens(od_right(), Expr::poly_box(f));
                ExprPtr rhs = coeff(sym_sfd, eidy()) +
                              coeff(divide_by_as_minus_at(alt_sfd), od_left()) +
                              Rational(1, 2) *
                                  (coeff(sym_dsfd, egen(G::dotd_g) << egen(G::dotu_g)) +
                                   coeff(sym_dsfd, egen(G::biv_go) << egen(G::biv_og))) +
                              Rational(1, 2) *
                                  (coeff(divide_by_as_minus_at(alt_dsfd),
                                         gdot_down() << egen(G::dotu_g)) +
                                   coeff(divide_by_as_minus_at(alt_dsfd),
                                         egen(G::dotd_g) << gdot_up()));
                der("general_forcing.green_od" + tag, lhs, rhs, "general polynomial forcing");
            }

            // general polynomial forcing, brown strand; the anti-invariant
            // coefficient carries the sign forced by evaluation
            {
                Poly stf = act_simple(Gen::S, act_simple(Gen::T, f));
                Poly tdsf = act_simple(Gen::T, demazure(Gen::S, f));
                auto [sym_tdsf, alt_tdsf] = sym_alt(tdsf);
                Poly dstf = demazure(Gen::S, demazure(Gen::T, f));
                ExprPtr lhs = etens(eidz(), Expr::poly_box(f));
                ExprPtr rhs = coeff(stf, eidz()) + coeff(sym_tdsf, sandwich_b()) +
                              (Rational(-1) *
                               coeff(divide_by_as_minus_at(alt_tdsf),
                                     egen(G::biv_bg) << od_left() << egen(G::biv_gb))) +
                              coeff(dstf, egen(G::dotd_b) << egen(G::dotu_b));
                der("general_forcing.brown" + tag, lhs, rhs, "general polynomial forcing");
            }

            // general polynomial forcing, brown strand pierced by a dotted orange
            {
                Poly fd = f * delta;
                Poly stf = act_simple(Gen::S, act_simple(Gen::T, f));
                Poly tdsfd = act_simple(Gen::T, demazure(Gen::S, fd));
                auto [sym_tdsfd, alt_tdsfd] = sym_alt(tdsfd);
                Poly dstfd = demazure(Gen::S, demazure(Gen::T, fd));
                ExprPtr lhs = etens(bdot_through(), Expr::poly_box(f));
                ExprPtr rhs =
                    (Rational(-1) * coeff(stf, etens(egen(G::dotu_o), eidz()))) +
                    (Rational(-1) *
                     coeff(sym_tdsfd,
                           egen(G::biv_bg) << m_og2g() << etens(eidx(), egen(G::biv_gb)))) +
                    coeff(divide_by_as_minus_at(alt_tdsfd), etens(egen(G::dotu_o), sandwich_b())) +
                    coeff(divide_by_as_minus_at(dstfd),
                          etens(egen(G::dotu_o), egen(G::dotd_b) << egen(G::dotu_b)));
                der("general_forcing.brown_o" + tag, lhs, rhs, "general polynomial forcing");
            }

            // general needle relations
            {
                auto [sym_dsf, alt_dsf] = sym_alt(dsf);
                ExprPtr needle = egen(G::cap_g) << between(eidy(), Expr::poly_box(f), eidy())
                                                << egen(G::split_ggg);
                ExprPtr rhs = coeff(sym_dsf, egen(G::dotu_g)) +
                              coeff(divide_by_as_minus_at(alt_dsf), gdot_up());
                der("general_needle.green" + tag, needle, rhs, "general needle relations");

                Poly fd = f * delta;
                auto [sym_dsfd, alt_dsfd] = sym_alt(demazure(Gen::S, fd));
                ExprPtr needle_od = egen(G::cap_g) << etens(od_right(), eidy())
                                                   << between(eidy(), Expr::poly_box(f), eidy())
                                                   << egen(G::split_ggg);
                ExprPtr rhs_od = coeff(sym_dsfd, egen(G::dotu_g)) +
                                 coeff(divide_by_as_minus_at(alt_dsfd), gdot_up());
                der("general_needle.green_od" + tag, needle_od, rhs_od, "general needle relations");

                ExprPtr needle_land = egen(G::cap_g)
                                      << between(eidy(), Expr::poly_box(f), eidy())
                                      << etens(m_og2g(), eidy()) << etens(eidx(), egen(G::split_ggg));
                ExprPtr rhs_land = coeff(sym_dsf, egen(G::dotu_g) << m_og2g()) +
                                   coeff(divide_by_as_minus_at(alt_dsf),
                                         etens(egen(G::dotu_o), egen(G::dotu_g)));
                der("general_needle.green_land" + tag, needle_land, rhs_land,
                    "general needle relations");

                ExprPtr needle_bg = egen(G::cap_g) << between(eidy(), Expr::poly_box(f), eidy())
                                                   << egen(G::tri_d_bgg);
                der("general_needle.green_loop_brown_stem" + tag, needle_bg, zero_like(needle_bg),
                    "general needle relations");

                Poly dstf = demazure(Gen::S, demazure(Gen::T, f));
                ExprPtr needle_gbb = egen(G::cap_b) << between(eidz(), Expr::poly_box(f), eidz())
                                                    << egen(G::tri_d_gbb);
                ExprPtr rhs_gbb =
                    Rational(1, 2) * (coeff(dstf * (Poly::alpha_s() + Poly::alpha_t()),
                                            egen(G::dotu_g)) -
                                      coeff(dstf, gdot_up()));
                der("general_needle.brown_loop_green_stem" + tag, needle_gbb, rhs_gbb,
                    "general needle relations");

                ExprPtr needle_bbb = egen(G::cap_b) << between(eidz(), Expr::poly_box(f), eidz())
                                                    << egen(G::split_bbb);
                der("general_needle.brown" + tag, needle_bbb, coeff(dstf, egen(G::dotu_b)),
                    "general needle relations");
            }

            // general circle relations; the invariant and anti-invariant
            // parts are taken of alpha_s * d_s(f) as a whole
            {
                Poly asdsf = Poly::alpha_s() * dsf;
                auto [sym_asdsf, alt_asdsf] = sym_alt(asdsf);
                ExprPtr circ_g = egen(G::cap_g) << between(eidy(), Expr::poly_box(f), eidy())
                                                << egen(G::cup_g);
                der("general_circle.green" + tag, circ_g,
                    coeff(Rational(2) * sym_asdsf, eid("1")), "general circle relations");

                ExprPtr circ_g_land = egen(G::cap_g)
                                      << between(eidy(), Expr::poly_box(f), eidy())
                                      << etens(m_og2g(), eidy()) << etens(eidx(), egen(G::cup_g));
                der("general_circle.green_land" + tag, circ_g_land,
                    coeff(Rational(2) * divide_by_as_minus_at(alt_asdsf), egen(G::dotu_o)),
                    "general circle relations");

                Poly fd = f * delta;
                Poly sym_d = sym_alt(Poly::alpha_s() * demazure(Gen::S, fd)).first;
                ExprPtr circ_g_od = egen(G::cap_g) << etens(od_right(), eidy())
                                                   << between(eidy(), Expr::poly_box(f), eidy())
                                                   << egen(G::cup_g);
                der("general_circle.green_od" + tag, circ_g_od,
                    coeff(Rational(2) * sym_d, eid("1")), "general circle relations");

                Poly dstf = demazure(Gen::S, demazure(Gen::T, f));
                ExprPtr circ_b = egen(G::cap_b) << between(eidz(), Expr::poly_box(f), eidz())
                                                << egen(G::cup_b);
                der("general_circle.brown" + tag, circ_b,
                    coeff(dstf * Poly::alpha_s() * Poly::alpha_t(), eid("1")),
                    "general circle relations");
            }
        }
    }
};

}  // namespace detail

// The default instantiation set for the parametrized relation families.
inline std::vector<Poly> default_forcing_polys() {
    return {Poly(1), parse_poly("as+at"), parse_poly("as*at"), parse_poly("(as+at)^2"),
            parse_poly("(as+at)*as*at")};
}

inline std::vector<Relation> relation_catalog(
    const std::vector<Poly>& forcing_polys = default_forcing_polys()) {
    detail::CatalogBuilder b;
    b.barbells();
    b.vertex_definitions();
    b.circles_and_needles();
    b.unit_relations();
    b.polynomial_forcing_defining();
    b.landing_slides();
    b.bigons();
    b.h_equals_i_defining();
    b.polynomial_forcing_derived();
    b.orange_sliding();
    b.derived_needles_units();
    b.derived_h_equals_i();
    b.general_families(forcing_polys);
    return b.out;
}

}  // namespace fold
