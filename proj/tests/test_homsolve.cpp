#include <catch_amalgamated.hpp>

#include "fold/combinators.hpp"
#include "fold/eval.hpp"
#include "fold/homsolve.hpp"

using namespace fold;

namespace {
EqObj obj(IndecName n) { return indecomposable(n); }
}  // namespace

TEST_CASE("hom bases to the unit object") {
    EqObj one = obj(IndecName::One);

    // Hom(X, 1)^2 is one dimensional, spanned by (as - at)
    HomSpace h = hom_basis(obj(IndecName::X), one, 2);
    REQUIRE(h.dim() == 1);
    Poly entry = h.basis[0].at(0, 0).at(0, 0);
    Poly delta = Poly::alpha_s() - Poly::alpha_t();
    CHECK((entry == delta || entry == Rational(-1) * delta ||
           entry == Rational(1, 2) * delta || entry == Rational(-1, 2) * delta));

    // Hom(Y, 1)^1 is spanned by the row of one color dots
    HomSpace hy = hom_basis(obj(IndecName::Y), one, 1);
    REQUIRE(hy.dim() == 1);
    CHECK(equal(hy.basis[0], f_eval(egen(GenName::dotu_g)).map));

    // parity: no odd-degree maps X -> 1
    CHECK(hom_basis(obj(IndecName::X), one, 1).dim() == 0);
}

TEST_CASE("hom basis members are equivariant bimodule maps") {
    EqObj y = obj(IndecName::Y);
    EqObj z = obj(IndecName::Z);
    for (int d = 0; d <= 4; ++d) {
        for (const SumMor& m : hom_basis(y, z, d).basis) {
            CHECK(check_bimodule_map(m));
            CHECK(is_equivariant(y, z, m));
        }
    }
}

TEST_CASE("graded dimensions to the unit") {
    EqObj one = obj(IndecName::One);
    LaurentInt hilb8 = rtau_hilbert_series(8);
    CHECK(graded_dim(one, one, 8) == hilb8);
    CHECK(graded_dim(obj(IndecName::Z), one, 8) == (LaurentInt::v_pow(2) * hilb8).truncate(8));
    CHECK(graded_dim(obj(IndecName::XZ), one, 8) == (LaurentInt::v_pow(4) * hilb8).truncate(8));

    LaurentInt expect;
    expect += LaurentInt(1) + LaurentInt::v_pow(2) + LaurentInt::v_pow(4, 2) +
              LaurentInt::v_pow(6, 2) + LaurentInt::v_pow(8, 3);
    CHECK(graded_dim(one, one, 8) == expect);
}

TEST_CASE("free numerators over the invariant ring") {
    EqObj one = obj(IndecName::One);
    auto check_numer = [&](IndecName n, const LaurentInt& want) {
        auto numer = free_rank_over_rtau(obj(n), one, 12);
        REQUIRE(numer.has_value());
        CHECK(*numer == want);
    };
    check_numer(IndecName::One, LaurentInt(1));
    check_numer(IndecName::X, LaurentInt::v_pow(2));
    check_numer(IndecName::Y, LaurentInt::v_pow(1) + LaurentInt::v_pow(3));
    check_numer(IndecName::Z, LaurentInt::v_pow(2));
    check_numer(IndecName::XZ, LaurentInt::v_pow(4));
}

TEST_CASE("endomorphism rings") {
    EqObj one = obj(IndecName::One);
    EqObj y = obj(IndecName::Y);
    EqObj x = obj(IndecName::X);

    // End(Y) = R + R^2 [2] as a free module over the full polynomial ring,
    // i.e. numerator (1 + v^2)(1 + 2 v^2) over the invariants
    LaurentInt numer = (LaurentInt(1) + LaurentInt::v_pow(2)) *
                       (LaurentInt(1) + LaurentInt::v_pow(2, 2));
    CHECK(graded_dim(y, y, 12) == (numer * rtau_hilbert_series(12)).truncate(12));

    CHECK(graded_dim(x, x, 12) == graded_dim(one, one, 12));

    // graded locality witness: the degree-0 endomorphisms are 1-dimensional
    for (IndecName n : {IndecName::One, IndecName::X, IndecName::Y, IndecName::Z, IndecName::XZ})
        CHECK(hom_basis(obj(n), obj(n), 0).dim() == 1);
}

TEST_CASE("diagram reduction spanning sets") {
    EqObj one = obj(IndecName::One);
    auto gens = [](std::initializer_list<ExprPtr> es) {
        std::vector<SumMor> out;
        for (const ExprPtr& e : es) out.push_back(f_eval(e).map);
        return out;
    };
    CHECK(verify_spanning(one, gens({eid("1")}), 12));
    CHECK(verify_spanning(obj(IndecName::X), gens({egen(GenName::dotu_o)}), 12));
    CHECK(verify_spanning(obj(IndecName::Y), gens({egen(GenName::dotu_g), gdot_up()}), 12));
    CHECK(verify_spanning(obj(IndecName::Z), gens({egen(GenName::dotu_b)}), 12));
    CHECK(verify_spanning(obj(IndecName::XZ),
                          gens({Expr::tensor(egen(GenName::dotu_o), egen(GenName::dotu_b))}), 12));

    // dropping the degree-3 generator must break the span for Y
    CHECK_FALSE(verify_spanning(obj(IndecName::Y), gens({egen(GenName::dotu_g)}), 12));
}

TEST_CASE("tensor adjunction consistency") {
    EqObj one = obj(IndecName::One);
    EqObj y = obj(IndecName::Y);
    for (IndecName an : {IndecName::X, IndecName::Z}) {
        for (IndecName bn : {IndecName::One, IndecName::Y}) {
            EqObj a = obj(an), b = obj(bn);
            CHECK(graded_dim(tensor_eq(y, a), b, 6) == graded_dim(a, tensor_eq(y, b), 6));
        }
    }
}
