#include <catch_amalgamated.hpp>

#include "fold/grring.hpp"

#include <random>

using namespace fold;

namespace {
RingElem B(IndecName n) { return RingElem::basis(n); }
LaurentInt v(int k, long long c = 1) { return LaurentInt::v_pow(k, c); }

RingElem random_elem(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3), pow(-2, 2);
    RingElem r;
    for (size_t i = 0; i < 5; ++i) r.c[i] = v(pow(rng), coeff(rng));
    return r;
}
}  // namespace

TEST_CASE("multiplication table") {
    CHECK(multiply(B(IndecName::X), B(IndecName::X)) == RingElem::one());
    CHECK(multiply(B(IndecName::X), B(IndecName::Y)) == B(IndecName::Y));

    RingElem yy = multiply(B(IndecName::Y), B(IndecName::Y));
    CHECK(yy == (v(1) + v(-1)) * B(IndecName::Y) + B(IndecName::Z) + B(IndecName::XZ));

    RingElem yz = multiply(B(IndecName::Y), B(IndecName::Z));
    CHECK(yz == (v(1) + v(-1)) * (B(IndecName::Z) + B(IndecName::XZ)));

    RingElem zz = multiply(B(IndecName::Z), B(IndecName::Z));
    CHECK(zz == (v(2) + v(0) + v(-2)) * B(IndecName::Z) + B(IndecName::XZ));

    RingElem xzz = multiply(B(IndecName::XZ), B(IndecName::Z));
    CHECK(xzz == (v(2) + v(0) + v(-2)) * B(IndecName::XZ) + B(IndecName::Z));
}

TEST_CASE("associativity and commutativity") {
    std::mt19937 rng(57);
    for (int k = 0; k < 200; ++k) {
        RingElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("specializations") {
    // Z^2 at X = -1 reproduces the unequal-parameter relation
    // b^2 = v^2 b + v^-2 b
    SpecializedElem s = specialize(multiply(B(IndecName::Z), B(IndecName::Z)), -1);
    SpecializedElem want;
    want.c[2] = v(2) + v(-2);
    CHECK(s == want);

    // Y^2 at X = +1
    SpecializedElem s2 = specialize(multiply(B(IndecName::Y), B(IndecName::Y)), 1);
    SpecializedElem want2;
    want2.c[1] = v(1) + v(-1);
    want2.c[2] = LaurentInt(2);
    CHECK(s2 == want2);

    // X at -1 is -1
    SpecializedElem s3 = specialize(B(IndecName::X), -1);
    SpecializedElem want3;
    want3.c[0] = LaurentInt(-1);
    CHECK(s3 == want3);
}

TEST_CASE("word decomposition") {
    using N = IndecName;
    SummandMultiset yy = decompose_word({{N::Y, 0}, {N::Y, 0}});
    CHECK(yy == SummandMultiset{{{N::Y, -1}, 1}, {{N::Y, 1}, 1}, {{N::Z, 0}, 1}, {{N::XZ, 0}, 1}});

    SummandMultiset zz = decompose_word({{N::Z, 0}, {N::Z, 0}});
    CHECK(zz == SummandMultiset{{{N::Z, -2}, 1}, {{N::Z, 0}, 1}, {{N::Z, 2}, 1}, {{N::XZ, 0}, 1}});

    SummandMultiset xy = decompose_word({{N::X, 0}, {N::Y, 0}});
    CHECK(xy == SummandMultiset{{{N::Y, 0}, 1}});

    // shifts add: Y * Z[2]
    SummandMultiset yz2 = decompose_word(parse_tensor_word("Y*Z[2]"));
    CHECK(yz2 == SummandMultiset{{{N::Z, 1}, 1}, {{N::Z, 3}, 1}, {{N::XZ, 1}, 1}, {{N::XZ, 3}, 1}});
}

TEST_CASE("decomposition matches ring multiplication for all short words") {
    using N = IndecName;
    std::vector<IndecName> letters = {N::X, N::Y, N::Z};
    std::vector<TensorWord> words;
    for (IndecName a : letters) {
        words.push_back({{a, 0}});
        for (IndecName b : letters) {
            words.push_back({{a, 0}, {b, 0}});
            for (IndecName c : letters) words.push_back({{a, 0}, {b, 0}, {c, 0}});
        }
    }
    CHECK(words.size() == 39);
    for (const TensorWord& w : words) {
        CHECK(ring_class(decompose_word(w)) == ring_class(w));
    }
}

TEST_CASE("basis normal form round trip") {
    std::mt19937 rng(91);
    for (int k = 0; k < 50; ++k) {
        RingElem a = random_elem(rng);
        RingElem sum;
        for (size_t i = 0; i < 5; ++i) sum = sum + RingElem::basis(IndecName(i), a.c[i]);
        CHECK(sum == a);
    }
}

TEST_CASE("trace oracle") {
    using N = IndecName;
    CHECK(predicted_grdim({{N::One, 0}}, {{N::Z, 0}}) == v(2));
    CHECK(predicted_grdim({{N::One, 0}}, {{N::One, 0}}) == LaurentInt(1));
    LaurentInt got = predicted_grdim({{N::Y, 0}}, {{N::Y, 0}});
    CHECK(got == LaurentInt(1) + v(2, 3) + v(4, 2));
}

TEST_CASE("ring expression parser") {
    CHECK(parse_ring_expr("Y*Y") == multiply(B(IndecName::Y), B(IndecName::Y)));
    CHECK(parse_ring_expr("Z[2]") == v(2) * B(IndecName::Z));
    CHECK(parse_ring_expr("v^2 * X + 1") == v(2) * B(IndecName::X) + RingElem::one());
    CHECK(parse_ring_expr("(Y + Z)^2") ==
          multiply(B(IndecName::Y) + B(IndecName::Z), B(IndecName::Y) + B(IndecName::Z)));
    CHECK(parse_ring_expr("XZ") == B(IndecName::XZ));
    CHECK_THROWS(parse_ring_expr("W"));
}
