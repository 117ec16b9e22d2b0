#include <algorithm>

#include "doctest.h"
#include "lieforge/coordalg.hpp"
#include "oracles.hpp"

using namespace lieforge;

namespace {

CoordinateAlgebra make(AlgebraKind kind) {
    const BuiltinCode code = kind == AlgebraKind::E7 ? BuiltinCode::simplex7
                           : kind == AlgebraKind::E8 ? BuiltinCode::exthamming8
                                                     : BuiltinCode::even4;
    return CoordinateAlgebra::build(builtin(code), sign_table_for(kind), kind);
}

AlgebraLabel e_label(const CoordinateAlgebra& alg, const std::string& word) {
    const int idx = alg.word_index(BitWord::parse(word));
    REQUIRE(idx >= 0);
    return {AlgebraLabel::E, idx};
}

AlgebraLabel t_label(int i) { return {AlgebraLabel::T, i}; }

}  // namespace

TEST_CASE("e7 coordinate algebra products") {
    const auto alg = make(AlgebraKind::E7);
    CHECK(alg.length() == 7);
    CHECK(alg.support_set().size() == 7);

    // e^{c5} e^{c6} = -e^{c3}
    const auto prod = alg.basis_product(e_label(alg, "0011110"), e_label(alg, "1001011"));
    REQUIRE(prod.size() == 1);
    CHECK(prod[0].first == e_label(alg, "1010101"));
    CHECK(prod[0].second == Rational(-1));

    // e^{c1} e^{c2} = +e^{c3}
    const auto prod2 = alg.basis_product(e_label(alg, "1100110"), e_label(alg, "0110011"));
    REQUIRE(prod2.size() == 1);
    CHECK(prod2[0].first == e_label(alg, "1010101"));
    CHECK(prod2[0].second == Rational(1));

    CHECK(alg.basis_product(t_label(0), t_label(1)).empty());
    const auto tt = alg.basis_product(t_label(2), t_label(2));
    REQUIRE(tt.size() == 1);
    CHECK(tt[0].first == t_label(2));
    CHECK(tt[0].second == Rational(1));
}

TEST_CASE("t action and bilinear extension") {
    const auto alg = make(AlgebraKind::E7);
    // supp(c1) contains coordinates 1 and 2, so (t1 + t2) e^{c1} = 2 e^{c1}
    const AlgebraCombo x{{t_label(0), Rational(1)}, {t_label(1), Rational(1)}};
    const AlgebraCombo y{{e_label(alg, "1100110"), Rational(1)}};
    const auto out = alg.multiply(x, y);
    REQUIRE(out.size() == 1);
    CHECK(out[0].first == e_label(alg, "1100110"));
    CHECK(out[0].second == Rational(2));

    // t outside the support annihilates
    CHECK(alg.multiply({{t_label(2), Rational(1)}}, y).empty());

    CHECK_THROWS_AS(alg.multiply({{t_label(9), Rational(1)}}, y), input_error);
    CHECK_THROWS_AS(alg.multiply({{{AlgebraLabel::E, 40}, Rational(1)}}, y), input_error);
}

TEST_CASE("e8 complementary products vanish") {
    const auto alg = make(AlgebraKind::E8);
    CHECK(alg.support_set().size() == 14);
    CHECK(alg.basis_product(e_label(alg, "11001100"), e_label(alg, "00110011")).empty());
    // non-complementary pair still lands on a single e
    const auto prod = alg.basis_product(e_label(alg, "11001100"), e_label(alg, "10011001"));
    REQUIRE(prod.size() == 1);
    CHECK(prod[0].first == e_label(alg, "01010101"));
}

TEST_CASE("f4 squares") {
    const auto alg = make(AlgebraKind::F4);
    CHECK(alg.support_set().size() == 7);

    const auto sq = alg.basis_product(e_label(alg, "1100"), e_label(alg, "1100"));
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].first == t_label(0));
    CHECK(sq[0].second == Rational(-2));
    CHECK(sq[1].first == t_label(1));
    CHECK(sq[1].second == Rational(-2));

    const auto ones_sq = alg.basis_product(e_label(alg, "1111"), e_label(alg, "1111"));
    REQUIRE(ones_sq.size() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(ones_sq[i].first == t_label(i));
        CHECK(ones_sq[i].second == Rational(-1));
    }

    // weight-2 products reach e^1 with the transcribed scalars
    const auto to_one = alg.basis_product(e_label(alg, "1100"), e_label(alg, "0011"));
    REQUIRE(to_one.size() == 1);
    CHECK(to_one[0].first == e_label(alg, "1111"));
    CHECK(to_one[0].second == Rational(-2));
}

TEST_CASE("build rejects mismatched inputs") {
    CHECK_THROWS_AS(
        CoordinateAlgebra::build(builtin("simplex7"), sign_table_e8(), AlgebraKind::E8),
        input_error);
    CHECK_THROWS_AS(
        CoordinateAlgebra::build(builtin("simplex7"), sign_table_e8(), AlgebraKind::E7),
        input_error);
}

TEST_CASE("axiom reports") {
    const auto e7 = axiom_report(make(AlgebraKind::E7));
    CHECK(e7.idempotents);
    CHECK(e7.t_action);
    CHECK(e7.e_products);
    CHECK(e7.e_squares);
    CHECK(e7.complementary);
    CHECK(e7.all_code_algebra_clauses());
    CHECK_FALSE(e7.commutative);
    CHECK(e7.basis_deviations.empty());

    const auto e8 = axiom_report(make(AlgebraKind::E8));
    CHECK(e8.all_code_algebra_clauses());
    CHECK_FALSE(e8.commutative);
    CHECK(e8.basis_deviations.empty());

    const auto f4 = axiom_report(make(AlgebraKind::F4));
    REQUIRE(f4.basis_deviations.size() == 1);
    CHECK(f4.basis_deviations[0] == "basis includes e^1");
    CHECK(f4.idempotents);
    CHECK(f4.t_action);
    CHECK(f4.e_products);
    CHECK(f4.e_squares);
    // products of complementary weight-2 words land on e^1 instead of zero
    CHECK_FALSE(f4.complementary);
    CHECK_FALSE(f4.commutative);
}

TEST_CASE("product closure and quasi-antisymmetry") {
    for (AlgebraKind kind : {AlgebraKind::E7, AlgebraKind::E8, AlgebraKind::F4}) {
        const auto alg = make(kind);
        const auto& support = alg.support_set();
        const int m = static_cast<int>(support.size());
        for (int a = 0; a < m; ++a) {
            for (int b = 0; b < m; ++b) {
                const auto prod =
                    alg.basis_product({AlgebraLabel::E, a}, {AlgebraLabel::E, b});
                if (a == b) {
                    for (const auto& [l, c] : prod) {
                        CHECK(l.kind == AlgebraLabel::T);
                        CHECK(support[a].bit(l.index));
                    }
                    continue;
                }
                // single e-label target, and the coefficient law between the
                // two orders of the factors
                const int target = alg.word_index(support[a] + support[b]);
                for (const auto& [l, c] : prod) {
                    CHECK(l.kind == AlgebraLabel::E);
                    CHECK(l.index == target);
                }
                const Rational forward = alg.e_coefficient(a, b);
                const Rational backward = alg.e_coefficient(b, a);
                if (target >= 0) {
                    const int parity = support[a].dot(support[b]) % 2 == 1 ? +1 : -1;
                    CHECK(backward == Rational(parity) * forward);
                } else {
                    CHECK(forward == Rational(0));
                    CHECK(backward == Rational(0));
                }
            }
        }
        // every support word has even weight, which rule five relies on
        for (const auto& w : support) CHECK(w.weight() % 2 == 0);
    }
}

TEST_CASE("coordinate algebra JSON export") {
    const auto alg = make(AlgebraKind::F4);
    const std::string json = alg.to_json();
    CHECK(json.find("\"n\":4") != std::string::npos);
    CHECK(json.find("\"S\"") != std::string::npos);
    CHECK(json.find("\"e:1111\"") != std::string::npos);
    CHECK(json.find("\"t:1\"") != std::string::npos);
}
