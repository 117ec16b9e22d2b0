#include <set>

#include "doctest.h"
#include "lieforge/exact_linalg.hpp"
#include "lieforge/lattices.hpp"
#include "oracles.hpp"

using namespace lieforge;

namespace {

RootVector rv(std::vector<int> coords) { return RootVector{std::move(coords)}; }

std::set<BitWord> word_set(const BinaryCode& code) {
    const auto words = code.codewords();
    return {words.begin(), words.end()};
}

long long count_weight4(const BinaryCode& code) {
    long long count = 0;
    for (const auto& w : code.codewords())
        if (w.weight() == 4) ++count;
    return count;
}

// Determinant by minor expansion; inputs here are tiny Gram matrices.
long long int_det(const std::vector<std::vector<long long>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    long long acc = 0;
    for (int c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<long long>> minor;
        for (int r = 1; r < n; ++r) {
            std::vector<long long> row;
            for (int cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        acc += (c % 2 ? -1 : 1) * m[0][c] * int_det(minor);
    }
    return acc;
}

}  // namespace

TEST_CASE("code lattice roots match the brute-force scan") {
    const BinaryCode simplex = builtin("simplex7");
    const auto roots = roots_of_code_lattice(simplex);
    CHECK(roots.size() == 126);
    CHECK(oracles::root_set(roots) ==
          oracles::brute_force_lattice_vectors(word_set(simplex), 7, 4));

    const BinaryCode ext = builtin("exthamming8");
    const auto ext_roots = roots_of_code_lattice(ext);
    CHECK(ext_roots.size() == 240);
    CHECK(oracles::root_set(ext_roots) ==
          oracles::brute_force_lattice_vectors(word_set(ext), 8, 4));

    const BinaryCode zero3 = BinaryCode::from_generator({}, 3);
    const auto zero_roots = roots_of_code_lattice(zero3);
    CHECK(zero_roots.size() == 6);
    for (const auto& r : zero_roots) CHECK(r.dot(r) == 4);
}

TEST_CASE("root count formula 2n + 16 w4") {
    oracles::Rng rng(77);
    for (const char* name : {"simplex7", "exthamming8", "even4", "hamming7"}) {
        const BinaryCode code = builtin(name);
        CHECK(static_cast<long long>(roots_of_code_lattice(code).size()) ==
              2 * code.length() + 16 * count_weight4(code));
    }
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 4 + rng.below(4);
        std::vector<BitWord> rows;
        for (int r = 0; r < 3; ++r) {
            BitWord w(n, rng.next());
            if (w.weight() % 2) w = w + BitWord::unit(n, rng.below(n));
            rows.push_back(w);
        }
        const BinaryCode code = BinaryCode::from_generator(rows, n);
        CHECK(static_cast<long long>(roots_of_code_lattice(code).size()) ==
              2 * n + 16 * count_weight4(code));
    }
}

TEST_CASE("root lists are closed under negation") {
    oracles::Rng rng(1234);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 4 + rng.below(3);
        std::vector<BitWord> rows;
        for (int r = 0; r < 2 + rng.below(2); ++r) {
            BitWord w(n, rng.next());
            if (w.weight() % 2) w = w + BitWord::unit(n, rng.below(n));
            rows.push_back(w);
        }
        const auto roots = roots_of_code_lattice(BinaryCode::from_generator(rows, n));
        const auto set = oracles::root_set(roots);
        for (const auto& r : roots) CHECK(set.count(r.negated().coords));
    }
}

TEST_CASE("roots of doubly even codes are closed under reflection") {
    // Reflection closure needs the weight-4 codewords to meet evenly, which
    // doubly even codes guarantee; an even code can fail it (two weight-4
    // words sharing three coordinates give a half-integer reflection).
    oracles::Rng rng(4321);
    const auto ext_rows = builtin_generator_rows(BuiltinCode::exthamming8);
    std::vector<BinaryCode> codes{builtin("simplex7"), builtin("exthamming8"),
                                  builtin("even4")};
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<BitWord> rows;
        for (const auto& row : ext_rows)
            if (rng.below(2)) rows.push_back(row);
        codes.push_back(BinaryCode::from_generator(rows, 8));
    }
    for (const auto& code : codes) {
        const auto roots = roots_of_code_lattice(code);
        const auto set = oracles::root_set(roots);
        for (const auto& r : roots) {
            for (const auto& s : roots) CHECK(set.count(reflect(r, s).coords));
        }
    }
}

TEST_CASE("orthogonal root frame") {
    const auto frame = orthogonal_root_frame(roots_of_code_lattice(builtin("simplex7")));
    REQUIRE(frame.size() == 7);
    for (std::size_t i = 0; i < frame.size(); ++i) {
        CHECK(frame[i].coords[i] == 2);
        for (std::size_t j = i + 1; j < frame.size(); ++j)
            CHECK(frame[i].dot(frame[j]) == 0);
    }
    CHECK(orthogonal_root_frame(roots_of_code_lattice(builtin("exthamming8"))).size() == 8);

    const BinaryCode zero1 = BinaryCode::from_generator({}, 1);
    const auto tiny = orthogonal_root_frame(roots_of_code_lattice(zero1));
    CHECK(tiny == std::vector<RootVector>{rv({2})});

    CHECK_THROWS_AS(orthogonal_root_frame({rv({1, 1})}), input_error);
}

TEST_CASE("reflection formula") {
    CHECK(reflect(rv({2, 0}), rv({2, 0})) == rv({-2, 0}));
    CHECK(reflect(rv({2, 0}), rv({0, 2})) == rv({0, 2}));
    CHECK(reflect(rv({1, 1, 1, 1, 0, 0, 0, 0}), rv({2, 0, 0, 0, 0, 0, 0, 0})) ==
          rv({1, -1, -1, -1, 0, 0, 0, 0}));
    CHECK_THROWS_AS(reflect(rv({0, 0}), rv({2, 0})), input_error);

    // involution and inner-product preservation over the e8 roots
    const auto roots = roots_of_code_lattice(builtin("exthamming8"));
    oracles::Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& r = roots[rng.below(static_cast<int>(roots.size()))];
        const auto& u = roots[rng.below(static_cast<int>(roots.size()))];
        const auto& v = roots[rng.below(static_cast<int>(roots.size()))];
        CHECK(reflect(r, reflect(r, v)) == v);
        CHECK(reflect(r, u).dot(reflect(r, v)) == u.dot(v));
    }
}

TEST_CASE("minus one in the Weyl group") {
    CHECK(minus_one_in_weyl(orthogonal_root_frame(roots_of_code_lattice(builtin("simplex7")))));
    CHECK(
        minus_one_in_weyl(orthogonal_root_frame(roots_of_code_lattice(builtin("exthamming8")))));
    CHECK(minus_one_in_weyl({rv({2})}));
    // a genuinely non-axis frame: simple reflections of A1 x A1 rotated
    CHECK(minus_one_in_weyl({rv({1, 1}), rv({1, -1})}));

    CHECK_THROWS_AS(minus_one_in_weyl({rv({2, 0}), rv({0, 0})}), input_error);
    CHECK_THROWS_AS(minus_one_in_weyl({rv({2, 0}), rv({2, 0})}), input_error);
    CHECK_THROWS_AS(minus_one_in_weyl({rv({2, 0})}), input_error);
}

TEST_CASE("doubled dual lattice containment") {
    CHECK(double_dual_contained(builtin("simplex7")));
    CHECK(double_dual_contained(builtin("exthamming8")));
    CHECK(double_dual_contained(builtin("even4")));
    CHECK(double_dual_contained(BinaryCode::from_generator({}, 2)));
}

TEST_CASE("root system identification of the code lattices") {
    const auto e7 = identify_root_system(roots_of_code_lattice(builtin("simplex7")));
    CHECK(e7.dynkin_type == "E7");
    CHECK(e7.simple_roots.size() == 7);
    CHECK(e7.short_roots.empty());

    const auto e8 = identify_root_system(roots_of_code_lattice(builtin("exthamming8")));
    CHECK(e8.dynkin_type == "E8");
    CHECK(e8.simple_roots.size() == 8);

    const auto d4 = identify_root_system(roots_of_code_lattice(builtin("even4")));
    CHECK(d4.dynkin_type == "D4");
    CHECK(d4.roots.size() == 24);
}

TEST_CASE("root system identification of small synthetic systems") {
    const auto a1a1 = identify_root_system(
        {rv({2, 0}), rv({-2, 0}), rv({0, 2}), rv({0, -2})});
    CHECK(a1a1.dynkin_type == "A1+A1");

    const auto a2 = identify_root_system({rv({1, -1, 0}), rv({-1, 1, 0}), rv({0, 1, -1}),
                                          rv({0, -1, 1}), rv({1, 0, -1}), rv({-1, 0, 1})});
    CHECK(a2.dynkin_type == "A2");
    CHECK(a2.simple_roots.size() == 2);

    const auto b2 = identify_root_system({rv({2, 0}), rv({-2, 0}), rv({0, 2}), rv({0, -2}),
                                          rv({1, 1}), rv({1, -1}), rv({-1, 1}), rv({-1, -1})});
    CHECK(b2.dynkin_type == "B2");
    CHECK(b2.long_roots.size() == 4);
    CHECK(b2.short_roots.size() == 4);
}

TEST_CASE("orthogonal-complement sub-systems classify correctly") {
    // roots of the E7 lattice with vanishing first coordinate form a D6
    const auto e7 = roots_of_code_lattice(builtin("simplex7"));
    std::vector<RootVector> sub;
    for (const auto& r : e7)
        if (r.coords[0] == 0) sub.push_back(r);
    CHECK(sub.size() == 60);
    CHECK(identify_root_system(sub).dynkin_type == "D6");

    // the complement of an A2 pair inside the E8 roots is an E6
    const auto e8 = roots_of_code_lattice(builtin("exthamming8"));
    const RootVector a = rv({2, 0, 0, 0, 0, 0, 0, 0});
    const RootVector b = rv({-1, 1, 1, 1, 0, 0, 0, 0});
    CHECK(a.inner(b) == Rational(-1));
    std::vector<RootVector> comp;
    for (const auto& r : e8)
        if (r.dot(a) == 0 && r.dot(b) == 0) comp.push_back(r);
    CHECK(comp.size() == 72);
    CHECK(identify_root_system(comp).dynkin_type == "E6");

    // mixed-length disjoint union
    const auto mixed = identify_root_system({rv({2, 0, 0}), rv({-2, 0, 0}), rv({0, 2, 0}),
                                             rv({0, -2, 0}), rv({0, 0, 2}), rv({0, 0, -2}),
                                             rv({1, 1, 0}), rv({1, -1, 0}), rv({-1, 1, 0}),
                                             rv({-1, -1, 0})});
    CHECK(mixed.dynkin_type == "A1+B2");
}

TEST_CASE("dynkin type aliases") {
    CHECK(same_dynkin_type("B2", "C2"));
    CHECK(same_dynkin_type("C2", "B2"));
    CHECK(same_dynkin_type("A3", "D3"));
    CHECK(same_dynkin_type("A1+A1", "D2"));
    CHECK(same_dynkin_type("A1+E7", "E7+A1"));
    CHECK_FALSE(same_dynkin_type("B3", "C3"));
    CHECK_FALSE(same_dynkin_type("E7", "E8"));
}

TEST_CASE("cartan matrices are valid and positive definite") {
    for (const char* name : {"simplex7", "exthamming8", "even4"}) {
        const auto report = identify_root_system(roots_of_code_lattice(builtin(name)));
        const int rank = static_cast<int>(report.simple_roots.size());
        for (int i = 0; i < rank; ++i) {
            CHECK(report.cartan_matrix[i][i] == 2);
            for (int j = 0; j < rank; ++j) {
                if (i == j) continue;
                CHECK(report.cartan_matrix[i][j] <= 0);
                CHECK(report.cartan_matrix[i][j] >= -3);
            }
        }
        // Gram matrix of the simple roots: all leading minors positive.
        for (int k = 1; k <= rank; ++k) {
            std::vector<std::vector<long long>> gram(k, std::vector<long long>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    gram[i][j] = report.simple_roots[i].dot(report.simple_roots[j]);
            CHECK(int_det(gram) > 0);
        }
    }
}

TEST_CASE("identification rejects non-root-systems") {
    CHECK_THROWS_AS(identify_root_system({}), input_error);
    CHECK_THROWS_AS(identify_root_system({rv({2, 0})}), input_error);  // not closed under -
    CHECK_THROWS_AS(identify_root_system({rv({2, 2}), rv({-2, -2})}), input_error);  // norm 4
    // positive pairwise product among would-be simple roots
    CHECK_THROWS_AS(identify_root_system({rv({1, 1}), rv({-1, -1}), rv({2, 0}), rv({-2, 0}),
                                          rv({0, 2}), rv({0, -2})}),
                    classification_error);
}

TEST_CASE("report JSON has the agreed fields") {
    const auto report = identify_root_system(roots_of_code_lattice(builtin("even4")));
    const std::string json = root_system_report_json(report);
    CHECK(json.find("\"type\":\"D4\"") != std::string::npos);
    CHECK(json.find("\"simple_roots\"") != std::string::npos);
    CHECK(json.find("\"cartan_matrix\"") != std::string::npos);
}
