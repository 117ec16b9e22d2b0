#ifndef LIEFORGE_COORDALG_HPP
#define LIEFORGE_COORDALG_HPP

#include <string>
#include <utility>
#include <vector>

#include "lieforge/codes.hpp"
#include "lieforge/rational.hpp"
#include "lieforge/signtable.hpp"

namespace lieforge {

// Basis label of a coordinate algebra: t_1..t_n then e^c for c in S.
struct AlgebraLabel {
    enum Kind { T, E } kind;
    int index;  // T: coordinate 0..n-1; E: position in S

    friend bool operator==(const AlgebraLabel& a, const AlgebraLabel& b) {
        return a.kind == b.kind && a.index == b.index;
    }
    friend bool operator<(const AlgebraLabel& a, const AlgebraLabel& b) {
        return a.kind != b.kind ? a.kind < b.kind : a.index < b.index;
    }
};

using AlgebraCombo = std::vector<std::pair<AlgebraLabel, Rational>>;

// The nonassociative algebra on {t_i} and {e^c : c in S} whose products
// encode all Lie brackets between isotypic pieces. Immutable after build.
class CoordinateAlgebra {
  public:
    // The three exceptional algebras: S and all products come from the code
    // and its sign table. The code must be the matching builtin.
    static CoordinateAlgebra build(const BinaryCode& code, const SignTable& signs,
                                   AlgebraKind kind);

    // Generic constructor (used for the classical series): e_products[a][b]
    // is the coefficient of e^{S[a]+S[b]} in e^{S[a]} e^{S[b]} (zero products
    // stored explicitly), mu[a] holds the coefficients of e^c e^c on the t_i
    // for i in supp(c), aligned with the sorted support.
    static CoordinateAlgebra from_parts(int n, std::vector<BitWord> support_set,
                                        std::vector<std::vector<Rational>> e_products,
                                        std::vector<std::vector<Rational>> mu);

    int length() const { return n_; }
    const BinaryCode& code() const { return code_; }
    const std::vector<BitWord>& support_set() const { return support_; }
    int word_index(const BitWord& c) const;  // -1 when c not in S

    int label_count() const { return n_ + static_cast<int>(support_.size()); }
    AlgebraLabel label_at(int idx) const;
    int label_index(const AlgebraLabel& l) const;
    std::string label_string(const AlgebraLabel& l) const;

    // Coefficient of e^{c+d} in e^c e^d for distinct support words.
    const Rational& e_coefficient(int a, int b) const;
    // Coefficient of t_i in e^c e^c, for i the support_pos-th support index.
    const Rational& mu(int word, int support_pos) const;

    // Product of two basis labels as a sparse combination.
    AlgebraCombo basis_product(const AlgebraLabel& x, const AlgebraLabel& y) const;
    // Bilinear extension; throws input_error on labels outside the algebra.
    AlgebraCombo multiply(const AlgebraCombo& x, const AlgebraCombo& y) const;

    std::string to_json() const;

  private:
    explicit CoordinateAlgebra(BinaryCode code) : n_(code.length()), code_(std::move(code)) {}

    int n_;
    BinaryCode code_;
    std::vector<BitWord> support_;
    std::vector<std::vector<Rational>> e_products_;
    std::vector<std::vector<Rational>> mu_;
};

// One verdict per clause of the code-algebra definition, checked
// exhaustively over basis pairs. Commutativity is reported separately,
// and basis deviations (an e^1 generator) are listed rather than failed.
struct AxiomReport {
    bool idempotents = false;      // t_i t_j = delta_ij t_i
    bool t_action = false;         // t_i e^c and e^c t_i lie in F e^c
    bool e_products = false;       // e^c e^d in F e^{c+d} for d != c, 1+c
    bool e_squares = false;        // (e^c)^2 in span{t_i : i in supp(c)}
    bool complementary = false;    // e^c e^{1+c} = 0
    bool commutative = false;
    std::vector<std::string> basis_deviations;

    bool all_code_algebra_clauses() const {
        return idempotents && t_action && e_products && e_squares && complementary;
    }
};

AxiomReport axiom_report(const CoordinateAlgebra& algebra);

}  // namespace lieforge

#endif
