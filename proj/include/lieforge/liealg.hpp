#ifndef LIEFORGE_LIEALG_HPP
#define LIEFORGE_LIEALG_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lieforge/coordalg.hpp"

namespace lieforge {

enum class Sl2Gen : int { E = 0, F = 1, H = 2 };

// Tensor factor sign; patterns store one bit per support position
// (0 = plus, 1 = minus), most significant bit first.
enum class FactorSign : int { plus = 0, minus = 1 };

// Skew pairing <a|b> of the two-dimensional module: <+|-> = 1, <-|+> = -1.
int factor_pairing(FactorSign a, FactorSign b);

// Element of one sl2 copy in coordinates over (E, F, H).
struct Sl2Element {
    std::array<Rational, 3> coords{};

    friend bool operator==(const Sl2Element& a, const Sl2Element& b) {
        return a.coords == b.coords;
    }
};

// The symmetric invariant map u (x) v -> s_{u,v}, w -> ((w|u) v + (w|v) u)/2,
// on basis signs: s(+,-) = H/2, s(+,+) = -E, s(-,-) = F.
Sl2Element s_pair(FactorSign u, FactorSign v);

// Contraction of two tensor-basis vectors over the common indices of two
// distinct support words; the survivors interleave in increasing index
// order. Patterns index the sorted supports of c and d.
struct TensorTerm {
    Rational coeff;         // 0 when some common pairing vanishes
    unsigned pattern = 0;   // over the sorted support of c+d
};
TensorTerm phi(const BitWord& c, const BitWord& d, unsigned x_pattern, unsigned y_pattern);

// Contraction over supp(c) minus {i} times s_pair at i; i must belong to
// the support of c.
struct Sl2Term {
    Rational coeff;      // product of the pairings away from i
    Sl2Element element;  // s_pair of the factors at i
};
Sl2Term phi_diag(const BitWord& c, int i, unsigned x_pattern, unsigned y_pattern);

struct BasisLabel {
    enum Kind { SL2, TEN } kind;
    int copy = 0;            // SL2: 0..n-1
    Sl2Gen gen = Sl2Gen::E;  // SL2
    int word = 0;            // TEN: index into S
    unsigned pattern = 0;    // TEN: sign pattern over the sorted support
};

using SparseVec = std::vector<std::pair<int, Rational>>;  // sorted by index

// Basis plus exact antisymmetric bracket table. Basis order: the n sl2
// blocks (E, F, H per copy), then tensor vectors by support word and
// binary sign order with + before -. Immutable once built.
class LieAlgebra {
  public:
    // Builds the bracket table from the coordinate algebra's five rules and
    // verifies antisymmetry of the result exhaustively.
    static LieAlgebra build(const CoordinateAlgebra& algebra);

    int dim() const { return static_cast<int>(labels_.size()); }
    int copies() const { return n_; }
    const std::vector<BitWord>& support_set() const { return support_; }
    const BasisLabel& label(int idx) const { return labels_.at(idx); }
    const std::vector<int>& cartan_indices() const { return cartan_; }

    int sl2_index(int copy, Sl2Gen gen) const;
    int tensor_index(int word, unsigned pattern) const;

    // Raw table entry for i < j (empty vector when the bracket vanishes).
    const SparseVec& table_entry(int i, int j) const;

    // Bracket of basis vectors in any order.
    SparseVec bracket_basis(int i, int j) const;

    // Bilinear extension.
    SparseVec bracket(const SparseVec& x, const SparseVec& y) const;

    // ad(h_i) eigenvalue tuple of each basis vector.
    const std::vector<std::vector<int>>& weights() const { return weights_; }

    std::string label_string(int idx) const;

    // {"schema":"lieforge/sc/v1", dim, basis, brackets:[[i,j,[[k,num,den]..]]..]}
    std::string to_json() const;
    static LieAlgebra from_json(const std::string& text);

    // Calls fn(index, coefficient) for each term of [x_i, x_j].
    template <typename Fn>
    void for_each_bracket_term(int i, int j, Fn&& fn) const {
        if (i == j) return;
        const bool flip = i > j;
        const SparseVec& entry = flip ? table_entry(j, i) : table_entry(i, j);
        for (const auto& [k, c] : entry) fn(k, flip ? -c : c);
    }

  private:
    LieAlgebra() : n_(0) {}

    void index_labels();
    void compute_weights();

    int n_;
    std::vector<BitWord> support_;
    std::vector<BasisLabel> labels_;
    std::vector<int> cartan_;
    std::vector<int> word_offsets_;               // basis offset of each word block
    std::vector<SparseVec> table_;                // row-major, filled for i < j
    std::vector<std::vector<int>> weights_;
};

LieAlgebra build_lie_algebra(const CoordinateAlgebra& algebra);

// Convenience: code + sign table + isotypic rules for a named algebra.
LieAlgebra build_exceptional(AlgebraKind kind);

}  // namespace lieforge

#endif
