#ifndef LIEFORGE_CLASSICAL_HPP
#define LIEFORGE_CLASSICAL_HPP

#include <string>
#include <vector>

#include "lieforge/exact_linalg.hpp"
#include "lieforge/liealg.hpp"

namespace lieforge {

enum class ClassicalSeries { C, D, B };

ClassicalSeries classical_series_from_name(const std::string& name);

struct BilinearSpace {
    int dimension = 0;
    bool symplectic = false;  // alternating form; false = symmetric
    RatMatrix form;
    std::vector<std::string> coordinate_tags;  // owning block of each coordinate
};

// Matrix realization of a classical algebra carrying the isotypic block
// structure: basis ordered like LieAlgebra (sl2 copies E,F,H first, then
// one tensor block per support word in binary sign order), and the closure
// witness expressing every basis bracket in the basis.
struct MatrixLieAlgebra {
    BilinearSpace space;
    int copies = 0;
    std::vector<BitWord> support_set;
    std::vector<RatMatrix> basis;
    std::vector<SparseVec> bracket_table;  // row-major dim*dim, filled for i < j

    int dim() const { return static_cast<int>(basis.size()); }
    int sl2_index(int copy, Sl2Gen gen) const { return 3 * copy + static_cast<int>(gen); }
    int tensor_index(int word, unsigned pattern) const;
    const SparseVec& table_entry(int i, int j) const {
        return bracket_table.at(static_cast<std::size_t>(i) * dim() + j);
    }
};

// sp(V_1 perp ... perp V_n): n sl2 copies plus one 4-dimensional block per
// pair of copies. Dimension 2n^2 + n.
MatrixLieAlgebra build_symplectic(int n);

// so(V_1 (x) V_2 perp ... perp V_{2n-1} (x) V_{2n}), n >= 2: 2n sl2 copies
// plus one 16-dimensional block per pair of 4-dimensional summands.
// Dimension 8n^2 - 2n.
MatrixLieAlgebra build_orthogonal_even(int n);

// so(F perp V_1 (x) V_2 perp ...): like the even case plus one
// 4-dimensional block per summand paired against the line. Dimension
// 8n^2 + 2n.
MatrixLieAlgebra build_orthogonal_odd(int n);

MatrixLieAlgebra build_classical(ClassicalSeries series, int n);

// Solves for the scalars that make the matrix brackets match the abstract
// bracket rules; throws build_error when no consistent scalars exist.
CoordinateAlgebra extract_coordinate_algebra(const MatrixLieAlgebra& realization);

struct ClassicalCrossCheck {
    MatrixLieAlgebra realization;
    CoordinateAlgebra coordinates;
    LieAlgebra rebuilt;
    bool isomorphic;  // exact structure-constant equality under the block map
};

ClassicalCrossCheck classical_cross_check(ClassicalSeries series, int n);

}  // namespace lieforge

#endif
