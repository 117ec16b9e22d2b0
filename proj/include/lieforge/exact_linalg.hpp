#ifndef LIEFORGE_EXACT_LINALG_HPP
#define LIEFORGE_EXACT_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "lieforge/errors.hpp"
#include "lieforge/rational.hpp"

namespace lieforge {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;
using RatMatrix = std::vector<std::vector<Rational>>;

// Rank by fraction-free (Bareiss) elimination. Destroys its argument.
int integer_rank(IntMatrix m);

// Nonzero determinant test for a square integer matrix.
bool integer_nonsingular(IntMatrix m);

// In-place reduced row echelon form over the rationals.
// Returns the pivot columns; rank = pivots.size().
std::vector<int> rational_rref(RatMatrix& m);

// Exact solver for B x = t with a fixed m-by-k matrix B of full column
// rank k. Precomputes the row reduction once; solve() then answers each
// right-hand side with a consistency check (throws build_error when t is
// outside the column span).
class LinearSolver {
  public:
    explicit LinearSolver(const RatMatrix& columns_b);

    int rows() const { return rows_; }
    int unknowns() const { return cols_; }

    std::vector<Rational> solve(const std::vector<Rational>& t) const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    // elim_ * B = rref(B); the top cols_ rows of elim_*t are the solution,
    // the remaining rows must annihilate t.
    RatMatrix elim_;
};

}  // namespace lieforge

#endif
