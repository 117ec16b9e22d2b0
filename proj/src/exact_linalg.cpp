#include "lieforge/exact_linalg.hpp"

#include <utility>

namespace lieforge {

int integer_rank(IntMatrix m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    BigInt prev_pivot = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[r][col] != 0) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev_pivot;
            }
            m[r][col] = 0;
        }
        prev_pivot = m[rank][col];
        ++rank;
    }
    return rank;
}

bool integer_nonsingular(IntMatrix m) {
    if (m.empty()) return true;
    const auto n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw input_error("integer_nonsingular: matrix not square");
    }
    return integer_rank(std::move(m)) == static_cast<int>(n);
}

std::vector<int> rational_rref(RatMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (!m[r][col].is_zero()) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const Rational inv = Rational(1) / m[rank][col];
        for (int c = col; c < cols; ++c) m[rank][c] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            const Rational f = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

LinearSolver::LinearSolver(const RatMatrix& columns_b) {
    rows_ = static_cast<int>(columns_b.size());
    cols_ = rows_ > 0 ? static_cast<int>(columns_b[0].size()) : 0;
    // Row-reduce [B | I]; the identity block records the elimination matrix.
    RatMatrix work(rows_, std::vector<Rational>(cols_ + rows_));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) work[r][c] = columns_b[r][c];
        work[r][cols_ + r] = Rational(1);
    }
    std::vector<int> pivots;
    {
        // Restrict pivot search to the B block.
        int rank = 0;
        for (int col = 0; col < cols_ && rank < rows_; ++col) {
            int pivot = -1;
            for (int r = rank; r < rows_; ++r) {
                if (!work[r][col].is_zero()) { pivot = r; break; }
            }
            if (pivot < 0) continue;
            std::swap(work[rank], work[pivot]);
            const Rational inv = Rational(1) / work[rank][col];
            for (int c = col; c < cols_ + rows_; ++c) work[rank][c] *= inv;
            for (int r = 0; r < rows_; ++r) {
                if (r == rank || work[r][col].is_zero()) continue;
                const Rational f = work[r][col];
                for (int c = col; c < cols_ + rows_; ++c) work[r][c] -= f * work[rank][c];
            }
            pivots.push_back(col);
            ++rank;
        }
    }
    if (static_cast<int>(pivots.size()) != cols_)
        throw input_error("LinearSolver: matrix does not have full column rank");
    // With all columns pivotal in order, row r of rref(B) is the unit row e_r.
    elim_.assign(rows_, std::vector<Rational>(rows_));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < rows_; ++c) elim_[r][c] = work[r][cols_ + c];
    }
}

std::vector<Rational> LinearSolver::solve(const std::vector<Rational>& t) const {
    if (static_cast<int>(t.size()) != rows_)
        throw input_error("LinearSolver: right-hand side has wrong size");
    std::vector<int> support;
    for (int c = 0; c < rows_; ++c)
        if (!t[c].is_zero()) support.push_back(c);
    std::vector<Rational> reduced(rows_);
    for (int r = 0; r < rows_; ++r) {
        Rational acc;
        for (int c : support) {
            if (!elim_[r][c].is_zero()) acc += elim_[r][c] * t[c];
        }
        reduced[r] = acc;
    }
    for (int r = cols_; r < rows_; ++r) {
        if (!reduced[r].is_zero())
            throw build_error("LinearSolver: right-hand side outside column span");
    }
    reduced.resize(cols_);
    return reduced;
}

}  // namespace lieforge
