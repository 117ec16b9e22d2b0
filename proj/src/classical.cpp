#include "lieforge/classical.hpp"

#include <algorithm>

namespace lieforge {

ClassicalSeries classical_series_from_name(const std::string& name) {
    if (name == "c" || name == "C") return ClassicalSeries::C;
    if (name == "d" || name == "D") return ClassicalSeries::D;
    if (name == "b" || name == "B") return ClassicalSeries::B;
    throw input_error("unknown classical series '" + name + "'");
}

int MatrixLieAlgebra::tensor_index(int word, unsigned pattern) const {
    int idx = 3 * copies;
    for (int w = 0; w < word; ++w) idx += 1 << support_set[w].weight();
    return idx + static_cast<int>(pattern);
}

namespace {

constexpr int kPlus = 0, kMinus = 1;

int sign_of(unsigned pattern, int pos, int weight) {
    return ((pattern >> (weight - 1 - pos)) & 1) ? kMinus : kPlus;
}

// <a|b> on the basis signs.
int pairing(int a, int b) {
    if (a == kPlus && b == kMinus) return +1;
    if (a == kMinus && b == kPlus) return -1;
    return 0;
}

RatMatrix zero_matrix(int m) { return RatMatrix(m, std::vector<Rational>(m)); }

// 2x2 action entries x[out][in] of E, F, H on (v+, v-).
void sl2_entries(Sl2Gen gen, int entries[2][2]) {
    entries[0][0] = entries[0][1] = entries[1][0] = entries[1][1] = 0;
    switch (gen) {
        case Sl2Gen::E: entries[kPlus][kMinus] = 1; break;
        case Sl2Gen::F: entries[kMinus][kPlus] = 1; break;
        case Sl2Gen::H: entries[kPlus][kPlus] = 1; entries[kMinus][kMinus] = -1; break;
    }
}

struct SparseEntry { int row, col; Rational value; };

std::vector<SparseEntry> nonzeros(const RatMatrix& m) {
    std::vector<SparseEntry> out;
    for (int r = 0; r < static_cast<int>(m.size()); ++r)
        for (int c = 0; c < static_cast<int>(m.size()); ++c)
            if (!m[r][c].is_zero()) out.push_back({r, c, m[r][c]});
    return out;
}

RatMatrix matrix_bracket(const RatMatrix& a, const RatMatrix& b) {
    const int m = static_cast<int>(a.size());
    RatMatrix out = zero_matrix(m);
    for (const auto& ea : nonzeros(a))
        for (const auto& eb : nonzeros(b))
            if (ea.col == eb.row) out[ea.row][eb.col] += ea.value * eb.value;
    for (const auto& eb : nonzeros(b))
        for (const auto& ea : nonzeros(a))
            if (eb.col == ea.row) out[eb.row][ea.col] -= eb.value * ea.value;
    return out;
}

void check_skew_against_form(const MatrixLieAlgebra& alg) {
    const int m = alg.space.dimension;
    for (const auto& x : alg.basis) {
        for (int u = 0; u < m; ++u) {
            for (int v = 0; v < m; ++v) {
                // form(Xu, v) + form(u, Xv) = 0 on basis vectors
                Rational acc;
                for (int r = 0; r < m; ++r) {
                    acc += x[r][u] * alg.space.form[r][v];
                    acc += alg.space.form[u][r] * x[r][v];
                }
                if (!acc.is_zero())
                    throw build_error("classical build: basis matrix not skew for the form");
            }
        }
    }
}

void fill_closure_table(MatrixLieAlgebra& alg) {
    const int dim = alg.dim();
    const int m = alg.space.dimension;
    RatMatrix columns(m * m, std::vector<Rational>(dim));
    for (int b = 0; b < dim; ++b)
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) columns[r * m + c][b] = alg.basis[b][r][c];
    const LinearSolver solver(columns);

    alg.bracket_table.assign(static_cast<std::size_t>(dim) * dim, SparseVec{});
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            const RatMatrix br = matrix_bracket(alg.basis[i], alg.basis[j]);
            std::vector<Rational> flat(m * m);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) flat[r * m + c] = br[r][c];
            std::vector<Rational> coords;
            try {
                coords = solver.solve(flat);
            } catch (const build_error&) {
                throw build_error("classical build: bracket escapes the spanning set");
            }
            SparseVec entry;
            for (int k = 0; k < dim; ++k)
                if (!coords[k].is_zero()) entry.push_back({k, coords[k]});
            alg.bracket_table[static_cast<std::size_t>(i) * dim + j] = std::move(entry);
        }
    }
}

}  // namespace

MatrixLieAlgebra build_symplectic(int n) {
    if (n < 1) throw input_error("build_symplectic: n must be at least 1");
    MatrixLieAlgebra alg;
    alg.copies = n;
    const int m = 2 * n;
    alg.space.dimension = m;
    alg.space.symplectic = true;
    alg.space.form = zero_matrix(m);
    alg.space.coordinate_tags.assign(m, "");
    for (int i = 0; i < n; ++i) {
        alg.space.form[2 * i][2 * i + 1] = Rational(1);
        alg.space.form[2 * i + 1][2 * i] = Rational(-1);
        alg.space.coordinate_tags[2 * i] = "V" + std::to_string(i + 1);
        alg.space.coordinate_tags[2 * i + 1] = "V" + std::to_string(i + 1);
    }
    const auto coord = [](int copy, int s) { return 2 * copy + s; };

    for (int i = 0; i < n; ++i) {
        for (Sl2Gen g : {Sl2Gen::E, Sl2Gen::F, Sl2Gen::H}) {
            int x[2][2];
            sl2_entries(g, x);
            RatMatrix mat = zero_matrix(m);
            for (int out = 0; out < 2; ++out)
                for (int in = 0; in < 2; ++in)
                    if (x[out][in] != 0) mat[coord(i, out)][coord(i, in)] = Rational(x[out][in]);
            alg.basis.push_back(std::move(mat));
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            alg.support_set.push_back(BitWord::unit(n, i) + BitWord::unit(n, j));
            for (unsigned pat = 0; pat < 4; ++pat) {
                const int si = sign_of(pat, 0, 2), sj = sign_of(pat, 1, 2);
                // u (x) v acts by w -> <w|u> v on V_i and w -> <w|v> u on V_j.
                RatMatrix mat = zero_matrix(m);
                for (int u = 0; u < 2; ++u) {
                    if (const int p = pairing(u, si))
                        mat[coord(j, sj)][coord(i, u)] = Rational(p);
                    if (const int p = pairing(u, sj))
                        mat[coord(i, si)][coord(j, u)] = Rational(p);
                }
                alg.basis.push_back(std::move(mat));
            }
        }
    }
    check_skew_against_form(alg);
    fill_closure_table(alg);
    return alg;
}

namespace {

// Shared layout of the orthogonal realizations: summands W_i = V_{2i} (x)
// V_{2i+1} of dimension 4 at offset base + 4i, coordinates indexed by the
// sign pair (a, b) as 2a + b.
struct OrthogonalLayout {
    int pairs;  // number of W_i summands
    int base;   // ambient offset of W_0 (1 when the line F is present)

    int coord(int pair, int a, int b) const { return base + 4 * pair + 2 * a + b; }
    int ambient() const { return base + 4 * pairs; }
};

void fill_symmetric_form(MatrixLieAlgebra& alg, const OrthogonalLayout& lay) {
    const int m = lay.ambient();
    alg.space.dimension = m;
    alg.space.symplectic = false;
    alg.space.form = zero_matrix(m);
    alg.space.coordinate_tags.assign(m, "");
    if (lay.base == 1) {
        alg.space.form[0][0] = Rational(1);
        alg.space.coordinate_tags[0] = "F";
    }
    for (int i = 0; i < lay.pairs; ++i) {
        const std::string tag =
            "V" + std::to_string(2 * i + 1) + "*V" + std::to_string(2 * i + 2);
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                alg.space.coordinate_tags[lay.coord(i, a, b)] = tag;
                for (int a2 = 0; a2 < 2; ++a2) {
                    for (int b2 = 0; b2 < 2; ++b2) {
                        const int p = pairing(a, a2) * pairing(b, b2);
                        if (p != 0)
                            alg.space.form[lay.coord(i, a, b)][lay.coord(i, a2, b2)] =
                                Rational(p);
                    }
                }
            }
        }
    }
}

void push_orthogonal_sl2(MatrixLieAlgebra& alg, const OrthogonalLayout& lay) {
    const int m = lay.ambient();
    for (int copy = 0; copy < 2 * lay.pairs; ++copy) {
        const int pair = copy / 2;
        const bool first_factor = copy % 2 == 0;
        for (Sl2Gen g : {Sl2Gen::E, Sl2Gen::F, Sl2Gen::H}) {
            int x[2][2];
            sl2_entries(g, x);
            RatMatrix mat = zero_matrix(m);
            for (int out = 0; out < 2; ++out) {
                for (int in = 0; in < 2; ++in) {
                    if (x[out][in] == 0) continue;
                    for (int other = 0; other < 2; ++other) {
                        const int row = first_factor ? lay.coord(pair, out, other)
                                                     : lay.coord(pair, other, out);
                        const int col = first_factor ? lay.coord(pair, in, other)
                                                     : lay.coord(pair, other, in);
                        mat[row][col] = Rational(x[out][in]);
                    }
                }
            }
            alg.basis.push_back(std::move(mat));
        }
    }
}

// sigma_{w1,w2}: w -> b(w,w1) w2 - b(w,w2) w1 for coordinate vectors w1, w2.
RatMatrix sigma_matrix(const RatMatrix& form, int m, int w1, int w2) {
    RatMatrix mat = zero_matrix(m);
    for (int col = 0; col < m; ++col) {
        if (!form[col][w1].is_zero()) mat[w2][col] += form[col][w1];
        if (!form[col][w2].is_zero()) mat[w1][col] -= form[col][w2];
    }
    return mat;
}

}  // namespace

MatrixLieAlgebra build_orthogonal_even(int n) {
    if (n < 2) throw input_error("build_orthogonal_even: n must be at least 2");
    MatrixLieAlgebra alg;
    alg.copies = 2 * n;
    const OrthogonalLayout lay{n, 0};
    fill_symmetric_form(alg, lay);
    push_orthogonal_sl2(alg, lay);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            BitWord word = BitWord::zero(2 * n);
            for (int c : {2 * i, 2 * i + 1, 2 * j, 2 * j + 1})
                word = word + BitWord::unit(2 * n, c);
            alg.support_set.push_back(word);
            for (unsigned pat = 0; pat < 16; ++pat) {
                const int s1 = sign_of(pat, 0, 4), s2 = sign_of(pat, 1, 4);
                const int s3 = sign_of(pat, 2, 4), s4 = sign_of(pat, 3, 4);
                alg.basis.push_back(sigma_matrix(alg.space.form, lay.ambient(),
                                                 lay.coord(i, s1, s2), lay.coord(j, s3, s4)));
            }
        }
    }
    check_skew_against_form(alg);
    fill_closure_table(alg);
    return alg;
}

MatrixLieAlgebra build_orthogonal_odd(int n) {
    if (n < 1) throw input_error("build_orthogonal_odd: n must be at least 1");
    MatrixLieAlgebra alg;
    alg.copies = 2 * n;
    const OrthogonalLayout lay{n, 1};
    fill_symmetric_form(alg, lay);
    push_orthogonal_sl2(alg, lay);
    for (int i = 0; i < n; ++i) {
        BitWord word = BitWord::unit(2 * n, 2 * i) + BitWord::unit(2 * n, 2 * i + 1);
        alg.support_set.push_back(word);
        for (unsigned pat = 0; pat < 4; ++pat) {
            const int s1 = sign_of(pat, 0, 2), s2 = sign_of(pat, 1, 2);
            alg.basis.push_back(
                sigma_matrix(alg.space.form, lay.ambient(), 0, lay.coord(i, s1, s2)));
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            BitWord word = BitWord::zero(2 * n);
            for (int c : {2 * i, 2 * i + 1, 2 * j, 2 * j + 1})
                word = word + BitWord::unit(2 * n, c);
            alg.support_set.push_back(word);
            for (unsigned pat = 0; pat < 16; ++pat) {
                const int s1 = sign_of(pat, 0, 4), s2 = sign_of(pat, 1, 4);
                const int s3 = sign_of(pat, 2, 4), s4 = sign_of(pat, 3, 4);
                alg.basis.push_back(sigma_matrix(alg.space.form, lay.ambient(),
                                                 lay.coord(i, s1, s2), lay.coord(j, s3, s4)));
            }
        }
    }
    check_skew_against_form(alg);
    fill_closure_table(alg);
    return alg;
}

MatrixLieAlgebra build_classical(ClassicalSeries series, int n) {
    switch (series) {
        case ClassicalSeries::C: return build_symplectic(n);
        case ClassicalSeries::D: return build_orthogonal_even(n);
        case ClassicalSeries::B: return build_orthogonal_odd(n);
    }
    throw input_error("unknown classical series");
}

CoordinateAlgebra extract_coordinate_algebra(const MatrixLieAlgebra& realization) {
    const int n = realization.copies;
    const auto& support = realization.support_set;
    const int words = static_cast<int>(support.size());

    std::vector<std::vector<Rational>> e_products(words, std::vector<Rational>(words));
    for (int a = 0; a < words; ++a) {
        for (int b = 0; b < words; ++b) {
            if (a == b) continue;
            const BitWord c = support[a], d = support[b];
            const BitWord sum = c + d;
            const int target =
                static_cast<int>(std::find(support.begin(), support.end(), sum) -
                                 support.begin());
            bool lambda_known = false;
            Rational lambda;
            for (unsigned x = 0; x < (1u << c.weight()); ++x) {
                for (unsigned y = 0; y < (1u << d.weight()); ++y) {
                    const SparseVec entry = realization.table_entry(
                        std::min(realization.tensor_index(a, x), realization.tensor_index(b, y)),
                        std::max(realization.tensor_index(a, x), realization.tensor_index(b, y)));
                    const bool swapped = realization.tensor_index(a, x) >
                                         realization.tensor_index(b, y);
                    const TensorTerm term = phi(c, d, x, y);
                    if (term.coeff.is_zero() || target == words) {
                        if (!entry.empty())
                            throw build_error(
                                "extract: matrix bracket nonzero where the rules force zero");
                        continue;
                    }
                    if (entry.size() > 1)
                        throw build_error("extract: bracket not supported on a single vector");
                    Rational coeff;
                    if (!entry.empty()) {
                        if (entry[0].first != realization.tensor_index(target, term.pattern))
                            throw build_error("extract: bracket lands on the wrong vector");
                        coeff = swapped ? -entry[0].second : entry[0].second;
                    }
                    const Rational candidate = coeff / term.coeff;
                    if (!lambda_known) {
                        lambda = candidate;
                        lambda_known = true;
                    } else if (lambda != candidate) {
                        throw build_error("extract: inconsistent scalar for a word pair");
                    }
                }
            }
            if (lambda_known) e_products[a][b] = lambda;
        }
    }

    std::vector<std::vector<Rational>> mu;
    for (int a = 0; a < words; ++a) {
        const BitWord c = support[a];
        const auto supp = c.support();
        const int w = static_cast<int>(supp.size());
        std::vector<Rational> row(w);
        for (int p = 0; p < w; ++p) {
            // X all plus, Y minus except at p: the contractions vanish at
            // every other position, leaving mu_p s_{+,+} = -mu_p E there.
            unsigned x = 0, y = 0;
            for (int q = 0; q < w; ++q)
                if (q != p) y |= 1u << (w - 1 - q);
            const int xi = realization.tensor_index(a, x);
            const int yi = realization.tensor_index(a, y);
            const SparseVec entry =
                realization.table_entry(std::min(xi, yi), std::max(xi, yi));
            const int e_index = realization.sl2_index(supp[p], Sl2Gen::E);
            Rational coeff;
            for (const auto& [idx, value] : entry) {
                if (idx == e_index) coeff = value;
                else if (!value.is_zero())
                    throw build_error("extract: diagonal bracket off the expected copy");
            }
            if (xi > yi) coeff = -coeff;
            row[p] = -coeff;
        }
        mu.push_back(std::move(row));
    }
    return CoordinateAlgebra::from_parts(n, support, std::move(e_products), std::move(mu));
}

ClassicalCrossCheck classical_cross_check(ClassicalSeries series, int n) {
    MatrixLieAlgebra realization = build_classical(series, n);
    CoordinateAlgebra coordinates = extract_coordinate_algebra(realization);
    LieAlgebra rebuilt = LieAlgebra::build(coordinates);
    bool isomorphic = rebuilt.dim() == realization.dim();
    for (int i = 0; i < realization.dim() && isomorphic; ++i) {
        for (int j = i + 1; j < realization.dim() && isomorphic; ++j) {
            if (rebuilt.table_entry(i, j) != realization.table_entry(i, j))
                isomorphic = false;
        }
    }
    return ClassicalCrossCheck{std::move(realization), std::move(coordinates),
                               std::move(rebuilt), isomorphic};
}

}  // namespace lieforge
