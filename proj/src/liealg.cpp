#include "lieforge/liealg.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lieforge/errors.hpp"
#include "json.hpp"

namespace lieforge {

int factor_pairing(FactorSign a, FactorSign b) {
    if (a == FactorSign::plus && b == FactorSign::minus) return +1;
    if (a == FactorSign::minus && b == FactorSign::plus) return -1;
    return 0;
}

Sl2Element s_pair(FactorSign u, FactorSign v) {
    // s_{u,v}(w) = ((w|u) v + (w|v) u)/2 with E v- = v+, F v+ = v-,
    // H v+- = +-v+-; evaluating on v+ and v- gives:
    Sl2Element e;
    if (u == FactorSign::plus && v == FactorSign::plus) {
        e.coords[static_cast<int>(Sl2Gen::E)] = Rational(-1);
    } else if (u == FactorSign::minus && v == FactorSign::minus) {
        e.coords[static_cast<int>(Sl2Gen::F)] = Rational(1);
    } else {
        e.coords[static_cast<int>(Sl2Gen::H)] = half();
    }
    return e;
}

namespace {

// Contraction factors pair the left operand's tensor slot first. Building
// with LIEFORGE_FLIP_CONTRACTION reverses them, which is useful to localize
// a convention mismatch: the shipped orientation is the one the Jacobi
// suite certifies.
int contraction_pairing(FactorSign x, FactorSign y) {
#ifdef LIEFORGE_FLIP_CONTRACTION
    return factor_pairing(y, x);
#else
    return factor_pairing(x, y);
#endif
}

FactorSign pattern_sign(unsigned pattern, int pos, int weight) {
    return ((pattern >> (weight - 1 - pos)) & 1) ? FactorSign::minus : FactorSign::plus;
}

unsigned set_pattern_bit(unsigned pattern, int pos, int weight, FactorSign s) {
    const unsigned bit = 1u << (weight - 1 - pos);
    return s == FactorSign::minus ? (pattern | bit) : (pattern & ~bit);
}

}  // namespace

TensorTerm phi(const BitWord& c, const BitWord& d, unsigned x_pattern, unsigned y_pattern) {
    if (c == d) throw input_error("phi: equal support words; use phi_diag");
    if (c.length() != d.length()) throw input_error("phi: length mismatch");
    const auto supp_c = c.support();
    const auto supp_d = d.support();
    const BitWord sum = c + d;
    const auto supp_sum = sum.support();
    const int wc = static_cast<int>(supp_c.size());
    const int wd = static_cast<int>(supp_d.size());
    const int ws = static_cast<int>(supp_sum.size());

    TensorTerm out;
    out.coeff = Rational(1);
    out.pattern = 0;
    for (int p = 0; p < wc; ++p) {
        const int i = supp_c[p];
        if (!d.bit(i)) continue;
        const int q = static_cast<int>(std::lower_bound(supp_d.begin(), supp_d.end(), i) -
                                       supp_d.begin());
        out.coeff *= Rational(contraction_pairing(pattern_sign(x_pattern, p, wc),
                                                  pattern_sign(y_pattern, q, wd)));
    }
    if (out.coeff.is_zero()) return TensorTerm{Rational(0), 0};
    for (int r = 0; r < ws; ++r) {
        const int i = supp_sum[r];
        FactorSign s;
        if (c.bit(i)) {
            const int p = static_cast<int>(std::lower_bound(supp_c.begin(), supp_c.end(), i) -
                                           supp_c.begin());
            s = pattern_sign(x_pattern, p, wc);
        } else {
            const int q = static_cast<int>(std::lower_bound(supp_d.begin(), supp_d.end(), i) -
                                           supp_d.begin());
            s = pattern_sign(y_pattern, q, wd);
        }
        out.pattern = set_pattern_bit(out.pattern, r, ws, s);
    }
    return out;
}

Sl2Term phi_diag(const BitWord& c, int i, unsigned x_pattern, unsigned y_pattern) {
    if (!c.bit(i)) throw input_error("phi_diag: index outside the support");
    const auto supp = c.support();
    const int w = static_cast<int>(supp.size());
    Sl2Term out;
    out.coeff = Rational(1);
    int pos_i = -1;
    for (int p = 0; p < w; ++p) {
        if (supp[p] == i) { pos_i = p; continue; }
        out.coeff *= Rational(contraction_pairing(pattern_sign(x_pattern, p, w),
                                                  pattern_sign(y_pattern, p, w)));
    }
    out.element = s_pair(pattern_sign(x_pattern, pos_i, w), pattern_sign(y_pattern, pos_i, w));
    return out;
}

// ---- LieAlgebra -------------------------------------------------------------

void LieAlgebra::index_labels() {
    cartan_.clear();
    word_offsets_.assign(support_.size(), -1);
    for (int idx = 0; idx < dim(); ++idx) {
        const BasisLabel& l = labels_[idx];
        if (l.kind == BasisLabel::SL2 && l.gen == Sl2Gen::H) cartan_.push_back(idx);
        if (l.kind == BasisLabel::TEN && l.pattern == 0 && word_offsets_[l.word] < 0)
            word_offsets_[l.word] = idx;
    }
}

void LieAlgebra::compute_weights() {
    weights_.assign(dim(), std::vector<int>(n_, 0));
    for (int idx = 0; idx < dim(); ++idx) {
        const BasisLabel& l = labels_[idx];
        if (l.kind == BasisLabel::SL2) {
            if (l.gen == Sl2Gen::E) weights_[idx][l.copy] = 2;
            if (l.gen == Sl2Gen::F) weights_[idx][l.copy] = -2;
        } else {
            const auto supp = support_[l.word].support();
            const int w = static_cast<int>(supp.size());
            for (int p = 0; p < w; ++p)
                weights_[idx][supp[p]] =
                    pattern_sign(l.pattern, p, w) == FactorSign::plus ? 1 : -1;
        }
    }
}

int LieAlgebra::sl2_index(int copy, Sl2Gen gen) const {
    if (copy < 0 || copy >= n_) throw input_error("LieAlgebra: copy index out of range");
    return 3 * copy + static_cast<int>(gen);
}

int LieAlgebra::tensor_index(int word, unsigned pattern) const {
    const int base = word_offsets_.at(word);
    if (base < 0) throw input_error("LieAlgebra: unknown tensor block");
    return base + static_cast<int>(pattern);
}

const SparseVec& LieAlgebra::table_entry(int i, int j) const {
    return table_.at(static_cast<std::size_t>(i) * dim() + j);
}

SparseVec LieAlgebra::bracket_basis(int i, int j) const {
    SparseVec out;
    for_each_bracket_term(i, j, [&](int k, const Rational& c) { out.push_back({k, c}); });
    return out;
}

SparseVec LieAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
    std::map<int, Rational> acc;
    for (const auto& [i, ci] : x) {
        if (i < 0 || i >= dim()) throw input_error("bracket: index out of range");
        for (const auto& [j, cj] : y) {
            if (j < 0 || j >= dim()) throw input_error("bracket: index out of range");
            const Rational f = ci * cj;
            for_each_bracket_term(i, j, [&](int k, const Rational& c) { acc[k] += f * c; });
        }
    }
    SparseVec out;
    for (const auto& [k, c] : acc)
        if (!c.is_zero()) out.push_back({k, c});
    return out;
}

namespace {

// Bracket of two basis labels under the five rules, as a sparse vector.
SparseVec rule_bracket(const CoordinateAlgebra& A, const LieAlgebra& L, const BasisLabel& a,
                       const BasisLabel& b) {
    SparseVec out;
    const auto push = [&out](int idx, const Rational& c) {
        if (!c.is_zero()) out.push_back({idx, c});
    };

    if (a.kind == BasisLabel::SL2 && b.kind == BasisLabel::SL2) {
        if (a.copy != b.copy) return out;  // distinct copies commute
        const int e = L.sl2_index(a.copy, Sl2Gen::E);
        const int f = L.sl2_index(a.copy, Sl2Gen::F);
        const int h = L.sl2_index(a.copy, Sl2Gen::H);
        if (a.gen == Sl2Gen::E && b.gen == Sl2Gen::F) push(h, Rational(1));
        if (a.gen == Sl2Gen::F && b.gen == Sl2Gen::E) push(h, Rational(-1));
        if (a.gen == Sl2Gen::H && b.gen == Sl2Gen::E) push(e, Rational(2));
        if (a.gen == Sl2Gen::E && b.gen == Sl2Gen::H) push(e, Rational(-2));
        if (a.gen == Sl2Gen::H && b.gen == Sl2Gen::F) push(f, Rational(-2));
        if (a.gen == Sl2Gen::F && b.gen == Sl2Gen::H) push(f, Rational(2));
        return out;
    }

    if (a.kind == BasisLabel::SL2 || b.kind == BasisLabel::SL2) {
        const bool flipped = a.kind == BasisLabel::TEN;
        const BasisLabel& x = flipped ? b : a;
        const BasisLabel& t = flipped ? a : b;
        const BitWord& c = L.support_set()[t.word];
        if (!c.bit(x.copy)) return out;
        const auto supp = c.support();
        const int w = static_cast<int>(supp.size());
        const int pos = static_cast<int>(std::lower_bound(supp.begin(), supp.end(), x.copy) -
                                         supp.begin());
        const FactorSign s = pattern_sign(t.pattern, pos, w);
        Rational coeff;
        unsigned pattern = t.pattern;
        switch (x.gen) {
            case Sl2Gen::E:
                if (s == FactorSign::minus) {
                    coeff = Rational(1);
                    pattern = set_pattern_bit(pattern, pos, w, FactorSign::plus);
                }
                break;
            case Sl2Gen::F:
                if (s == FactorSign::plus) {
                    coeff = Rational(1);
                    pattern = set_pattern_bit(pattern, pos, w, FactorSign::minus);
                }
                break;
            case Sl2Gen::H:
                coeff = Rational(s == FactorSign::plus ? 1 : -1);
                break;
        }
        if (flipped) coeff = -coeff;
        push(L.tensor_index(t.word, pattern), coeff);
        return out;
    }

    // Tensor against tensor.
    const BitWord& c = L.support_set()[a.word];
    const BitWord& d = L.support_set()[b.word];
    if (a.word != b.word) {
        const Rational& eps = A.e_coefficient(a.word, b.word);
        if (eps.is_zero()) return out;
        const TensorTerm term = phi(c, d, a.pattern, b.pattern);
        if (term.coeff.is_zero()) return out;
        const int target = A.word_index(c + d);
        if (target < 0)
            throw build_error("lie algebra build: product word missing from the basis");
        push(L.tensor_index(target, term.pattern), eps * term.coeff);
        return out;
    }
    const auto supp = c.support();
    for (std::size_t p = 0; p < supp.size(); ++p) {
        const Rational& m = A.mu(a.word, static_cast<int>(p));
        if (m.is_zero()) continue;
        const Sl2Term term = phi_diag(c, supp[p], a.pattern, b.pattern);
        if (term.coeff.is_zero()) continue;
        for (int g = 0; g < 3; ++g) {
            push(L.sl2_index(supp[p], static_cast<Sl2Gen>(g)),
                 m * term.coeff * term.element.coords[g]);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
}

}  // namespace

LieAlgebra LieAlgebra::build(const CoordinateAlgebra& algebra) {
    LieAlgebra L;
    L.n_ = algebra.length();
    L.support_ = algebra.support_set();
    for (int i = 0; i < L.n_; ++i) {
        for (Sl2Gen g : {Sl2Gen::E, Sl2Gen::F, Sl2Gen::H})
            L.labels_.push_back({BasisLabel::SL2, i, g, 0, 0});
    }
    for (int w = 0; w < static_cast<int>(L.support_.size()); ++w) {
        const unsigned count = 1u << L.support_[w].weight();
        for (unsigned pat = 0; pat < count; ++pat)
            L.labels_.push_back({BasisLabel::TEN, 0, Sl2Gen::E, w, pat});
    }
    L.index_labels();

    const int dim = L.dim();
    L.table_.assign(static_cast<std::size_t>(dim) * dim, SparseVec{});
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            L.table_[static_cast<std::size_t>(i) * dim + j] =
                rule_bracket(algebra, L, L.labels_[i], L.labels_[j]);
        }
    }
    // The five rules are applied to ordered pairs; antisymmetry of the result
    // is a property of the sign table, so it is asserted, not assumed.
    for (int i = 0; i < dim; ++i) {
        if (!rule_bracket(algebra, L, L.labels_[i], L.labels_[i]).empty())
            throw build_error("lie algebra build: nonzero bracket of a vector with itself");
        for (int j = i + 1; j < dim; ++j) {
            SparseVec reversed = rule_bracket(algebra, L, L.labels_[j], L.labels_[i]);
            for (auto& [k, c] : reversed) c = -c;
            if (reversed != L.table_[static_cast<std::size_t>(i) * dim + j])
                throw build_error("lie algebra build: rules are not antisymmetric at (" +
                                  L.label_string(i) + ", " + L.label_string(j) + ")");
        }
    }
    L.compute_weights();
    return L;
}

std::string LieAlgebra::label_string(int idx) const {
    const BasisLabel& l = labels_.at(idx);
    if (l.kind == BasisLabel::SL2) {
        const char* gen = l.gen == Sl2Gen::E ? "E" : l.gen == Sl2Gen::F ? "F" : "H";
        return "sl2:" + std::to_string(l.copy + 1) + ":" + gen;
    }
    const BitWord& c = support_[l.word];
    const int w = c.weight();
    std::string pat;
    for (int p = 0; p < w; ++p)
        pat += pattern_sign(l.pattern, p, w) == FactorSign::plus ? '+' : '-';
    return "ten:" + c.str() + ":" + pat;
}

std::string LieAlgebra::to_json() const {
    nlohmann::json j;
    j["schema"] = "lieforge/sc/v1";
    j["dim"] = dim();
    j["basis"] = nlohmann::json::array();
    for (int i = 0; i < dim(); ++i) j["basis"].push_back(label_string(i));
    j["brackets"] = nlohmann::json::array();
    for (int i = 0; i < dim(); ++i) {
        for (int k = i + 1; k < dim(); ++k) {
            const SparseVec& entry = table_entry(i, k);
            if (entry.empty()) continue;
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [t, c] : entry) terms.push_back({t, c.num(), c.den()});
            j["brackets"].push_back({i, k, terms});
        }
    }
    return j.dump();
}

LieAlgebra LieAlgebra::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("structure-constant file: bad JSON: ") + e.what());
    }
    try {
        if (j.at("schema").get<std::string>() != "lieforge/sc/v1")
            throw input_error("structure-constant file: unknown schema");
        LieAlgebra L;
        const int dim = j.at("dim").get<int>();
        const auto& basis = j.at("basis");
        if (static_cast<int>(basis.size()) != dim)
            throw input_error("structure-constant file: dim does not match basis");

        int max_copy = -1;
        std::map<std::uint64_t, int> word_of;
        for (const auto& entry : basis) {
            const std::string s = entry.get<std::string>();
            BasisLabel l{};
            if (s.rfind("sl2:", 0) == 0) {
                const auto colon = s.find(':', 4);
                if (colon == std::string::npos)
                    throw input_error("structure-constant file: bad label " + s);
                l.kind = BasisLabel::SL2;
                l.copy = std::stoi(s.substr(4, colon - 4)) - 1;
                const std::string gen = s.substr(colon + 1);
                if (gen == "E") l.gen = Sl2Gen::E;
                else if (gen == "F") l.gen = Sl2Gen::F;
                else if (gen == "H") l.gen = Sl2Gen::H;
                else throw input_error("structure-constant file: bad generator in " + s);
                max_copy = std::max(max_copy, l.copy);
            } else if (s.rfind("ten:", 0) == 0) {
                const auto colon = s.find(':', 4);
                if (colon == std::string::npos)
                    throw input_error("structure-constant file: bad label " + s);
                const BitWord word = BitWord::parse(s.substr(4, colon - 4));
                const std::string pat = s.substr(colon + 1);
                if (static_cast<int>(pat.size()) != word.weight())
                    throw input_error("structure-constant file: pattern size mismatch in " + s);
                l.kind = BasisLabel::TEN;
                auto it = word_of.find(word.mask());
                if (it == word_of.end()) {
                    word_of.emplace(word.mask(), static_cast<int>(L.support_.size()));
                    l.word = static_cast<int>(L.support_.size());
                    L.support_.push_back(word);
                } else {
                    l.word = it->second;
                }
                l.pattern = 0;
                for (int p = 0; p < static_cast<int>(pat.size()); ++p) {
                    if (pat[p] == '-')
                        l.pattern = set_pattern_bit(l.pattern, p, word.weight(),
                                                    FactorSign::minus);
                    else if (pat[p] != '+')
                        throw input_error("structure-constant file: bad pattern in " + s);
                }
            } else {
                throw input_error("structure-constant file: bad label " + s);
            }
            L.labels_.push_back(l);
        }
        L.n_ = max_copy + 1;
        for (const auto& w : L.support_) {
            if (w.length() != L.n_)
                throw input_error("structure-constant file: word length != copy count");
        }

        L.table_.assign(static_cast<std::size_t>(dim) * dim, SparseVec{});
        std::set<std::pair<int, int>> seen_pairs;
        for (const auto& entry : j.at("brackets")) {
            const int a = entry.at(0).get<int>();
            const int b = entry.at(1).get<int>();
            if (a < 0 || b < 0 || a >= dim || b >= dim || a >= b)
                throw input_error("structure-constant file: bad bracket indices");
            if (!seen_pairs.insert({a, b}).second)
                throw input_error("structure-constant file: duplicate bracket entry");
            SparseVec v;
            for (const auto& term : entry.at(2)) {
                const int k = term.at(0).get<int>();
                if (k < 0 || k >= dim)
                    throw input_error("structure-constant file: bad term index");
                v.push_back({k, Rational(term.at(1).get<std::int64_t>(),
                                         term.at(2).get<std::int64_t>())});
            }
            L.table_[static_cast<std::size_t>(a) * dim + b] = std::move(v);
        }
        L.index_labels();
        L.compute_weights();
        return L;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("structure-constant file: ") + e.what());
    }
}

LieAlgebra build_lie_algebra(const CoordinateAlgebra& algebra) {
    return LieAlgebra::build(algebra);
}

LieAlgebra build_exceptional(AlgebraKind kind) {
    const BuiltinCode code = kind == AlgebraKind::E7 ? BuiltinCode::simplex7
                           : kind == AlgebraKind::E8 ? BuiltinCode::exthamming8
                                                     : BuiltinCode::even4;
    return LieAlgebra::build(
        CoordinateAlgebra::build(builtin(code), sign_table_for(kind), kind));
}

}  // namespace lieforge
