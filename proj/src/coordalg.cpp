#include "lieforge/coordalg.hpp"

#include <algorithm>
#include <map>

#include "lieforge/errors.hpp"
#include "json.hpp"

namespace lieforge {

CoordinateAlgebra CoordinateAlgebra::build(const BinaryCode& code, const SignTable& signs,
                                           AlgebraKind kind) {
    if (signs.algebra() != kind)
        throw input_error("coordinate algebra: sign table does not match requested kind");
    const BuiltinCode expected = kind == AlgebraKind::E7 ? BuiltinCode::simplex7
                               : kind == AlgebraKind::E8 ? BuiltinCode::exthamming8
                                                         : BuiltinCode::even4;
    if (code != builtin(expected))
        throw input_error("coordinate algebra: code does not match " +
                          builtin_code_name(expected));

    CoordinateAlgebra alg(code);
    const BitWord ones = BitWord::ones(alg.n_);
    for (const auto& w : code.codewords()) {
        if (w.is_zero()) continue;
        if (kind == AlgebraKind::E8 && w == ones) continue;
        alg.support_.push_back(w);
    }

    const int m = static_cast<int>(alg.support_.size());
    alg.e_products_.assign(m, std::vector<Rational>(m));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            const BitWord c = alg.support_[a], d = alg.support_[b];
            if (!signs.defined(c, d)) continue;  // zero by rule (sum outside S)
            alg.e_products_[a][b] = Rational(signs.value(c, d));
        }
    }
    for (int a = 0; a < m; ++a) {
        const BitWord c = alg.support_[a];
        alg.mu_.emplace_back(c.weight(), Rational(signs.diagonal(c)));
    }
    return alg;
}

CoordinateAlgebra CoordinateAlgebra::from_parts(int n, std::vector<BitWord> support_set,
                                                std::vector<std::vector<Rational>> e_products,
                                                std::vector<std::vector<Rational>> mu) {
    const std::size_t m = support_set.size();
    if (e_products.size() != m || mu.size() != m)
        throw input_error("coordinate algebra: table sizes do not match support set");
    for (std::size_t a = 0; a < m; ++a) {
        if (e_products[a].size() != m)
            throw input_error("coordinate algebra: e-product row has wrong size");
        if (mu[a].size() != static_cast<std::size_t>(support_set[a].weight()))
            throw input_error("coordinate algebra: mu row does not match support weight");
        if (support_set[a].length() != n)
            throw input_error("coordinate algebra: support word has wrong length");
    }
    CoordinateAlgebra alg(BinaryCode::from_generator(support_set, n));
    alg.n_ = n;
    alg.support_ = std::move(support_set);
    alg.e_products_ = std::move(e_products);
    alg.mu_ = std::move(mu);
    return alg;
}

int CoordinateAlgebra::word_index(const BitWord& c) const {
    for (int a = 0; a < static_cast<int>(support_.size()); ++a)
        if (support_[a] == c) return a;
    return -1;
}

AlgebraLabel CoordinateAlgebra::label_at(int idx) const {
    if (idx < 0 || idx >= label_count())
        throw input_error("coordinate algebra: label index out of range");
    if (idx < n_) return {AlgebraLabel::T, idx};
    return {AlgebraLabel::E, idx - n_};
}

int CoordinateAlgebra::label_index(const AlgebraLabel& l) const {
    if (l.kind == AlgebraLabel::T) {
        if (l.index < 0 || l.index >= n_) throw input_error("coordinate algebra: foreign t label");
        return l.index;
    }
    if (l.index < 0 || l.index >= static_cast<int>(support_.size()))
        throw input_error("coordinate algebra: foreign e label");
    return n_ + l.index;
}

std::string CoordinateAlgebra::label_string(const AlgebraLabel& l) const {
    if (l.kind == AlgebraLabel::T) return "t:" + std::to_string(l.index + 1);
    return "e:" + support_[l.index].str();
}

const Rational& CoordinateAlgebra::e_coefficient(int a, int b) const {
    return e_products_.at(a).at(b);
}

const Rational& CoordinateAlgebra::mu(int word, int support_pos) const {
    return mu_.at(word).at(support_pos);
}

AlgebraCombo CoordinateAlgebra::basis_product(const AlgebraLabel& x, const AlgebraLabel& y) const {
    label_index(x);
    label_index(y);
    AlgebraCombo out;
    if (x.kind == AlgebraLabel::T && y.kind == AlgebraLabel::T) {
        if (x.index == y.index) out.push_back({x, Rational(1)});
        return out;
    }
    if (x.kind == AlgebraLabel::T || y.kind == AlgebraLabel::T) {
        const int t = x.kind == AlgebraLabel::T ? x.index : y.index;
        const AlgebraLabel e = x.kind == AlgebraLabel::E ? x : y;
        if (support_[e.index].bit(t)) out.push_back({e, Rational(1)});
        return out;
    }
    if (x.index == y.index) {
        const auto supp = support_[x.index].support();
        for (std::size_t p = 0; p < supp.size(); ++p) {
            const Rational& m = mu_[x.index][p];
            if (!m.is_zero()) out.push_back({{AlgebraLabel::T, supp[p]}, m});
        }
        return out;
    }
    const Rational& coeff = e_products_[x.index][y.index];
    if (!coeff.is_zero()) {
        const BitWord sum = support_[x.index] + support_[y.index];
        const int target = word_index(sum);
        if (target < 0)
            throw build_error("coordinate algebra: nonzero product lands outside basis");
        out.push_back({{AlgebraLabel::E, target}, coeff});
    }
    return out;
}

AlgebraCombo CoordinateAlgebra::multiply(const AlgebraCombo& x, const AlgebraCombo& y) const {
    std::map<AlgebraLabel, Rational> acc;
    for (const auto& [lx, cx] : x) {
        for (const auto& [ly, cy] : y) {
            for (const auto& [lz, cz] : basis_product(lx, ly)) acc[lz] += cx * cy * cz;
        }
    }
    AlgebraCombo out;
    for (const auto& [l, c] : acc)
        if (!c.is_zero()) out.push_back({l, c});
    return out;
}

std::string CoordinateAlgebra::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["S"] = nlohmann::json::array();
    for (const auto& w : support_) j["S"].push_back(w.str());
    j["products"] = nlohmann::json::array();
    for (int a = 0; a < label_count(); ++a) {
        for (int b = 0; b < label_count(); ++b) {
            const AlgebraLabel la = label_at(a), lb = label_at(b);
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [l, c] : basis_product(la, lb))
                terms.push_back({label_string(l), c.num(), c.den()});
            j["products"].push_back({label_string(la), label_string(lb), terms});
        }
    }
    return j.dump();
}

namespace {

bool supported_only_on(const AlgebraCombo& combo, const AlgebraLabel& l) {
    return std::all_of(combo.begin(), combo.end(),
                       [&](const auto& term) { return term.first == l; });
}

}  // namespace

AxiomReport axiom_report(const CoordinateAlgebra& algebra) {
    AxiomReport report;
    const int n = algebra.length();
    const auto& support = algebra.support_set();
    const int m = static_cast<int>(support.size());
    const BitWord ones = BitWord::ones(n);

    // Quantification set of the code-algebra clauses: codewords outside {0,1}.
    std::vector<int> core;
    for (int a = 0; a < m; ++a) {
        if (support[a] == ones)
            report.basis_deviations.push_back("basis includes e^1");
        else
            core.push_back(a);
    }

    report.idempotents = true;
    for (int i = 0; i < n && report.idempotents; ++i) {
        for (int j = 0; j < n && report.idempotents; ++j) {
            const auto prod = algebra.basis_product({AlgebraLabel::T, i}, {AlgebraLabel::T, j});
            const AlgebraCombo want =
                i == j ? AlgebraCombo{{{AlgebraLabel::T, i}, Rational(1)}} : AlgebraCombo{};
            report.idempotents = prod == want;
        }
    }

    report.t_action = true;
    for (int i = 0; i < n && report.t_action; ++i) {
        for (int a = 0; a < m && report.t_action; ++a) {
            const AlgebraLabel e{AlgebraLabel::E, a};
            report.t_action =
                supported_only_on(algebra.basis_product({AlgebraLabel::T, i}, e), e) &&
                supported_only_on(algebra.basis_product(e, {AlgebraLabel::T, i}), e);
        }
    }

    report.e_products = true;
    for (int a : core) {
        for (int b : core) {
            if (a == b || support[a] + support[b] == ones) continue;
            const BitWord sum = support[a] + support[b];
            const auto prod =
                algebra.basis_product({AlgebraLabel::E, a}, {AlgebraLabel::E, b});
            const int target = algebra.word_index(sum);
            const bool ok =
                prod.empty() ||
                (target >= 0 && supported_only_on(prod, {AlgebraLabel::E, target}));
            if (!ok) report.e_products = false;
        }
    }

    report.e_squares = true;
    for (int a : core) {
        const auto prod = algebra.basis_product({AlgebraLabel::E, a}, {AlgebraLabel::E, a});
        for (const auto& [l, c] : prod) {
            if (l.kind != AlgebraLabel::T || !support[a].bit(l.index)) report.e_squares = false;
        }
    }

    report.complementary = true;
    for (int a : core) {
        const int b = algebra.word_index(support[a] + ones);
        if (b < 0) continue;
        if (!algebra.basis_product({AlgebraLabel::E, a}, {AlgebraLabel::E, b}).empty())
            report.complementary = false;
    }

    report.commutative = true;
    for (int x = 0; x < algebra.label_count() && report.commutative; ++x) {
        for (int y = 0; y < algebra.label_count() && report.commutative; ++y) {
            report.commutative = algebra.basis_product(algebra.label_at(x), algebra.label_at(y)) ==
                                 algebra.basis_product(algebra.label_at(y), algebra.label_at(x));
        }
    }
    return report;
}

}  // namespace lieforge
