#include "lieforge/lattices.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "lieforge/exact_linalg.hpp"
#include "json.hpp"

namespace lieforge {

long long RootVector::dot(const RootVector& o) const {
    if (coords.size() != o.coords.size())
        throw input_error("RootVector: dimension mismatch");
    long long acc = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
        acc += static_cast<long long>(coords[i]) * o.coords[i];
    return acc;
}

bool RootVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

RootVector RootVector::negated() const {
    RootVector r = *this;
    for (int& c : r.coords) c = -c;
    return r;
}

std::vector<RootVector> roots_of_code_lattice(const BinaryCode& code) {
    const int n = code.length();
    std::vector<RootVector> out;
    for (int i = 0; i < n; ++i) {
        for (int sign : {+2, -2}) {
            RootVector v{std::vector<int>(n, 0)};
            v.coords[i] = sign;
            out.push_back(v);
        }
    }
    for (const auto& c : code.codewords()) {
        if (c.weight() != 4) continue;
        const auto supp = c.support();
        for (int pat = 0; pat < 16; ++pat) {
            RootVector v{std::vector<int>(n, 0)};
            for (int j = 0; j < 4; ++j)
                v.coords[supp[j]] = ((pat >> (3 - j)) & 1) ? -1 : +1;
            out.push_back(v);
        }
    }
    return out;
}

std::vector<RootVector> orthogonal_root_frame(const std::vector<RootVector>& roots) {
    if (roots.empty()) throw input_error("orthogonal_root_frame: no roots");
    const int n = roots.front().size();
    std::vector<RootVector> frame;
    for (int i = 0; i < n; ++i) {
        RootVector want{std::vector<int>(n, 0)};
        want.coords[i] = 2;
        if (std::find(roots.begin(), roots.end(), want) == roots.end())
            throw input_error("orthogonal_root_frame: missing root 2e_" + std::to_string(i + 1));
        frame.push_back(want);
    }
    return frame;
}

RootVector reflect(const RootVector& root, const RootVector& v) {
    const long long rr = root.dot(root);
    if (rr == 0) throw input_error("reflect: zero root");
    // v - (2 (v|root)/(root|root)) root, with (.|.) = dot/2.
    const Rational coeff = Rational(2 * v.dot(root), rr);
    RootVector out = v;
    for (int i = 0; i < v.size(); ++i) {
        const Rational c = Rational(v.coords[i]) - coeff * Rational(root.coords[i]);
        out.coords[i] = static_cast<int>(c.as_integer());
    }
    return out;
}

bool minus_one_in_weyl(const std::vector<RootVector>& frame) {
    if (frame.empty()) throw input_error("minus_one_in_weyl: empty frame");
    const int n = frame.front().size();
    if (static_cast<int>(frame.size()) != n)
        throw input_error("minus_one_in_weyl: frame must have n vectors");
    for (std::size_t i = 0; i < frame.size(); ++i) {
        for (std::size_t j = i + 1; j < frame.size(); ++j) {
            if (frame[i].dot(frame[j]) != 0)
                throw input_error("minus_one_in_weyl: frame not orthogonal");
        }
    }
    {
        RatMatrix m(n, std::vector<Rational>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m[r][c] = Rational(frame[r].coords[c]);
        if (static_cast<int>(rational_rref(m).size()) != n)
            throw input_error("minus_one_in_weyl: frame does not span");
    }
    // Apply the n reflections to each standard basis vector.
    RatMatrix image(n, std::vector<Rational>(n));
    for (int j = 0; j < n; ++j) image[j][j] = Rational(1);
    for (const auto& r : frame) {
        const Rational rr(r.dot(r));
        for (int j = 0; j < n; ++j) {
            Rational vr;
            for (int i = 0; i < n; ++i) vr += image[j][i] * Rational(r.coords[i]);
            const Rational coeff = Rational(2) * vr / rr;
            for (int i = 0; i < n; ++i) image[j][i] -= coeff * Rational(r.coords[i]);
        }
    }
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (image[j][i] != Rational(i == j ? -1 : 0)) return false;
        }
    }
    return true;
}

bool double_dual_contained(const BinaryCode& code) {
    const int n = code.length();
    const BinaryCode dual = code.dual();
    // Generators of 2 * dual-lattice: doubled dual generator rows and 4e_i.
    std::vector<std::vector<int>> gens;
    for (const auto& row : dual.generator()) {
        std::vector<int> g(n, 0);
        for (int i = 0; i < n; ++i) g[i] = row.bit(i) ? 2 : 0;
        gens.push_back(g);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<int> g(n, 0);
        g[i] = 4;
        gens.push_back(g);
    }
    for (const auto& g : gens) {
        BitWord residue = BitWord::zero(n);
        for (int i = 0; i < n; ++i) {
            if (((g[i] % 2) + 2) % 2 == 1) residue = residue + BitWord::unit(n, i);
        }
        if (!code.contains(residue)) return false;
    }
    return true;
}

namespace {

// ---- Dynkin diagram catalog -------------------------------------------------

using CartanMatrix = std::vector<std::vector<int>>;

CartanMatrix path_matrix(int r) {
    CartanMatrix m(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) m[i][i] = 2;
    for (int i = 0; i + 1 < r; ++i) m[i][i + 1] = m[i + 1][i] = -1;
    return m;
}

struct CatalogEntry {
    std::string label;
    CartanMatrix cartan;
    long long root_count;
};

std::vector<CatalogEntry> catalog_for_rank(int r) {
    std::vector<CatalogEntry> out;
    auto add = [&](std::string label, CartanMatrix m, long long count) {
        out.push_back({std::move(label), std::move(m), count});
    };
    add("A" + std::to_string(r), path_matrix(r), static_cast<long long>(r) * (r + 1));
    if (r >= 2) {
        CartanMatrix b = path_matrix(r);
        b[r - 2][r - 1] = -2;  // last simple root short
        add("B" + std::to_string(r), std::move(b), 2LL * r * r);
    }
    if (r >= 3) {
        CartanMatrix c = path_matrix(r);
        c[r - 1][r - 2] = -2;  // last simple root long
        add("C" + std::to_string(r), std::move(c), 2LL * r * r);
    }
    if (r >= 4) {
        CartanMatrix d = path_matrix(r - 1);
        d.emplace_back(r, 0);
        for (auto& row : d) row.resize(r, 0);
        d[r - 1][r - 1] = 2;
        d[r - 1][r - 3] = d[r - 3][r - 1] = -1;  // fork at the path's end
        add("D" + std::to_string(r), std::move(d), 2LL * r * (r - 1));
    }
    if (r >= 6 && r <= 8) {
        CartanMatrix e = path_matrix(r - 1);
        e.emplace_back(r, 0);
        for (auto& row : e) row.resize(r, 0);
        e[r - 1][r - 1] = 2;
        e[r - 1][2] = e[2][r - 1] = -1;  // branch node third from the end
        const long long counts[3] = {72, 126, 240};
        add("E" + std::to_string(r), std::move(e), counts[r - 6]);
    }
    if (r == 4) {
        CartanMatrix f = path_matrix(4);
        f[1][2] = -2;
        add("F4", std::move(f), 48);
    }
    if (r == 2) {
        CartanMatrix g{{2, -1}, {-3, 2}};
        add("G2", std::move(g), 12);
    }
    return out;
}

bool cartan_isomorphic(const CartanMatrix& a, const CartanMatrix& b) {
    const int r = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != r) return false;
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < r && ok; ++i)
            for (int j = 0; j < r && ok; ++j)
                if (a[perm[i]][perm[j]] != b[i][j]) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

struct Component {
    std::vector<int> members;  // indices into the simple-root list
};

std::vector<Component> connected_components(const CartanMatrix& cartan) {
    const int r = static_cast<int>(cartan.size());
    std::vector<int> comp(r, -1);
    int ncomp = 0;
    for (int start = 0; start < r; ++start) {
        if (comp[start] >= 0) continue;
        std::vector<int> stack{start};
        comp[start] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < r; ++w) {
                if (comp[w] < 0 && cartan[v][w] != 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    std::vector<Component> out(ncomp);
    for (int i = 0; i < r; ++i) out[comp[i]].members.push_back(i);
    return out;
}

bool type_label_less(const std::string& a, const std::string& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    return std::stoi(a.substr(1)) < std::stoi(b.substr(1));
}

}  // namespace

RootSystemReport identify_root_system(const std::vector<RootVector>& roots) {
    if (roots.empty()) throw input_error("identify_root_system: no roots");
    const int n = roots.front().size();
    if (n > 18) throw input_error("identify_root_system: dimension too large");

    std::set<std::vector<int>> root_set;
    for (const auto& r : roots) {
        if (r.size() != n) throw input_error("identify_root_system: mixed dimensions");
        const long long rr = r.dot(r);
        if (rr != 2 && rr != 4)
            throw input_error("identify_root_system: root norm not in {1,2}");
        root_set.insert(r.coords);
    }
    if (root_set.size() != roots.size())
        throw input_error("identify_root_system: duplicate roots");
    for (const auto& r : roots) {
        if (!root_set.count(r.negated().coords))
            throw input_error("identify_root_system: roots not closed under negation");
    }

    // Generic functional: entries are bounded by 2, so the leading nonzero
    // coordinate decides the sign and no root evaluates to zero.
    auto functional = [n](const RootVector& v) {
        long long acc = 0, p = 1;
        for (int i = n - 1; i >= 0; --i) {
            acc += p * v.coords[i];
            p *= 5;
        }
        return acc;
    };

    std::vector<RootVector> positive;
    std::set<std::vector<int>> positive_set;
    for (const auto& r : roots) {
        if (functional(r) > 0) {
            positive.push_back(r);
            positive_set.insert(r.coords);
        }
    }
    if (positive.size() * 2 != roots.size())
        throw classification_error("identify_root_system: positive roots are not half of all roots");

    std::vector<RootVector> simple;
    for (const auto& r : positive) {
        bool decomposable = false;
        for (const auto& a : positive) {
            std::vector<int> diff(n);
            for (int i = 0; i < n; ++i) diff[i] = r.coords[i] - a.coords[i];
            if (diff == std::vector<int>(n, 0)) continue;
            if (positive_set.count(diff)) { decomposable = true; break; }
        }
        if (!decomposable) simple.push_back(r);
    }
    std::sort(simple.begin(), simple.end());

    const int rank = static_cast<int>(simple.size());
    CartanMatrix cartan(rank, std::vector<int>(rank));
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) {
            const long long num = 2 * simple[i].dot(simple[j]);
            const long long den = simple[j].dot(simple[j]);
            if (num % den != 0)
                throw classification_error("identify_root_system: non-integral Cartan entry");
            const long long entry = num / den;
            if (i == j ? entry != 2 : (entry > 0 || entry < -3))
                throw classification_error("identify_root_system: Cartan entry out of range");
            cartan[i][j] = static_cast<int>(entry);
        }
    }

    std::vector<std::string> labels;
    long long expected_roots = 0;
    for (const auto& comp : connected_components(cartan)) {
        const int r = static_cast<int>(comp.members.size());
        CartanMatrix sub(r, std::vector<int>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                sub[i][j] = cartan[comp.members[i]][comp.members[j]];
        bool found = false;
        for (const auto& entry : catalog_for_rank(r)) {
            if (cartan_isomorphic(entry.cartan, sub)) {
                labels.push_back(entry.label);
                expected_roots += entry.root_count;
                found = true;
                break;
            }
        }
        if (!found)
            throw classification_error("identify_root_system: component of rank " +
                                       std::to_string(r) + " matches no catalog diagram");
    }
    if (expected_roots != static_cast<long long>(roots.size()))
        throw classification_error("identify_root_system: root count " +
                                   std::to_string(roots.size()) + " does not match type total " +
                                   std::to_string(expected_roots));

    std::sort(labels.begin(), labels.end(), type_label_less);
    std::string type;
    for (const auto& l : labels) {
        if (!type.empty()) type += '+';
        type += l;
    }

    RootSystemReport report;
    report.roots = roots;
    report.simple_roots = simple;
    report.cartan_matrix = cartan;
    report.dynkin_type = type;
    long long max_norm = 0;
    for (const auto& r : roots) max_norm = std::max(max_norm, r.dot(r));
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].dot(roots[i]) == max_norm)
            report.long_roots.push_back(static_cast<int>(i));
        else
            report.short_roots.push_back(static_cast<int>(i));
    }
    return report;
}

std::string canonical_dynkin_type(const std::string& type) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : type + "+") {
        if (ch == '+') {
            if (!cur.empty()) parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    std::vector<std::string> out;
    for (const auto& p : parts) {
        if (p == "C2") out.push_back("B2");
        else if (p == "B1" || p == "C1") out.push_back("A1");
        else if (p == "D2") { out.push_back("A1"); out.push_back("A1"); }
        else if (p == "D3") out.push_back("A3");
        else out.push_back(p);
    }
    std::sort(out.begin(), out.end(), type_label_less);
    std::string joined;
    for (const auto& l : out) {
        if (!joined.empty()) joined += '+';
        joined += l;
    }
    return joined;
}

bool same_dynkin_type(const std::string& a, const std::string& b) {
    return canonical_dynkin_type(a) == canonical_dynkin_type(b);
}

std::string root_system_report_json(const RootSystemReport& report) {
    nlohmann::json j;
    j["type"] = report.dynkin_type;
    j["simple_roots"] = nlohmann::json::array();
    for (const auto& r : report.simple_roots) j["simple_roots"].push_back(r.coords);
    j["cartan_matrix"] = report.cartan_matrix;
    return j.dump();
}

}  // namespace lieforge
