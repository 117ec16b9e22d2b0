#include "lieforge/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <thread>

#include "lieforge/exact_linalg.hpp"
#include "json.hpp"

namespace lieforge {

int configured_thread_count() {
    if (const char* env = std::getenv("LIEFORGE_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

// Dense scratch accumulator reused across triples.
struct Accumulator {
    std::vector<Rational> values;
    std::vector<int> touched;

    explicit Accumulator(int dim) : values(dim) {}

    void add(int idx, const Rational& c) {
        if (values[idx].is_zero() && !c.is_zero()) touched.push_back(idx);
        values[idx] += c;
    }
    void reset() {
        for (int idx : touched) values[idx] = Rational(0);
        touched.clear();
    }
};

// acc += [x_a, [x_b, x_c]]
void add_double_bracket(const LieAlgebra& L, int a, int b, int c, Accumulator& acc) {
    L.for_each_bracket_term(b, c, [&](int t, const Rational& co) {
        L.for_each_bracket_term(a, t, [&](int u, const Rational& cu) {
            acc.add(u, co * cu);
        });
    });
}

std::optional<JacobiWitness> jacobi_scan_range(const LieAlgebra& L, int i_begin, int i_end) {
    const int dim = L.dim();
    Accumulator acc(dim);
    for (int i = i_begin; i < i_end; ++i) {
        for (int j = i; j < dim; ++j) {
            for (int k = j; k < dim; ++k) {
                acc.reset();
                add_double_bracket(L, i, j, k, acc);
                add_double_bracket(L, j, k, i, acc);
                add_double_bracket(L, k, i, j, acc);
                SparseVec residual;
                for (int idx : acc.touched) {
                    if (!acc.values[idx].is_zero()) residual.push_back({idx, acc.values[idx]});
                }
                if (!residual.empty()) {
                    std::sort(residual.begin(), residual.end(),
                              [](const auto& l, const auto& r) { return l.first < r.first; });
                    return JacobiWitness{i, j, k, std::move(residual)};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<JacobiWitness> check_jacobi(const LieAlgebra& algebra, int threads) {
    const int dim = algebra.dim();
    if (threads <= 0) threads = configured_thread_count();
    threads = std::min(threads, dim);
    if (threads <= 1) return jacobi_scan_range(algebra, 0, dim);

    // Partition the outer index; workers report their local minimum witness
    // and the reduction keeps the lexicographically smallest, so the result
    // does not depend on the schedule.
    std::vector<std::optional<JacobiWitness>> results(threads);
    std::vector<std::thread> pool;
    // Front chunks are the widest triangles; interleave indices instead of
    // slicing contiguous ranges to balance the load.
    std::vector<std::vector<int>> owned(threads);
    for (int i = 0; i < dim; ++i) owned[i % threads].push_back(i);
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
            std::optional<JacobiWitness> best;
            for (int i : owned[w]) {
                auto found = jacobi_scan_range(algebra, i, i + 1);
                if (found) { best = std::move(found); break; }
            }
            results[w] = std::move(best);
        });
    }
    for (auto& t : pool) t.join();
    std::optional<JacobiWitness> best;
    for (auto& r : results) {
        if (!r) continue;
        if (!best || std::tie(r->i, r->j, r->k) < std::tie(best->i, best->j, best->k))
            best = std::move(r);
    }
    return best;
}

KillingResult killing_form(const LieAlgebra& algebra) {
    const int dim = algebra.dim();
    KillingResult result;
    result.matrix.assign(dim, std::vector<Rational>(dim));
    for (int a = 0; a < dim; ++a) {
        for (int b = a; b < dim; ++b) {
            Rational trace;
            for (int c = 0; c < dim; ++c) {
                algebra.for_each_bracket_term(b, c, [&](int t, const Rational& co) {
                    algebra.for_each_bracket_term(a, t, [&](int u, const Rational& cu) {
                        if (u == c) trace += co * cu;
                    });
                });
            }
            result.matrix[a][b] = trace;
            result.matrix[b][a] = trace;
        }
    }

    std::int64_t lcm = 1;
    for (const auto& row : result.matrix)
        for (const auto& v : row) lcm = std::lcm(lcm, v.den());
    IntMatrix scaled(dim, std::vector<BigInt>(dim));
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            scaled[r][c] = BigInt(result.matrix[r][c].num()) *
                           (lcm / result.matrix[r][c].den());
    result.nondegenerate = integer_rank(std::move(scaled)) == dim;
    return result;
}

int cartan_centralizer_dimension(const LieAlgebra& algebra) {
    const int dim = algebra.dim();
    const auto& cartan = algebra.cartan_indices();
    // Stack the maps x -> [h_i (x) t_i, x]; the centralizer is the kernel.
    RatMatrix rows;
    for (int h : cartan) {
        RatMatrix block(dim, std::vector<Rational>(dim));
        for (int b = 0; b < dim; ++b) {
            algebra.for_each_bracket_term(h, b, [&](int r, const Rational& c) {
                block[r][b] += c;
            });
        }
        for (auto& row : block) rows.push_back(std::move(row));
    }
    const int rank = static_cast<int>(rational_rref(rows).size());
    return dim - rank;
}

namespace {

// Eigenvalue of ad(h_i) on basis vector b; throws when b is not an
// eigenvector.
int eigenvalue_at(const LieAlgebra& L, int h, int b) {
    Rational lambda;
    bool diagonal = true;
    L.for_each_bracket_term(h, b, [&](int r, const Rational& c) {
        if (r == b) lambda = c;
        else if (!c.is_zero()) diagonal = false;
    });
    if (!diagonal)
        throw build_error("basis vector " + L.label_string(b) +
                          " is not an eigenvector of ad(" + L.label_string(h) + ")");
    if (!lambda.is_integer())
        throw build_error("non-integral ad(h) eigenvalue at " + L.label_string(b));
    return static_cast<int>(lambda.as_integer());
}

}  // namespace

SpectrumReport ad_h_spectrum(const LieAlgebra& algebra) {
    const auto& cartan = algebra.cartan_indices();
    SpectrumReport report;
    report.short_structure = true;
    for (int h : cartan) {
        std::map<int, int> spectrum;
        for (int b = 0; b < algebra.dim(); ++b) ++spectrum[eigenvalue_at(algebra, h, b)];
        for (const auto& [value, count] : spectrum) {
            const bool ok = (value == 2 || value == -2) ? count == 1
                          : (value == 0 || value == 1 || value == -1);
            if (!ok) report.short_structure = false;
        }
        if (!spectrum.count(2) || !spectrum.count(-2)) report.short_structure = false;
        report.spectra.push_back(std::move(spectrum));
    }
    return report;
}

RootExtraction extract_roots(const LieAlgebra& algebra) {
    const int n = algebra.copies();
    const auto& cartan = algebra.cartan_indices();
    if (static_cast<int>(cartan.size()) != n)
        throw build_error("extract_roots: expected one Cartan generator per copy");

    std::set<int> cartan_set(cartan.begin(), cartan.end());
    RootExtraction out;
    std::multiset<std::vector<int>> seen;
    for (int b = 0; b < algebra.dim(); ++b) {
        std::vector<int> weight(n);
        for (int i = 0; i < n; ++i) weight[i] = eigenvalue_at(algebra, cartan[i], b);
        if (cartan_set.count(b)) {
            if (weight != std::vector<int>(n, 0))
                throw build_error("extract_roots: Cartan vector with nonzero weight");
            continue;
        }
        if (weight == std::vector<int>(n, 0))
            throw build_error("extract_roots: zero weight outside the Cartan subalgebra");
        seen.insert(weight);
        out.roots.push_back(RootVector{std::move(weight)});
    }

    // The root set must be exactly {+-2e_i} plus one vector per sign pattern
    // of each support word, each with a one-dimensional root space.
    std::multiset<std::vector<int>> expected;
    for (int i = 0; i < n; ++i) {
        for (int sign : {+2, -2}) {
            std::vector<int> v(n, 0);
            v[i] = sign;
            expected.insert(std::move(v));
        }
    }
    for (const auto& word : algebra.support_set()) {
        const auto supp = word.support();
        const int w = static_cast<int>(supp.size());
        for (unsigned pat = 0; pat < (1u << w); ++pat) {
            std::vector<int> v(n, 0);
            for (int p = 0; p < w; ++p)
                v[supp[p]] = ((pat >> (w - 1 - p)) & 1) ? -1 : +1;
            expected.insert(std::move(v));
        }
    }
    if (seen != expected)
        throw build_error("extract_roots: root set differs from the isotypic prediction");

    out.report = identify_root_system(out.roots);
    return out;
}

bool VerificationReport::all_passed() const {
    if (jacobi && !*jacobi) return false;
    if (killing_nondegenerate && !*killing_nondegenerate) return false;
    if (cartan_self_centralizing && !*cartan_self_centralizing) return false;
    if (spectrum && !spectrum->short_structure) return false;
    if (root_type && root_type->empty()) return false;
    return true;
}

VerificationReport run_checks(const LieAlgebra& algebra,
                              const std::vector<std::string>& checks, int threads) {
    VerificationReport report;
    report.dimension = algebra.dim();
    for (const auto& check : checks) {
        if (check == "jacobi") {
            auto witness = check_jacobi(algebra, threads);
            report.jacobi = !witness.has_value();
            if (witness) report.jacobi_witness = std::move(witness);
        } else if (check == "killing") {
            report.killing_nondegenerate = killing_form(algebra).nondegenerate;
        } else if (check == "centralizer") {
            const int dim = cartan_centralizer_dimension(algebra);
            report.cartan_centralizer = dim;
            report.cartan_self_centralizing = dim == algebra.copies();
        } else if (check == "spectrum") {
            report.spectrum = ad_h_spectrum(algebra);
        } else if (check == "roots") {
            auto extraction = extract_roots(algebra);
            report.root_type = extraction.report.dynkin_type;
            report.root_count = extraction.roots.size();
            report.root_report = std::move(extraction.report);
        } else {
            throw input_error("unknown check '" + check + "'");
        }
    }
    return report;
}

std::string verification_report_json(const VerificationReport& report) {
    nlohmann::json j;
    j["dimension"] = report.dimension;
    if (report.jacobi) {
        j["jacobi"] = *report.jacobi ? "pass" : "fail";
        if (report.jacobi_witness) {
            const auto& w = *report.jacobi_witness;
            nlohmann::json residual = nlohmann::json::array();
            for (const auto& [k, c] : w.residual) residual.push_back({k, c.num(), c.den()});
            j["jacobi_witness"] = {{"triple", {w.i, w.j, w.k}}, {"residual", residual}};
        }
    }
    if (report.killing_nondegenerate) j["killing_nondegenerate"] = *report.killing_nondegenerate;
    if (report.cartan_centralizer) j["cartan_centralizer"] = *report.cartan_centralizer;
    if (report.cartan_self_centralizing)
        j["cartan_self_centralizing"] = *report.cartan_self_centralizing;
    if (report.spectrum) {
        j["spectrum_short_structure"] = report.spectrum->short_structure;
        nlohmann::json spectra = nlohmann::json::array();
        for (const auto& s : report.spectrum->spectra) {
            nlohmann::json entry = nlohmann::json::array();
            for (const auto& [value, count] : s) entry.push_back({value, count});
            spectra.push_back(entry);
        }
        j["spectra"] = spectra;
    }
    if (report.root_type) j["root_type"] = *report.root_type;
    if (report.root_count) j["root_count"] = *report.root_count;
    if (report.root_report) {
        j["root_report"] = nlohmann::json::parse(root_system_report_json(*report.root_report));
        j["root_report"]["long_count"] = report.root_report->long_roots.size();
        j["root_report"]["short_count"] = report.root_report->short_roots.size();
    }
    return j.dump();
}

}  // namespace lieforge
