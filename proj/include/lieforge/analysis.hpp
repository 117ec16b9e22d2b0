#ifndef LIEFORGE_ANALYSIS_HPP
#define LIEFORGE_ANALYSIS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieforge/exact_linalg.hpp"
#include "lieforge/lattices.hpp"
#include "lieforge/liealg.hpp"

namespace lieforge {

struct JacobiWitness {
    int i, j, k;
    SparseVec residual;  // [x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]]
};

// Exhaustive Jacobi scan over basis triples i <= j <= k. Returns the
// lexicographically smallest failing triple, or nothing when the identity
// holds. threads = 0 picks the LIEFORGE_THREADS setting (auto when unset).
std::optional<JacobiWitness> check_jacobi(const LieAlgebra& algebra, int threads = 0);

struct KillingResult {
    RatMatrix matrix;
    bool nondegenerate;
};

// kappa(x,y) = trace(ad x . ad y); nondegeneracy by exact fraction-free
// elimination on the cleared-denominator matrix.
KillingResult killing_form(const LieAlgebra& algebra);

// Dimension of {x : [h_i (x) t_i, x] = 0 for all i}, solved exactly.
int cartan_centralizer_dimension(const LieAlgebra& algebra);

struct SpectrumReport {
    std::vector<std::map<int, int>> spectra;  // per copy: eigenvalue -> multiplicity
    bool short_structure;  // +-2 with multiplicity one, all others in {0,+-1}
};

// Eigenvalue multisets of every ad(h_i); throws build_error when some basis
// vector fails to be a simultaneous eigenvector.
SpectrumReport ad_h_spectrum(const LieAlgebra& algebra);

struct RootExtraction {
    std::vector<RootVector> roots;  // eigenvalue tuples of non-Cartan vectors
    RootSystemReport report;
};

// Reads roots off the ad(h_i) eigenvalues, checks they form exactly the set
// {+-2e_i} united with the sign patterns over each support word, and hands
// the result to the root-system classifier.
RootExtraction extract_roots(const LieAlgebra& algebra);

struct VerificationReport {
    int dimension = 0;
    std::optional<bool> jacobi;
    std::optional<JacobiWitness> jacobi_witness;
    std::optional<bool> killing_nondegenerate;
    std::optional<int> cartan_centralizer;
    std::optional<bool> cartan_self_centralizing;
    std::optional<SpectrumReport> spectrum;
    std::optional<RootSystemReport> root_report;
    std::optional<std::string> root_type;
    std::optional<std::size_t> root_count;

    bool all_passed() const;
};

// checks: subset of {"jacobi","killing","centralizer","roots","spectrum"}.
VerificationReport run_checks(const LieAlgebra& algebra,
                              const std::vector<std::string>& checks, int threads = 0);

std::string verification_report_json(const VerificationReport& report);

// Worker count from LIEFORGE_THREADS (0 or unset = hardware concurrency).
int configured_thread_count();

}  // namespace lieforge

#endif
