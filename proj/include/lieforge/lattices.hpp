#ifndef LIEFORGE_LATTICES_HPP
#define LIEFORGE_LATTICES_HPP

#include <string>
#include <vector>

#include "lieforge/codes.hpp"
#include "lieforge/rational.hpp"

namespace lieforge {

// Integer vector in doubled coordinates: the lattice vector is coords/sqrt(2),
// so the pairing is inner(u,v) = dot(u,v)/2 and a root has dot = 4.
struct RootVector {
    std::vector<int> coords;

    int size() const { return static_cast<int>(coords.size()); }
    long long dot(const RootVector& o) const;
    Rational inner(const RootVector& o) const { return Rational(dot(o), 2); }
    bool is_zero() const;
    RootVector negated() const;

    friend bool operator==(const RootVector& a, const RootVector& b) {
        return a.coords == b.coords;
    }
    friend bool operator<(const RootVector& a, const RootVector& b) {
        return a.coords < b.coords;
    }
};

struct RootSystemReport {
    std::vector<RootVector> roots;
    std::vector<RootVector> simple_roots;
    std::vector<std::vector<int>> cartan_matrix;  // entry [i][j] = <a_i, a_j>
    std::string dynkin_type;                      // e.g. "E7", "B2", "A1+A1"
    std::vector<int> long_roots;                  // indices into roots
    std::vector<int> short_roots;                 // empty when single-length
};

// All v in Z^n with v mod 2 in C and dot(v,v) = 4: the vectors +-2e_i plus
// one sign pattern per weight-4 codeword support. Deterministic order.
std::vector<RootVector> roots_of_code_lattice(const BinaryCode& code);

// The n pairwise orthogonal roots {2e_1, ..., 2e_n}; input error if some
// +-2e_i is missing from the given root list.
std::vector<RootVector> orthogonal_root_frame(const std::vector<RootVector>& roots);

// Reflection of v in the hyperplane orthogonal to root.
RootVector reflect(const RootVector& root, const RootVector& v);

// Composes the reflections of a pairwise-orthogonal spanning frame and
// reports whether the composite is minus the identity.
bool minus_one_in_weyl(const std::vector<RootVector>& frame);

// Tests 2*dual_lattice(code) inside lattice(code) by generator membership.
bool double_dual_contained(const BinaryCode& code);

// Positive roots via the functional l(v) = sum 5^(n-1-i) v_i, simple roots,
// Cartan matrix, and Dynkin type by isomorphism against the standard catalog.
// Requires every root to satisfy inner(r,r) in {1,2}.
RootSystemReport identify_root_system(const std::vector<RootVector>& roots);

// Dynkin labels up to the standard coincidences (C2=B2, B1=C1=A1, D2=A1+A1,
// D3=A3); component sums are order-insensitive.
std::string canonical_dynkin_type(const std::string& type);
bool same_dynkin_type(const std::string& a, const std::string& b);

std::string root_system_report_json(const RootSystemReport& report);

}  // namespace lieforge

#endif
