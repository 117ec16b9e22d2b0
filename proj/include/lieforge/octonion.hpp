#ifndef LIEFORGE_OCTONION_HPP
#define LIEFORGE_OCTONION_HPP

#include <array>
#include <cstdint>
#include <string>

#include "lieforge/rational.hpp"

namespace lieforge {

// Basis order of the octonions: 1, i, j, k, l, il, jl, kl.
inline constexpr int kOctonionDim = 8;
extern const std::array<std::string, kOctonionDim> kOctonionBasisNames;

struct SignedBasisIndex {
    int sign;   // +1 or -1
    int index;  // 0..7
};

// Product of two octonion basis units.
SignedBasisIndex oct_basis_mul(int a, int b);

// Same table derived by Cayley-Dickson doubling of the quaternions
// (l = (0,1), xl = (0,x)); used to cross-validate the static table.
SignedBasisIndex oct_basis_mul_cayley_dickson(int a, int b);

// An octonion with exact rational coordinates.
struct OctonionElement {
    std::array<Rational, kOctonionDim> coords{};

    static OctonionElement basis(int idx, const Rational& scale = Rational(1));
    static OctonionElement zero() { return {}; }
    static OctonionElement one() { return basis(0); }

    Rational norm() const;  // sum of squared coordinates

    friend OctonionElement operator+(const OctonionElement& a, const OctonionElement& b);
    friend OctonionElement operator-(const OctonionElement& a, const OctonionElement& b);
    friend OctonionElement operator*(const Rational& s, const OctonionElement& a);
    friend bool operator==(const OctonionElement& a, const OctonionElement& b) {
        return a.coords == b.coords;
    }
};

OctonionElement oct_mul(const OctonionElement& x, const OctonionElement& y);

// Element of the 16-dimensional algebra obtained by adjoining a square root
// of one: pairs (a, b) standing for a*1 + b*eps with eps^2 = 1, so that
// (a,b)(c,d) = (ac + bd, ad + bc).
struct SplitPair {
    OctonionElement real;  // the 1-part
    OctonionElement eps;   // the eps-part

    friend bool operator==(const SplitPair& a, const SplitPair& b) {
        return a.real == b.real && a.eps == b.eps;
    }
};

SplitPair split_mul(const SplitPair& x, const SplitPair& y);

}  // namespace lieforge

#endif
