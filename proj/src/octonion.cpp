#include "lieforge/octonion.hpp"

#include "lieforge/errors.hpp"

namespace lieforge {

const std::array<std::string, kOctonionDim> kOctonionBasisNames = {
    "1", "i", "j", "k", "l", "il", "jl", "kl"};

namespace {

// Static multiplication table: kOctMul[a][b] = (sign, index) of unit a times
// unit b in the basis 1, i, j, k, l, il, jl, kl.
struct Cell { std::int8_t sign, index; };

constexpr Cell kOctMul[8][8] = {
    // 1 row
    {{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}, {+1, 4}, {+1, 5}, {+1, 6}, {+1, 7}},
    // i row
    {{+1, 1}, {-1, 0}, {+1, 3}, {-1, 2}, {+1, 5}, {-1, 4}, {-1, 7}, {+1, 6}},
    // j row
    {{+1, 2}, {-1, 3}, {-1, 0}, {+1, 1}, {+1, 6}, {+1, 7}, {-1, 4}, {-1, 5}},
    // k row
    {{+1, 3}, {+1, 2}, {-1, 1}, {-1, 0}, {+1, 7}, {-1, 6}, {+1, 5}, {-1, 4}},
    // l row
    {{+1, 4}, {-1, 5}, {-1, 6}, {-1, 7}, {-1, 0}, {+1, 1}, {+1, 2}, {+1, 3}},
    // il row
    {{+1, 5}, {+1, 4}, {-1, 7}, {+1, 6}, {-1, 1}, {-1, 0}, {-1, 3}, {+1, 2}},
    // jl row
    {{+1, 6}, {+1, 7}, {+1, 4}, {-1, 5}, {-1, 2}, {+1, 3}, {-1, 0}, {-1, 1}},
    // kl row
    {{+1, 7}, {-1, 6}, {+1, 5}, {+1, 4}, {-1, 3}, {-1, 2}, {+1, 1}, {-1, 0}},
};

void check_range(int a, int b) {
    if (a < 0 || a >= 8 || b < 0 || b >= 8)
        throw input_error("octonion basis index out of range");
}

// Quaternion units 1, i, j, k.
constexpr Cell kQuatMul[4][4] = {
    {{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}},
    {{+1, 1}, {-1, 0}, {+1, 3}, {-1, 2}},
    {{+1, 2}, {-1, 3}, {-1, 0}, {+1, 1}},
    {{+1, 3}, {+1, 2}, {-1, 1}, {-1, 0}},
};

struct SignedQuat { int sign, index; };

SignedQuat quat_mul(SignedQuat a, SignedQuat b) {
    const Cell c = kQuatMul[a.index][b.index];
    return {a.sign * b.sign * c.sign, c.index};
}

SignedQuat quat_conj(SignedQuat a) {
    return {a.index == 0 ? a.sign : -a.sign, a.index};
}

}  // namespace

SignedBasisIndex oct_basis_mul(int a, int b) {
    check_range(a, b);
    const Cell c = kOctMul[a][b];
    return {c.sign, c.index};
}

SignedBasisIndex oct_basis_mul_cayley_dickson(int a, int b) {
    check_range(a, b);
    // Write a basis unit as a quaternion pair: x = (x0, x1) means x0 + x1 l.
    // Doubling rule: (a0,a1)(b0,b1) = (a0 b0 - conj(b1) a1, b1 a0 + a1 conj(b0)).
    // Each unit has exactly one nonzero half, so the result has too.
    struct Half { bool upper; SignedQuat q; };
    auto split = [](int idx) -> Half {
        if (idx < 4) return {false, {+1, idx}};
        return {true, {+1, idx - 4}};
    };
    const Half x = split(a), y = split(b);
    bool upper;
    SignedQuat q{};
    if (!x.upper && !y.upper) {
        upper = false;
        q = quat_mul(x.q, y.q);
    } else if (x.upper && y.upper) {
        upper = false;
        q = quat_mul(quat_conj(y.q), x.q);
        q.sign = -q.sign;
    } else if (!x.upper) {  // x plain, y upper
        upper = true;
        q = quat_mul(y.q, x.q);
    } else {  // x upper, y plain
        upper = true;
        q = quat_mul(x.q, quat_conj(y.q));
    }
    return {q.sign, q.index + (upper ? 4 : 0)};
}

OctonionElement OctonionElement::basis(int idx, const Rational& scale) {
    if (idx < 0 || idx >= kOctonionDim)
        throw input_error("octonion basis index out of range");
    OctonionElement e;
    e.coords[idx] = scale;
    return e;
}

Rational OctonionElement::norm() const {
    Rational acc;
    for (const auto& c : coords) acc += c * c;
    return acc;
}

OctonionElement operator+(const OctonionElement& a, const OctonionElement& b) {
    OctonionElement r;
    for (int i = 0; i < kOctonionDim; ++i) r.coords[i] = a.coords[i] + b.coords[i];
    return r;
}

OctonionElement operator-(const OctonionElement& a, const OctonionElement& b) {
    OctonionElement r;
    for (int i = 0; i < kOctonionDim; ++i) r.coords[i] = a.coords[i] - b.coords[i];
    return r;
}

OctonionElement operator*(const Rational& s, const OctonionElement& a) {
    OctonionElement r;
    for (int i = 0; i < kOctonionDim; ++i) r.coords[i] = s * a.coords[i];
    return r;
}

OctonionElement oct_mul(const OctonionElement& x, const OctonionElement& y) {
    OctonionElement r;
    for (int a = 0; a < kOctonionDim; ++a) {
        if (x.coords[a].is_zero()) continue;
        for (int b = 0; b < kOctonionDim; ++b) {
            if (y.coords[b].is_zero()) continue;
            const auto cell = oct_basis_mul(a, b);
            const Rational term = x.coords[a] * y.coords[b] * Rational(cell.sign);
            r.coords[cell.index] += term;
        }
    }
    return r;
}

SplitPair split_mul(const SplitPair& x, const SplitPair& y) {
    SplitPair r;
    r.real = oct_mul(x.real, y.real) + oct_mul(x.eps, y.eps);
    r.eps = oct_mul(x.real, y.eps) + oct_mul(x.eps, y.real);
    return r;
}

}  // namespace lieforge
