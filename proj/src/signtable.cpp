#include "lieforge/signtable.hpp"

#include <algorithm>

#include "lieforge/errors.hpp"
#include "lieforge/octonion.hpp"
#include "json.hpp"

namespace lieforge {

AlgebraKind algebra_kind_from_name(const std::string& name) {
    if (name == "e7" || name == "E7") return AlgebraKind::E7;
    if (name == "e8" || name == "E8") return AlgebraKind::E8;
    if (name == "f4" || name == "F4") return AlgebraKind::F4;
    throw input_error("unknown algebra '" + name + "'");
}

std::string algebra_kind_name(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::E7: return "e7";
        case AlgebraKind::E8: return "e8";
        case AlgebraKind::F4: return "f4";
    }
    throw input_error("unknown algebra kind");
}

SignTable::SignTable(AlgebraKind algebra, int length, std::vector<BitWord> domain,
                     std::map<std::pair<std::uint64_t, std::uint64_t>, int> values)
    : algebra_(algebra), n_(length), domain_(std::move(domain)), values_(std::move(values)) {
    verify_antisymmetry_law();
}

std::vector<BitWord> SignTable::support_words() const {
    std::vector<BitWord> out;
    for (const auto& w : domain_)
        if (!w.is_zero()) out.push_back(w);
    return out;
}

bool SignTable::defined(const BitWord& c, const BitWord& d) const {
    return values_.count({c.mask(), d.mask()}) > 0;
}

int SignTable::value(const BitWord& c, const BitWord& d) const {
    auto it = values_.find({c.mask(), d.mask()});
    if (it == values_.end())
        throw input_error("sign table: no entry for (" + c.str() + ", " + d.str() + ")");
    return it->second;
}

void SignTable::verify_antisymmetry_law() const {
    // eps(d,c) = (-1)^(|supp(c) & supp(d)| + 1) eps(c,d) whenever both sides
    // exist and c+d lies in the e-basis support set.
    const auto words = support_words();
    for (const auto& c : words) {
        for (const auto& d : words) {
            if (c == d || !defined(c, d)) continue;
            const BitWord sum = c + d;
            if (std::find(words.begin(), words.end(), sum) == words.end()) continue;
            const int parity = (c.dot(d) + 1) % 2 == 0 ? +1 : -1;
            if (value(d, c) != parity * value(c, d))
                throw build_error("sign table violates the antisymmetry law at (" +
                                  c.str() + ", " + d.str() + ")");
        }
    }
}

namespace {

// Simplex codewords in the fixed order c1..c7.
const char* kSimplexWords[7] = {
    "1100110", "0110011", "1010101", "1111000", "0011110", "1001011", "0101101",
};

// Extended Hamming codewords in the fixed order c1..c14.
const char* kExtHammingWords[14] = {
    "11001100", "01100110", "10101010", "11110000", "00111100", "10010110", "01011010",
    "00110011", "10011001", "01010101", "00001111", "11000011", "01101001", "10100101",
};

// F4 code: the weight-2 words in the fixed order c1..c6.
const char* kEvenFourWords[6] = {"1100", "0110", "1010", "0011", "1001", "0101"};

}  // namespace

SignTable sign_table_e7() {
    std::vector<BitWord> words;
    std::map<std::uint64_t, int> unit_of;  // codeword -> octonion basis index
    unit_of[0] = 0;
    for (int a = 1; a <= 7; ++a) {
        words.push_back(BitWord::parse(kSimplexWords[a - 1]));
        unit_of[words.back().mask()] = a;
    }
    std::map<std::pair<std::uint64_t, std::uint64_t>, int> values;
    for (const auto& c : words) {
        for (const auto& d : words) {
            const auto prod = oct_basis_mul(unit_of.at(c.mask()), unit_of.at(d.mask()));
            const BitWord sum = c + d;
            if (prod.index != unit_of.at(sum.mask()))
                throw build_error("e7 sign table: assignment does not close");
            values[{c.mask(), d.mask()}] = prod.sign;
        }
    }
    return SignTable(AlgebraKind::E7, 7, std::move(words), std::move(values));
}

SignTable sign_table_e8() {
    // Signed basis of the 16-dimensional algebra: the plain octonion units,
    // then 1, i, j, k tensored with eps, then minus l, il, jl, kl tensored
    // with eps. Positions 0 and 8 correspond to the words 0 and 1.
    auto signed_basis = [](int idx) {
        const int sign = idx >= 12 ? -1 : +1;
        SplitPair p;
        if (idx < 8) p.real = OctonionElement::basis(idx, Rational(sign));
        else p.eps = OctonionElement::basis(idx - 8, Rational(sign));
        return p;
    };

    std::vector<BitWord> words;
    std::map<std::uint64_t, int> index_of;  // codeword -> signed basis index
    index_of[BitWord::zero(8).mask()] = 0;
    index_of[BitWord::ones(8).mask()] = 8;
    for (int a = 1; a <= 14; ++a) {
        words.push_back(BitWord::parse(kExtHammingWords[a - 1]));
        index_of[words.back().mask()] = a < 8 ? a : a + 1;
    }

    std::map<std::pair<std::uint64_t, std::uint64_t>, int> values;
    for (const auto& c : words) {
        for (const auto& d : words) {
            const BitWord sum = c + d;
            if (sum == BitWord::ones(8)) continue;  // product of e's vanishes there
            const SplitPair prod = split_mul(signed_basis(index_of.at(c.mask())),
                                             signed_basis(index_of.at(d.mask())));
            const int target = index_of.at(sum.mask());
            int sign = 0;
            for (int idx = 0; idx < 16; ++idx) {
                const SplitPair b = signed_basis(idx);
                for (int s : {+1, -1}) {
                    SplitPair scaled;
                    scaled.real = Rational(s) * b.real;
                    scaled.eps = Rational(s) * b.eps;
                    if (prod == scaled) {
                        if (idx != target)
                            throw build_error("e8 sign table: assignment does not close");
                        sign = s;
                    }
                }
            }
            if (sign == 0) throw build_error("e8 sign table: product not a signed basis unit");
            values[{c.mask(), d.mask()}] = sign;
        }
    }
    return SignTable(AlgebraKind::E8, 8, std::move(words), std::move(values));
}

SignTable sign_table_f4() {
    // Printed row/column order: 0, c1, c2, c3, 1, c4, c5, c6.
    std::vector<BitWord> domain;
    domain.push_back(BitWord::zero(4));
    for (int a : {0, 1, 2}) domain.push_back(BitWord::parse(kEvenFourWords[a]));
    domain.push_back(BitWord::ones(4));
    for (int a : {3, 4, 5}) domain.push_back(BitWord::parse(kEvenFourWords[a]));

    constexpr int table[8][8] = {
        {1, 1, 1, 1, 1, 1, 1, 1},
        {1, -2, 1, 1, 1, -2, -1, -1},
        {1, 1, -2, 1, 1, -1, -2, -1},
        {1, 1, 1, -2, 1, -1, -1, -2},
        {1, -1, -1, -1, -1, 1, 1, 1},
        {1, 2, -1, -1, -1, -2, -1, -1},
        {1, -1, 2, -1, -1, -1, -2, -1},
        {1, -1, -1, 2, -1, -1, -1, -2},
    };
    std::map<std::pair<std::uint64_t, std::uint64_t>, int> values;
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            values[{domain[r].mask(), domain[c].mask()}] = table[r][c];
    return SignTable(AlgebraKind::F4, 4, std::move(domain), std::move(values));
}

SignTable sign_table_for(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::E7: return sign_table_e7();
        case AlgebraKind::E8: return sign_table_e8();
        case AlgebraKind::F4: return sign_table_f4();
    }
    throw input_error("unknown algebra kind");
}

std::string SignTable::to_json() const {
    nlohmann::json j;
    j["algebra"] = algebra_kind_name(algebra_);
    j["entries"] = nlohmann::json::array();
    for (const auto& [key, val] : values_) {
        j["entries"].push_back({BitWord(n_, key.first).str(), BitWord(n_, key.second).str(), val});
    }
    return j.dump();
}

}  // namespace lieforge
