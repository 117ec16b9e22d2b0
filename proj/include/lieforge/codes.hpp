#ifndef LIEFORGE_CODES_HPP
#define LIEFORGE_CODES_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "lieforge/bitword.hpp"

namespace lieforge {

// A binary linear code, stored canonically as the reduced row echelon form
// of its generator matrix so that equal codes compare equal.
class BinaryCode {
  public:
    // Spans the given rows; rows may be dependent or zero.
    static BinaryCode from_generator(const std::vector<BitWord>& rows, int n);

    int length() const { return n_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::vector<BitWord>& generator() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const BitWord& w) const;

    // All 2^k codewords: message vectors in increasing binary order against
    // the RREF generator (bit i of the message selects row i). Starts at 0.
    std::vector<BitWord> codewords() const;

    BinaryCode dual() const;

    // Entry w counts codewords of weight w; indices 0..n.
    std::vector<long long> weight_enumerator() const;

    // Least positive index of a nonzero weight_enumerator entry
    // (0 for the zero code, by convention).
    int min_distance() const;

    friend bool operator==(const BinaryCode& a, const BinaryCode& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const BinaryCode& a, const BinaryCode& b) { return !(a == b); }

    // Text format: first line "n k", then k generator rows as 0/1 strings.
    static BinaryCode parse(std::istream& in);
    std::string text() const;

  private:
    BinaryCode() : n_(0) {}

    int n_;
    std::vector<BitWord> rows_;  // RREF, no zero rows
    std::vector<int> pivots_;    // pivot column of each row, increasing
};

enum class BuiltinCode { hamming7, simplex7, exthamming8, even4 };

BuiltinCode builtin_code_from_name(const std::string& name);
std::string builtin_code_name(BuiltinCode which);

// The literal generator matrices the built-in codes are defined by
// (before RREF normalization).
std::vector<BitWord> builtin_generator_rows(BuiltinCode which);

BinaryCode builtin(BuiltinCode which);
BinaryCode builtin(const std::string& name);

}  // namespace lieforge

#endif
