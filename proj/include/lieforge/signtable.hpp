#ifndef LIEFORGE_SIGNTABLE_HPP
#define LIEFORGE_SIGNTABLE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieforge/bitword.hpp"

namespace lieforge {

enum class AlgebraKind { E7, E8, F4 };

AlgebraKind algebra_kind_from_name(const std::string& name);
std::string algebra_kind_name(AlgebraKind kind);

// Scalar table eps(c,d) on codeword pairs driving the coordinate-algebra
// products. Values are +-1 for E7/E8 and +-1, +-2 for F4. Pairs whose sum
// falls outside the e-basis (the complementary pairs of E8) carry no entry.
class SignTable {
  public:
    SignTable(AlgebraKind algebra, int length, std::vector<BitWord> domain,
              std::map<std::pair<std::uint64_t, std::uint64_t>, int> values);

    AlgebraKind algebra() const { return algebra_; }
    int length() const { return n_; }

    // Codewords of the printed table, in table order (F4 includes 0).
    const std::vector<BitWord>& domain() const { return domain_; }
    // Domain without the zero word: the support set of the e-basis.
    std::vector<BitWord> support_words() const;

    bool defined(const BitWord& c, const BitWord& d) const;
    int value(const BitWord& c, const BitWord& d) const;
    int diagonal(const BitWord& c) const { return value(c, c); }

    std::string to_json() const;

  private:
    void verify_antisymmetry_law() const;

    AlgebraKind algebra_;
    int n_;
    std::vector<BitWord> domain_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, int> values_;
};

// eps read off octonion basis products under the simplex-codeword assignment.
SignTable sign_table_e7();

// eps read off the 16-element signed basis of the octonions with a square
// root of one adjoined; pairs summing to the all-ones word are excluded.
SignTable sign_table_e8();

// Verbatim transcription of the published 8x8 scalar table for f4.
SignTable sign_table_f4();

SignTable sign_table_for(AlgebraKind kind);

}  // namespace lieforge

#endif
