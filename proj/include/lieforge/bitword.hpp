#ifndef LIEFORGE_BITWORD_HPP
#define LIEFORGE_BITWORD_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "lieforge/errors.hpp"

namespace lieforge {

// A word of F_2^n, n <= 64. Addition is XOR.
class BitWord {
  public:
    BitWord() : n_(0), bits_(0) {}
    BitWord(int n, std::uint64_t bits) : n_(n), bits_(bits) {
        if (n < 0 || n > 64) throw input_error("BitWord: length out of range");
        if (n < 64) bits_ &= (std::uint64_t(1) << n) - 1;
    }

    // "1100" -> word of length 4 with bits 1,2 set (positions are 0-based
    // from the left, matching the printed order of codewords).
    static BitWord parse(const std::string& s) {
        BitWord w(static_cast<int>(s.size()), 0);
        for (int i = 0; i < w.n_; ++i) {
            if (s[i] == '1') w.bits_ |= std::uint64_t(1) << i;
            else if (s[i] != '0') throw input_error("BitWord: invalid character in '" + s + "'");
        }
        return w;
    }

    static BitWord zero(int n) { return BitWord(n, 0); }
    static BitWord ones(int n) {
        return BitWord(n, n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1);
    }
    static BitWord unit(int n, int i) {
        if (i < 0 || i >= n) throw input_error("BitWord: unit index out of range");
        return BitWord(n, std::uint64_t(1) << i);
    }

    int length() const { return n_; }
    std::uint64_t mask() const { return bits_; }
    bool bit(int i) const { return (bits_ >> i) & 1; }
    int weight() const { return std::popcount(bits_); }
    bool is_zero() const { return bits_ == 0; }

    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < n_; ++i)
            if (bit(i)) s.push_back(i);
        return s;
    }

    BitWord operator+(const BitWord& o) const {
        if (n_ != o.n_) throw input_error("BitWord: length mismatch in addition");
        return BitWord(n_, bits_ ^ o.bits_);
    }

    // Dot product over the integers (number of common ones).
    int dot(const BitWord& o) const {
        if (n_ != o.n_) throw input_error("BitWord: length mismatch in dot");
        return std::popcount(bits_ & o.bits_);
    }

    std::string str() const {
        std::string s(n_, '0');
        for (int i = 0; i < n_; ++i)
            if (bit(i)) s[i] = '1';
        return s;
    }

    friend bool operator==(const BitWord& a, const BitWord& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const BitWord& a, const BitWord& b) { return !(a == b); }
    friend bool operator<(const BitWord& a, const BitWord& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.bits_ < b.bits_;
    }

  private:
    int n_;
    std::uint64_t bits_;
};

}  // namespace lieforge

#endif
