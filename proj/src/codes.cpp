#include "lieforge/codes.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace lieforge {

BinaryCode BinaryCode::from_generator(const std::vector<BitWord>& rows, int n) {
    if (n <= 0 || n > 64) throw input_error("BinaryCode: length must be in 1..64");
    for (const auto& r : rows) {
        if (r.length() != n)
            throw input_error("BinaryCode: generator row length != " + std::to_string(n));
    }
    std::vector<BitWord> work = rows;
    BinaryCode code;
    code.n_ = n;
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(work.size()); ++r) {
            if (work[r].bit(col)) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        std::swap(work[rank], work[pivot]);
        for (int r = 0; r < static_cast<int>(work.size()); ++r) {
            if (r != rank && work[r].bit(col)) work[r] = work[r] + work[rank];
        }
        code.pivots_.push_back(col);
        ++rank;
    }
    work.resize(rank);
    code.rows_ = std::move(work);
    return code;
}

bool BinaryCode::contains(const BitWord& w) const {
    if (w.length() != n_) throw input_error("BinaryCode: word length mismatch");
    BitWord rem = w;
    for (int r = 0; r < dimension(); ++r) {
        if (rem.bit(pivots_[r])) rem = rem + rows_[r];
    }
    return rem.is_zero();
}

std::vector<BitWord> BinaryCode::codewords() const {
    const int k = dimension();
    std::vector<BitWord> out;
    out.reserve(std::size_t(1) << k);
    for (std::uint64_t msg = 0; msg < (std::uint64_t(1) << k); ++msg) {
        BitWord w = BitWord::zero(n_);
        for (int i = 0; i < k; ++i) {
            if ((msg >> i) & 1) w = w + rows_[i];
        }
        out.push_back(w);
    }
    return out;
}

BinaryCode BinaryCode::dual() const {
    // Null space of the generator: one word per non-pivot column.
    std::vector<BitWord> basis;
    std::vector<bool> is_pivot(n_, false);
    for (int p : pivots_) is_pivot[p] = true;
    for (int col = 0; col < n_; ++col) {
        if (is_pivot[col]) continue;
        BitWord w = BitWord::unit(n_, col);
        for (int r = 0; r < dimension(); ++r) {
            if (rows_[r].bit(col)) w = w + BitWord::unit(n_, pivots_[r]);
        }
        basis.push_back(w);
    }
    return from_generator(basis, n_);
}

std::vector<long long> BinaryCode::weight_enumerator() const {
    std::vector<long long> counts(n_ + 1, 0);
    for (const auto& w : codewords()) ++counts[w.weight()];
    return counts;
}

int BinaryCode::min_distance() const {
    const auto counts = weight_enumerator();
    for (int w = 1; w <= n_; ++w)
        if (counts[w] > 0) return w;
    return 0;
}

BinaryCode BinaryCode::parse(std::istream& in) {
    int n = 0, k = 0;
    if (!(in >> n >> k)) throw input_error("code text: expected header 'n k'");
    if (n <= 0 || n > 64 || k < 0 || k > n)
        throw input_error("code text: invalid dimensions");
    std::vector<BitWord> rows;
    for (int r = 0; r < k; ++r) {
        std::string line;
        if (!(in >> line)) throw input_error("code text: missing generator row");
        if (static_cast<int>(line.size()) != n)
            throw input_error("code text: row has wrong length");
        rows.push_back(BitWord::parse(line));
    }
    BinaryCode code = from_generator(rows, n);
    if (code.dimension() != k)
        throw input_error("code text: generator rows are dependent");
    return code;
}

std::string BinaryCode::text() const {
    std::ostringstream os;
    os << n_ << ' ' << dimension() << '\n';
    for (const auto& r : rows_) os << r.str() << '\n';
    return os.str();
}

BuiltinCode builtin_code_from_name(const std::string& name) {
    if (name == "hamming7") return BuiltinCode::hamming7;
    if (name == "simplex7") return BuiltinCode::simplex7;
    if (name == "exthamming8") return BuiltinCode::exthamming8;
    if (name == "even4") return BuiltinCode::even4;
    throw input_error("unknown builtin code '" + name + "'");
}

std::string builtin_code_name(BuiltinCode which) {
    switch (which) {
        case BuiltinCode::hamming7: return "hamming7";
        case BuiltinCode::simplex7: return "simplex7";
        case BuiltinCode::exthamming8: return "exthamming8";
        case BuiltinCode::even4: return "even4";
    }
    throw input_error("unknown builtin code id");
}

std::vector<BitWord> builtin_generator_rows(BuiltinCode which) {
    auto words = [](std::initializer_list<const char*> rows) {
        std::vector<BitWord> out;
        for (const char* r : rows) out.push_back(BitWord::parse(r));
        return out;
    };
    switch (which) {
        case BuiltinCode::hamming7:
            return words({"1110000", "1001100", "0101010", "1101001"});
        case BuiltinCode::simplex7:
            return words({"1010101", "1100110", "1111000"});
        case BuiltinCode::exthamming8:
            return words({"11110000", "11001100", "10101010", "01101001"});
        case BuiltinCode::even4:
            return words({"1100", "0110", "1111"});
    }
    throw input_error("unknown builtin code id");
}

BinaryCode builtin(BuiltinCode which) {
    const int n = (which == BuiltinCode::even4) ? 4
                : (which == BuiltinCode::exthamming8) ? 8
                : 7;
    return BinaryCode::from_generator(builtin_generator_rows(which), n);
}

BinaryCode builtin(const std::string& name) { return builtin(builtin_code_from_name(name)); }

}  // namespace lieforge
