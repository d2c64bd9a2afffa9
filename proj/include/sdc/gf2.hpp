#pragma once
// Bit-packed vectors and matrices over GF(2).
//
// Coordinates are 0-indexed here; 1-indexed notation only appears in the
// text parsers and printers.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sdc {

using word_t = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// A vector in GF(2)^n. Coordinate i lives in bit (i % 64) of word i / 64.
/// Bits past `size()` are always zero, so word-wise equality is value equality.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length) : length_(length), words_(words_for(length), 0) {}

    /// Parses a string of '0'/'1' characters; coordinate 0 is the first character.
    static BitVector from_string(std::string_view bits);
    static BitVector from_words(std::size_t length, std::span<const word_t> words);

    std::size_t size() const { return length_; }
    std::span<const word_t> words() const { return words_; }
    std::span<word_t> words() { return words_; }

    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
    void set(std::size_t i, bool value = true) {
        const word_t mask = word_t{1} << (i % kWordBits);
        if (value)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }
    void flip(std::size_t i) { words_[i / kWordBits] ^= word_t{1} << (i % kWordBits); }

    std::size_t weight() const;
    bool is_zero() const;
    /// Index of the lowest set coordinate, or size() if zero.
    std::size_t first_one() const;

    BitVector& operator^=(const BitVector& other);
    BitVector& operator&=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;
    friend auto operator<=>(const BitVector& a, const BitVector& b) {
        if (auto c = a.length_ <=> b.length_; c != 0) return c;
        return a.words_ <=> b.words_;
    }

    std::string to_string() const;

private:
    std::size_t length_ = 0;
    std::vector<word_t> words_;
};

/// Inner product over GF(2): parity of the intersection weight.
bool dot(const BitVector& a, const BitVector& b);

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}
    BitMatrix(std::size_t cols, std::vector<BitVector> rows);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const BitVector& row(std::size_t r) const { return rows_[r]; }
    BitVector& row(std::size_t r) { return rows_[r]; }
    const std::vector<BitVector>& row_list() const { return rows_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

    void append_row(BitVector v);
    BitMatrix transposed() const;
    /// Row-vector times matrix: sum of the rows selected by `coeffs`.
    BitVector combine(const BitVector& coeffs) const;
    /// this * other over GF(2).
    BitMatrix operator*(const BitMatrix& other) const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

struct RrefResult {
    BitMatrix matrix;  // same shape as the input, zero rows last
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan elimination, pivoting on the leftmost column.
RrefResult rref(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);

/// Basis of the right null space {x : m x^T = 0}.
BitMatrix kernel(const BitMatrix& m);

/// Coefficients expressing `v` in the rows of `basis` (rows must be independent),
/// or nullopt when `v` is not in the row space. Throws std::invalid_argument on
/// length mismatch.
std::optional<BitVector> solve_membership(const BitMatrix& basis, const BitVector& v);

/// Basis of {m in GF(2)^rows : m * a = 0}, the left null space.
BitMatrix left_kernel(const BitMatrix& a);

}  // namespace sdc
