#include "sdc/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sdc {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i);
        else if (bits[i] != '0')
            throw std::invalid_argument("bit string contains '" + std::string(1, bits[i]) + "'");
    }
    return v;
}

BitVector BitVector::from_words(std::size_t length, std::span<const word_t> words) {
    BitVector v(length);
    std::copy_n(words.begin(), std::min(words.size(), v.words_.size()), v.words_.begin());
    if (const std::size_t tail = length % kWordBits; tail != 0 && !v.words_.empty())
        v.words_.back() &= (word_t{1} << tail) - 1;
    return v;
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (word_t x : words_) w += static_cast<std::size_t>(std::popcount(x));
    return w;
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](word_t x) { return x == 0; });
}

std::size_t BitVector::first_one() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return length_;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.length_ != length_) throw std::invalid_argument("BitVector length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    if (other.length_ != length_) throw std::invalid_argument("BitVector length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

std::string BitVector::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

bool dot(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    word_t acc = 0;
    auto aw = a.words();
    auto bw = b.words();
    for (std::size_t i = 0; i < aw.size(); ++i) acc ^= aw[i] & bw[i];
    return std::popcount(acc) & 1;
}

BitMatrix::BitMatrix(std::size_t cols, std::vector<BitVector> rows) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (r.size() != cols_) throw std::invalid_argument("BitMatrix: row length differs from column count");
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) return {};
    std::vector<BitVector> vs;
    vs.reserve(rows.size());
    for (const auto& r : rows) vs.push_back(BitVector::from_string(r));
    return BitMatrix(rows.front().size(), std::move(vs));
}

void BitMatrix::append_row(BitVector v) {
    if (v.size() != cols_) throw std::invalid_argument("append_row: length mismatch");
    rows_.push_back(std::move(v));
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (rows_[r].get(c)) t.set(c, r);
    return t;
}

BitVector BitMatrix::combine(const BitVector& coeffs) const {
    if (coeffs.size() != rows_.size()) throw std::invalid_argument("combine: coefficient count mismatch");
    BitVector out(cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (coeffs.get(r)) out ^= rows_[r];
    return out;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
    if (cols_ != other.rows()) throw std::invalid_argument("matrix product: inner dimension mismatch");
    BitMatrix out(rows_.size(), other.cols());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t i = 0; i < cols_; ++i)
            if (rows_[r].get(i)) out.rows_[r] ^= other.rows_[i];
    return out;
}

RrefResult rref(const BitMatrix& m) {
    RrefResult res{m, 0, {}};
    auto& a = res.matrix;
    const std::size_t rows = a.rows();
    for (std::size_t col = 0; col < a.cols() && res.rank < rows; ++col) {
        std::size_t piv = res.rank;
        while (piv < rows && !a.get(piv, col)) ++piv;
        if (piv == rows) continue;
        std::swap(a.row(piv), a.row(res.rank));
        const BitVector& prow = a.row(res.rank);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != res.rank && a.get(r, col)) a.row(r) ^= prow;
        res.pivots.push_back(col);
        ++res.rank;
    }
    return res;
}

std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

BitMatrix kernel(const BitMatrix& m) {
    const auto red = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : red.pivots) is_pivot[p] = true;

    BitMatrix basis(0, n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        BitVector v(n);
        v.set(free);
        for (std::size_t r = 0; r < red.rank; ++r)
            if (red.matrix.get(r, free)) v.set(red.pivots[r]);
        basis.append_row(std::move(v));
    }
    return basis;
}

BitMatrix left_kernel(const BitMatrix& a) { return kernel(a.transposed()); }

std::optional<BitVector> solve_membership(const BitMatrix& basis, const BitVector& v) {
    if (v.size() != basis.cols()) throw std::invalid_argument("solve_membership: vector length differs from basis");
    const std::size_t k = basis.rows();
    // Eliminate on the rows while tracking which original rows each reduced row combines.
    std::vector<BitVector> rows = basis.row_list();
    std::vector<BitVector> combo(k, BitVector(k));
    for (std::size_t i = 0; i < k; ++i) combo[i].set(i);

    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < basis.cols() && rank < k; ++col) {
        std::size_t piv = rank;
        while (piv < k && !rows[piv].get(col)) ++piv;
        if (piv == k) continue;
        std::swap(rows[piv], rows[rank]);
        std::swap(combo[piv], combo[rank]);
        for (std::size_t r = 0; r < k; ++r) {
            if (r != rank && rows[r].get(col)) {
                rows[r] ^= rows[rank];
                combo[r] ^= combo[rank];
            }
        }
        pivots.push_back(col);
        ++rank;
    }
    if (rank != k) throw std::invalid_argument("solve_membership: basis rows are linearly dependent");

    BitVector rest = v;
    BitVector coeffs(k);
    for (std::size_t r = 0; r < rank; ++r) {
        if (rest.get(pivots[r])) {
            rest ^= rows[r];
            coeffs ^= combo[r];
        }
    }
    if (!rest.is_zero()) return std::nullopt;
    return coeffs;
}

}  // namespace sdc
