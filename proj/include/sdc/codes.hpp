#pragma once
// Binary linear codes held in canonical (reduced row-echelon) form.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdc/gf2.hpp"
#include "sdc/kernels.hpp"
#include "sdc/perms.hpp"

namespace sdc {

inline constexpr std::size_t kMinDistanceMaxDim = 36;
inline constexpr std::size_t kWeightEnumeratorMaxDim = 32;
inline constexpr std::size_t kSmallEquivalenceMaxLength = 12;

/// Thrown when an exhaustive computation would exceed its enumeration budget.
class BudgetExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

class LinearCode {
public:
    LinearCode() = default;
    /// Span of the rows of `generators`; dependent rows are dropped.
    explicit LinearCode(const BitMatrix& generators);
    static LinearCode zero(std::size_t n);
    static LinearCode full(std::size_t n);

    std::size_t length() const { return n_; }
    std::size_t dimension() const { return gen_.rows(); }
    /// Reduced row-echelon generator matrix; equal codes have equal matrices.
    const BitMatrix& generator() const { return gen_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const BitVector& v) const;
    bool contains(const LinearCode& sub) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.n_ == b.n_ && a.gen_ == b.gen_; }

private:
    std::size_t n_ = 0;
    BitMatrix gen_;
    std::vector<std::size_t> pivots_;
};

LinearCode dual(const LinearCode& c);
LinearCode intersect(const LinearCode& a, const LinearCode& b);
LinearCode sum(const LinearCode& a, const LinearCode& b);
LinearCode direct_sum(const LinearCode& a, const LinearCode& b);

bool is_self_orthogonal(const LinearCode& c);
bool is_self_dual(const LinearCode& c);
/// Self-orthogonal with every generator weight divisible by 4.
bool is_doubly_even(const LinearCode& c);

struct EnumerationOptions {
    kernels::Isa isa = kernels::best_isa();
    unsigned threads = 0;  // 0 = hardware concurrency
};

/// Minimum nonzero weight by exhaustive Gray-code enumeration.
/// Requires 1 <= k <= kMinDistanceMaxDim.
std::size_t min_distance(const LinearCode& c, const EnumerationOptions& opt = {});
/// True iff every nonzero codeword has weight >= d; stops at the first lighter one.
bool min_distance_at_least(const LinearCode& c, std::size_t d, const EnumerationOptions& opt = {});

struct WeightEnumerator {
    std::vector<std::uint64_t> counts;  // counts[w] = A_w, w = 0..n

    std::size_t min_nonzero_weight() const;
    friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

/// Requires k <= kWeightEnumeratorMaxDim.
WeightEnumerator weight_enumerator(const LinearCode& c, const EnumerationOptions& opt = {});

/// Every codeword of weight w, sorted. Requires k <= kMinDistanceMaxDim.
std::vector<BitVector> codewords_of_weight(const LinearCode& c, std::size_t w, const EnumerationOptions& opt = {});

LinearCode permute(const LinearCode& c, const Perm& s);

/// A permutation s with permute(a, s) == b, or nullopt. Requires n <= 12.
std::optional<Perm> equivalent_small(const LinearCode& a, const LinearCode& b);
/// |Aut(c)| by backtracking. Requires n <= 12.
std::uint64_t aut_order_small(const LinearCode& c);

// Text format: "n k", then k rows of n characters from {0,1}. Lines starting
// with '#' are comments. Rows need not be reduced but must be independent.
LinearCode read_code(std::istream& in);
LinearCode read_code_file(const std::string& path);
void write_code(std::ostream& out, const LinearCode& c, const std::string& comment = {});

}  // namespace sdc
