#pragma once
// Searches around a putative extremal [120,60,24] code with an automorphism
// of order 58, and bordered double-circulant searches.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdc/analysis.hpp"
#include "sdc/codes.hpp"
#include "sdc/constructions.hpp"
#include "sdc/perms.hpp"

namespace sdc {

struct SurvivorCertificate {
    WeightEnumerator weights;
    std::size_t min_distance = 0;
    bool doubly_even = false;
    std::optional<Perm> witness;  // maps a reference code onto the survivor
    std::string note;
    // bordered double-circulant survivors only
    std::uint64_t first_row = 0;  // bit i = entry i
    unsigned border = 0;          // Border::bits()
};

struct SearchOutcome {
    std::uint64_t examined = 0;
    std::vector<LinearCode> survivors;  // distinct under canonical form
    std::vector<SurvivorCertificate> certificates;
    bool complete = true;
    std::string note;
};

/// All self-dual [8,4,4] codes: systematic [I | A] with A A^T = I, closed
/// under coordinate permutations, deduplicated, filtered at d = 4. Each
/// certificate carries a witness mapping extended_hamming8() onto the code.
SearchOutcome enumerate_selfdual_8_4_4();

/// Order-58 permutation of degree 120 with
///   g^2  = (1,...,29)(30,...,58)(59,...,87)(88,...,116)
///   g^29 = (1,30)(2,31)...(29,58)(59,88)...(87,116)(117,118)(119,120).
Perm build_g58();
/// Same square, built as the interleaved 58-cycles (1,30,2,31,...,29,58)
/// (59,88,...,87,116)(117,118)(119,120). Its 29th power pairs i with i + 14
/// of the partner cycle instead of i + 29.
Perm build_g58_interleaved();

/// dim of the g-fixed part of the lift of `a` (length 8) along the g^2-orbits
/// (orbit order: those of 1, 30, 59, 88, then 117, 118, 119, 120).
std::size_t pullback_fixed_dim(const LinearCode& a, const Perm& g);

/// Minimum distance of the same lift. Below 24 the code `a` cannot be the
/// projection of C(g^2) for an extremal [120,60,24] code C.
std::size_t pullback_min_distance(const LinearCode& a, const Perm& g);

/// A candidate multiplicity pattern for C under g of type 2*29-(2,0,2;0).
struct StructureCase {
    std::string label;
    std::vector<std::size_t> y;
    std::vector<std::size_t> z;
    std::size_t dim_fixed_g = 0;  // y_0 + z_0
    std::size_t dim_b = 0;        // dim pi(C(g^29)) = socle dimension
    bool admissible = false;
    std::vector<TrailStep> trail;
};

/// Every (y, z) satisfying the self-dual multiplicity constraints for
/// x = w = 2, p = 29, dim C(g) = `dim_fixed_g`, checked against B being a
/// self-dual [60, 30, >= 12] code.
std::vector<StructureCase> order58_structure_cases(std::size_t dim_fixed_g = 2);

struct DcSearchOptions {
    std::size_t d_target = 12;
    std::uint64_t budget = 0;  // first rows to examine; 0 = unlimited
    unsigned shard_index = 0;
    unsigned shard_count = 1;
    EnumerationOptions enumeration;
};

/// Bordered double-circulant self-dual codes of length 2l + 2 with minimum
/// distance >= d_target: first rows of length l up to rotation and reversal,
/// all 8 border patterns. Every survivor carries its weight enumerator; see
/// weight_classes. Requires 3 <= l <= 63.
SearchOutcome search_bordered_dc(std::size_t l, const DcSearchOptions& opt);
inline SearchOutcome search_bordered_dc_60(const DcSearchOptions& opt) { return search_bordered_dc(29, opt); }

/// Distinct weight enumerators among the survivors, in first-seen order.
std::vector<WeightEnumerator> weight_classes(const SearchOutcome& outcome);

/// Survivors split three ways: by weight enumerator; by orbits under the
/// multipliers i -> a i mod l (coordinate permutations, so each orbit lies in
/// one equivalence class: an upper bound); and by the histogram of pairwise
/// intersection sizes of minimum-weight words (an invariant, so a lower
/// bound). When the last two agree they count the equivalence classes.
struct DcClassification {
    std::size_t weight_classes = 0;
    std::size_t multiplier_orbits = 0;
    std::size_t invariant_classes = 0;
    std::vector<std::size_t> orbit_of;  // per survivor
    std::vector<std::size_t> class_of;  // per survivor, by invariant of its orbit
    bool exact() const { return multiplier_orbits == invariant_classes; }
};
DcClassification classify_bordered_dc(const SearchOutcome& outcome, std::size_t l, const EnumerationOptions& opt = {});

/// Histogram of |u & v| over unordered pairs of distinct codewords of weight d.
std::vector<std::uint64_t> min_word_intersections(const LinearCode& c, std::size_t d, const EnumerationOptions& opt = {});

/// The circulant shift of a bordered double-circulant code of length 2l + 2:
/// one l-cycle on each block, the two border coordinates fixed.
Perm bordered_dc_shift(std::size_t l);

}  // namespace sdc
