#pragma once
// Named code families and automorphism sources.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sdc/codes.hpp"
#include "sdc/perms.hpp"

namespace sdc {

/// A point of the projective line over GF(q): a residue 0..q-1 or infinity.
/// Coordinate labels (0-indexed) are the residue itself, and q for infinity.
struct ProjLinePoint {
    static constexpr std::int64_t kInfinity = -1;
    std::int64_t value = 0;

    bool is_infinity() const { return value == kInfinity; }
    std::size_t coordinate(std::uint64_t q) const { return is_infinity() ? q : static_cast<std::size_t>(value); }
};

/// Extended quadratic residue code of length q + 1: the cyclic code with
/// zeros alpha^r (r a nonzero square mod q), extended by an overall parity
/// coordinate at position q (the point at infinity). Requires q prime with
/// q = +-1 mod 8.
LinearCode xqr(std::uint64_t q);
LinearCode golay24();
/// [8,4,4]: the cyclic Hamming code with generator 1 + x + x^3 plus parity.
LinearCode extended_hamming8();

struct Border {
    bool top_fill = false;   // row 0 of the right block, columns 1..l
    bool left_fill = false;  // column 0 of the right block, rows 1..l
    bool corner = false;     // entry (0, 0) of the right block

    /// Bits: top_fill = 4, left_fill = 2, corner = 1.
    static Border from_bits(unsigned bits) { return {(bits & 4u) != 0, (bits & 2u) != 0, (bits & 1u) != 0}; }
    unsigned bits() const { return (top_fill ? 4u : 0u) | (left_fill ? 2u : 0u) | (corner ? 1u : 0u); }
};

/// l x l circulant whose row i is first_row shifted right i times.
BitMatrix circulant(const BitVector& first_row);
/// Generator (I_l | R) with R circulant.
LinearCode double_circulant(const BitVector& first_row);
/// Generator (I_{l+1} | M), M = [[corner, top...top], [left; R]] with R circulant.
LinearCode bordered_double_circulant(const BitVector& first_row, Border border);

/// Legendre symbol test: x is a nonzero square mod the odd prime q.
bool is_nonzero_square(std::int64_t x, std::uint64_t q);

/// z -> (a z + b) / (c z + d) on the q + 1 projective-line coordinates.
/// Throws unless ad - bc is a nonzero square mod q.
Perm moebius_perm(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::uint64_t q);
/// {z -> z + 1, z -> -1/z}, which generate PSL(2, q).
std::vector<Perm> psl2_generators(std::uint64_t q);

/// A power of a seeded random word in `gens` with exactly the target order,
/// or nullopt after max_tries words. Not finding one proves nothing.
std::optional<Perm> find_element_of_order(const std::vector<Perm>& gens, std::uint64_t target, std::uint64_t seed,
                                          std::size_t max_tries);

}  // namespace sdc
