#pragma once
// Oracles and fixtures shared by the tests. The oracles are deliberately
// naive: plain loops over all messages or subspaces, no Gray code, no SIMD.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sdc/codes.hpp"
#include "sdc/perms.hpp"
#include "sdc/poly2.hpp"

namespace sdc::testing {

/// All 2^k codewords by direct combination of generator rows.
std::vector<BitVector> all_codewords(const LinearCode& c);
std::size_t brute_min_distance(const LinearCode& c);
std::vector<std::uint64_t> brute_weights(const LinearCode& c);

/// Smallest s >= 1 with 2^s = 1 mod p, by repeated doubling.
unsigned brute_order_of_two(unsigned p);
/// Rabin irreducibility test over GF(2).
bool is_irreducible(const Poly2& f);

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols);
/// Random code of exactly dimension k (rows resampled until independent).
LinearCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t k);

/// span{e_a + e_b : (a b) a 2-cycle of h}: self-dual, invariant under anything commuting with h.
LinearCode pair_code(const Perm& h);

/// Random <g>-invariant self-dual code grown from orbit spans of random dual
/// vectors; nullopt if every attempt got stuck.
std::optional<LinearCode> random_invariant_self_dual(const Perm& g, std::mt19937_64& rng, int attempts = 200);

struct Fixture {
    std::string name;
    LinearCode code;
    Perm g;
    unsigned p = 0;
};

/// Golay and XQR48 with order-6 elements of PSL(2,23) / PSL(2,47).
std::vector<Fixture> xqr_fixtures(std::uint64_t seed = 1);
/// Small g-invariant self-dual codes for several (n, p, cycle shape), both
/// projective and not, including s(p) odd (p = 7).
std::vector<Fixture> synthetic_fixtures(std::uint64_t seed = 7);

}  // namespace sdc::testing
