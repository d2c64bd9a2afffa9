#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "sdc/codes.hpp"
#include "sdc/constructions.hpp"
#include "support.hpp"

using namespace sdc;

namespace {

Perm random_perm(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint32_t> im(n);
    std::iota(im.begin(), im.end(), 0u);
    std::shuffle(im.begin(), im.end(), rng);
    return Perm(im);
}

}  // namespace

TEST_CASE("canonical form and containment") {
    const LinearCode a(BitMatrix::from_strings({"1100", "0110", "1010"}));
    CHECK(a.dimension() == 2);
    const LinearCode b(BitMatrix::from_strings({"1010", "0110"}));
    CHECK(a == b);
    CHECK(a.contains(BitVector::from_string("1010")));
    CHECK_FALSE(a.contains(BitVector::from_string("1000")));
    CHECK(LinearCode::full(4).contains(a));
    CHECK(a.contains(LinearCode::zero(4)));
}

TEST_CASE("dual, sum and intersection dimensions") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 2 + rng() % 70;
        const LinearCode a = testing::random_code(rng, n, 1 + rng() % n);
        const LinearCode b = testing::random_code(rng, n, 1 + rng() % n);
        CHECK(dual(a).dimension() + a.dimension() == n);
        CHECK(dual(dual(a)) == a);
        CHECK(sum(a, b).dimension() + intersect(a, b).dimension() == a.dimension() + b.dimension());
        CHECK(sum(a, b).contains(a));
        CHECK(a.contains(intersect(a, b)));
        CHECK(direct_sum(a, b).dimension() == a.dimension() + b.dimension());
    }
}

TEST_CASE("self-duality predicates") {
    CHECK(is_self_dual(extended_hamming8()));
    CHECK(is_doubly_even(extended_hamming8()));
    const LinearCode pairs(BitMatrix::from_strings({"1100", "0011"}));
    CHECK(is_self_dual(pairs));
    CHECK_FALSE(is_doubly_even(pairs));
    CHECK_FALSE(is_self_dual(LinearCode::full(4)));
    CHECK(is_self_orthogonal(LinearCode::zero(4)));
}

TEST_CASE("minimum distance and weight enumerator against the oracle") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 25; ++t) {
        const std::size_t n = 8 + rng() % 60, k = 1 + rng() % std::min<std::size_t>(n, 16);
        const LinearCode c = testing::random_code(rng, n, k);
        const auto we = weight_enumerator(c);
        CHECK(we.counts == testing::brute_weights(c));
        CHECK(min_distance(c) == testing::brute_min_distance(c));
        CHECK(we.min_nonzero_weight() == min_distance(c));
    }
    CHECK_THROWS_AS(min_distance(LinearCode::zero(5)), std::invalid_argument);
    CHECK_THROWS_AS(min_distance(LinearCode::full(kMinDistanceMaxDim + 1)), BudgetExceeded);
    CHECK_THROWS_AS(weight_enumerator(LinearCode::full(kWeightEnumeratorMaxDim + 1)), BudgetExceeded);
}

TEST_CASE("small equivalence and automorphism order") {
    std::mt19937_64 rng(29);
    const LinearCode h = extended_hamming8();
    for (int t = 0; t < 10; ++t) {
        const Perm s = random_perm(rng, 8);
        const LinearCode img = permute(h, s);
        const auto w = equivalent_small(h, img);
        REQUIRE(w);
        CHECK(permute(h, *w) == img);
    }
    // Same [6,3] parameters, different weight distributions.
    const LinearCode a(BitMatrix::from_strings({"110000", "001100", "000011"}));
    const LinearCode b(BitMatrix::from_strings({"111000", "000111", "100100"}));
    CHECK_FALSE(equivalent_small(a, b));
    // overlapping supports vs disjoint supports
    const LinearCode c(BitMatrix::from_strings({"110000", "011000"}));
    const LinearCode d(BitMatrix::from_strings({"110000", "000110"}));
    CHECK(weight_enumerator(c).counts != weight_enumerator(d).counts);
    CHECK_FALSE(equivalent_small(c, d));

    CHECK(aut_order_small(h) == 1344);
    // oracle over S_7 for a few random [7,3] codes
    std::vector<std::uint32_t> im(7);
    for (int t = 0; t < 3; ++t) {
        const LinearCode r = testing::random_code(rng, 7, 3);
        std::iota(im.begin(), im.end(), 0u);
        std::uint64_t count = 0;
        do {
            count += permute(r, Perm(im)) == r;
        } while (std::next_permutation(im.begin(), im.end()));
        CHECK(aut_order_small(r) == count);
    }
    CHECK_THROWS(aut_order_small(golay24()));
}

TEST_CASE("code file round trip and errors") {
    const LinearCode g = golay24();
    std::stringstream ss;
    write_code(ss, g, "golay");
    CHECK(read_code(ss) == g);

    std::istringstream empty("");
    CHECK_THROWS_WITH_AS(read_code(empty), doctest::Contains("empty"), std::invalid_argument);
    std::istringstream bad("# c\n4 2\n1100\n01x0\n");
    CHECK_THROWS_WITH_AS(read_code(bad), doctest::Contains("line 4"), std::invalid_argument);
    std::istringstream shortrow("4 1\n110\n");
    CHECK_THROWS_WITH_AS(read_code(shortrow), doctest::Contains("line 2"), std::invalid_argument);
    std::istringstream dependent("4 2\n1100\n1100\n");
    CHECK_THROWS_AS(read_code(dependent), std::invalid_argument);
    std::istringstream missing("4 3\n1100\n0011\n");
    CHECK_THROWS_AS(read_code(missing), std::invalid_argument);
}
