#include "doctest.h"
#include "sdc/codes.hpp"
#include "sdc/constructions.hpp"
#include "sdc/perms.hpp"
#include "support.hpp"

using namespace sdc;

TEST_CASE("extended QR codes") {
    const LinearCode c8 = xqr(7);
    CHECK(c8.length() == 8);
    CHECK(c8.dimension() == 4);
    CHECK(is_self_dual(c8));
    CHECK(testing::brute_min_distance(c8) == 4);

    const LinearCode golay = golay24();
    CHECK(golay.dimension() == 12);
    CHECK(is_self_dual(golay));
    CHECK(is_doubly_even(golay));
    const auto w = testing::brute_weights(golay);
    CHECK(w[8] == 759);
    CHECK(w[12] == 2576);
    CHECK(w[16] == 759);
    CHECK(w[24] == 1);

    const LinearCode c32 = xqr(31);
    CHECK(is_self_dual(c32));
    CHECK(min_distance(c32) == 8);

    // q = 1 mod 8: the code is isodual, its dual being the image under a
    // non-residue multiplier.
    const LinearCode c18 = xqr(17);
    CHECK(c18.dimension() == 9);
    CHECK(min_distance(c18) == 6);
    CHECK_FALSE(is_self_dual(c18));
    std::vector<std::uint32_t> im(18);
    for (std::uint32_t z = 0; z < 17; ++z) im[z] = (3 * z) % 17;
    im[17] = 17;
    CHECK(dual(c18) == permute(c18, Perm(im)));

    CHECK_THROWS_AS(xqr(13), std::invalid_argument);
    CHECK_THROWS_AS(xqr(15), std::invalid_argument);
}

TEST_CASE("extended Hamming code") {
    const LinearCode h = extended_hamming8();
    CHECK(is_self_dual(h));
    CHECK(is_doubly_even(h));
    CHECK(testing::brute_weights(h) == std::vector<std::uint64_t>{1, 0, 0, 0, 14, 0, 0, 0, 1});
    CHECK(equivalent_small(h, xqr(7)));
}

TEST_CASE("Moebius action on the projective line") {
    for (std::uint64_t q : {7u, 23u, 47u}) {
        const LinearCode c = xqr(q);
        for (const auto& s : psl2_generators(q)) {
            CHECK(s.degree() == q + 1);
            CHECK(is_automorphism(c, s));
        }
        const Perm inv = moebius_perm(0, -1, 1, 0, q);
        CHECK(inv(0) == q);  // 0 -> infinity
        CHECK(inv(q) == 0);
    }
    CHECK_THROWS_AS(moebius_perm(1, 0, 0, 5, 23), std::invalid_argument);  // 5 is a non-residue mod 23
    CHECK(is_nonzero_square(2, 23));
    CHECK_FALSE(is_nonzero_square(0, 23));
}

TEST_CASE("seeded element search") {
    const auto gens = psl2_generators(23);
    const auto a = find_element_of_order(gens, 6, 1, 1000);
    const auto b = find_element_of_order(gens, 6, 1, 1000);
    REQUIRE(a);
    CHECK(*a == *b);
    CHECK(order(*a) == 6);
    CHECK(order(*find_element_of_order(gens, 11, 5, 1000)) == 11);
    CHECK(*find_element_of_order(gens, 1, 5, 1) == Perm::identity(24));
    // 7 does not divide |PSL(2,23)|
    CHECK_FALSE(find_element_of_order(gens, 7, 5, 200));
}

TEST_CASE("double circulant families") {
    const BitVector r = BitVector::from_string("11101101000");
    const BitMatrix m = circulant(r);
    CHECK(m.row(1).to_string() == "01110110100");
    CHECK(double_circulant(r).dimension() == 11);

    // Golay as a bordered double circulant.
    const LinearCode b = bordered_double_circulant(r, Border{true, true, false});
    CHECK(b.length() == 24);
    CHECK(is_self_dual(b));
    CHECK(min_distance(b) == 8);
    CHECK(Border::from_bits(6).bits() == 6);
    CHECK_THROWS_AS(bordered_double_circulant(BitVector(0), Border{}), std::invalid_argument);
}
