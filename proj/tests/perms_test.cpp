#include <random>

#include "doctest.h"
#include "sdc/codes.hpp"
#include "sdc/constructions.hpp"
#include "sdc/perms.hpp"
#include "support.hpp"

using namespace sdc;

TEST_CASE("parse and print") {
    const Perm s = Perm::parse("(1,2,3)(5,6)", 6);
    CHECK(s.degree() == 6);
    CHECK(s(0) == 1);
    CHECK(s(2) == 0);
    CHECK(s(3) == 3);
    CHECK(s.to_string() == "(1,2,3)(5,6)");
    CHECK(Perm::parse("deg=4 (1,4)") == Perm::from_cycles(4, {{1, 4}}));
    CHECK(Perm::parse("2 1 4 3") == Perm::from_cycles(4, {{1, 2}, {3, 4}}));
    CHECK(Perm::identity(3).to_string() == "()");
    CHECK_THROWS_AS(Perm::parse("(1,2)(2,3)", 3), std::invalid_argument);
    CHECK_THROWS_AS(Perm(std::vector<std::uint32_t>{0, 0}), std::invalid_argument);
}

TEST_CASE("right action, composition, powers and order") {
    const Perm s = Perm::from_cycles(5, {{1, 2}});
    const Perm t = Perm::from_cycles(5, {{2, 3}});
    // i^(st) = (i^s)^t: 1 -> 2 -> 3
    CHECK(compose(s, t)(0) == 2);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
        std::vector<std::uint32_t> im(17);
        for (std::uint32_t i = 0; i < 17; ++i) im[i] = i;
        std::shuffle(im.begin(), im.end(), rng);
        const Perm p(im);
        Perm acc = Perm::identity(17);
        for (int e = 0; e < 9; ++e) {
            CHECK(power(p, e) == acc);
            acc = compose(acc, p);
        }
        CHECK(power(p, -1) == p.inverse());
        CHECK(compose(p, p.inverse()) == Perm::identity(17));
        CHECK(power(p, static_cast<std::int64_t>(order(p))) == Perm::identity(17));
        BitVector v(17);
        v.set(static_cast<std::size_t>(rng() % 17));
        v.set(static_cast<std::size_t>(rng() % 17));
        CHECK(p.apply(p.inverse().apply(v)) == v);
        CHECK(compose(p, p).apply(v) == p.apply(p.apply(v)));
    }
}

TEST_CASE("cycle types") {
    const AutType t = AutType::parse("2*29-(2,0,2;0)");
    CHECK(t == AutType::two_p(29, 2, 0, 2, 0));
    CHECK(t.degree() == 120);
    CHECK(t.square_type() == AutType::prime(29, 4, 4));
    CHECK(t.pth_power_type() == AutType::involution(60, 0));
    CHECK(AutType::parse("2·3-(0,0,4;0)") == AutType::two_p(3, 0, 0, 4, 0));
    CHECK(AutType::parse("29-(4,4)").to_string() == "29-(4,4)");

    const Perm g = Perm::from_cycles(12, {{1, 2, 3, 4, 5, 6}, {7, 8}, {9, 10, 11}});
    CHECK(aut_type(g, 3) == AutType::two_p(3, 1, 1, 1, 1));
    CHECK(aut_type(Perm::from_cycles(4, {{1, 2}}), 3) == AutType::involution(1, 2));
    CHECK_THROWS_WITH_AS(aut_type(Perm::from_cycles(5, {{1, 2, 3, 4, 5}}), 3), doctest::Contains("5"),
                         std::invalid_argument);
}

TEST_CASE("fixed subcodes and orbit maps") {
    const LinearCode golay = golay24();
    const auto gens = psl2_generators(23);
    for (const auto& s : gens) CHECK(is_automorphism(golay, s));
    CHECK_FALSE(is_automorphism(golay, Perm::from_cycles(24, {{1, 2}})));
    CHECK_THROWS_AS(fixed_subcode(golay, Perm::from_cycles(24, {{1, 2}})), std::invalid_argument);

    const auto h = find_element_of_order(gens, 2, 3, 1000);
    REQUIRE(h);
    const LinearCode fixed = fixed_subcode(golay, *h);
    // oracle: codewords with v^h = v
    std::size_t count = 0;
    for (const auto& v : testing::all_codewords(golay)) count += h->apply(v) == v;
    CHECK(count == (std::size_t{1} << fixed.dimension()));

    const LinearCode proj = orbit_projection(fixed, *h);
    CHECK(proj.length() == 12);
    CHECK(orbit_lift(proj, *h) == fixed);
    CHECK_THROWS_WITH_AS(orbit_projection(golay, *h), doctest::Contains("{"), std::invalid_argument);

    const LinearCode phi = phi_map(golay, *h);
    CHECK(proj.contains(phi));
    CHECK_THROWS_AS(phi_map(golay, Perm::from_cycles(24, {{1, 2, 3}})), std::invalid_argument);
}
