#include "doctest.h"
#include "sdc/codes.hpp"
#include "sdc/constructions.hpp"
#include "sdc/modrep.hpp"
#include "support.hpp"

using namespace sdc;

namespace {

Poly2 poly(std::initializer_list<std::size_t> exps) { return Poly2::from_exponents(exps); }

const Perm& two_six_cycles() {
    static const Perm g = Perm::from_cycles(12, {{1, 2, 3, 4, 5, 6}, {7, 8, 9, 10, 11, 12}});
    return g;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    const Poly2 f = poly({3, 1, 0});
    CHECK(f.to_string() == "x^3+x+1");
    CHECK(f.reciprocal() == poly({3, 2, 0}));
    CHECK(f * poly({1, 0}) == poly({4, 3, 2, 0}));
    const auto qr = divmod(poly({7, 0}), f);
    CHECK(qr.quotient * f + qr.remainder == poly({7, 0}));
    CHECK(qr.remainder.is_zero());
    CHECK(gcd(poly({2, 0}), poly({1, 0})) == poly({1, 0}));
    CHECK(Poly2().degree() == -1);
}

TEST_CASE("order of two") {
    CHECK(s_of_p(3) == 2);
    CHECK(s_of_p(7) == 3);
    CHECK(s_of_p(19) == 18);
    CHECK(s_of_p(23) == 11);
    CHECK(s_of_p(29) == 28);
    CHECK_THROWS_AS(s_of_p(9), std::invalid_argument);
    CHECK_THROWS_AS(s_of_p(2), std::invalid_argument);
    for (unsigned p = 3; p < 400; p += 2)
        if (is_odd_prime(p)) CHECK(s_of_p(p) == testing::brute_order_of_two(p));
}

TEST_CASE("factorization of x^p - 1") {
    CHECK(factor_x_p_minus_1(3) == std::vector<Poly2>{poly({1, 0}), poly({2, 1, 0})});
    CHECK(factor_x_p_minus_1(5) == std::vector<Poly2>{poly({1, 0}), poly({4, 3, 2, 1, 0})});
    CHECK(factor_x_p_minus_1(7) == std::vector<Poly2>{poly({1, 0}), poly({3, 1, 0}), poly({3, 2, 0})});
    for (unsigned p : {17u, 23u, 31u, 41u, 73u, 89u}) {
        const auto f = factor_x_p_minus_1(p);
        Poly2 prod = Poly2::one();
        for (const auto& x : f) {
            CHECK(testing::is_irreducible(x));
            prod = prod * x;
        }
        CHECK(prod == poly({p, 0}));
        // seed must not matter
        CHECK(factor_x_p_minus_1(p, 12345) == f);
    }
}

TEST_CASE("self-dual irreducibles and pairing") {
    CHECK(self_dual_irreducibles(5) == std::vector<std::size_t>{0, 1});
    CHECK(self_dual_irreducibles(7) == std::vector<std::size_t>{0});
    CHECK(self_dual_irreducibles(3) == std::vector<std::size_t>{0, 1});
    const auto f = factor_x_p_minus_1(7);
    CHECK(reciprocal_pairing(f) == std::vector<std::size_t>{0, 2, 1});
}

TEST_CASE("decompose: Golay with an order-6 element") {
    const auto fx = testing::xqr_fixtures();
    const auto& golay = fx.front();
    CHECK(aut_type(golay.g, 3) == AutType::two_p(3, 0, 0, 4, 0));
    const auto d = decompose(golay.code, golay.g, 3);
    CHECK(d.y == std::vector<std::size_t>{2, 2});
    CHECK(d.z == std::vector<std::size_t>{0, 0});
    CHECK(quotient_dimension(d) == 0);
    CHECK(is_projective(golay.code, golay.g, 3));
}

TEST_CASE("decompose: full space and fixed space") {
    const Perm& g = two_six_cycles();
    const auto full = decompose(LinearCode::full(12), g, 3);
    CHECK(full.x == 2);
    CHECK(full.y == std::vector<std::size_t>{2, 2});
    CHECK(full.z == std::vector<std::size_t>{0, 0});
    CHECK(is_projective(LinearCode::full(12), g, 3));

    const LinearCode fixed = testing::pair_code(power(g, 3));
    CHECK(fixed == fixed_vectors(LinearCode::full(12), power(g, 3)));
    const auto d = decompose(fixed, g, 3);
    CHECK(d.y == std::vector<std::size_t>{0, 0});
    CHECK(d.z == std::vector<std::size_t>{2, 2});
    CHECK_FALSE(is_projective(fixed, g, 3));
}

TEST_CASE("decompose refusals are distinct") {
    const Perm& g = two_six_cycles();
    const LinearCode c = LinearCode::full(12);
    CHECK_THROWS_WITH_AS(decompose(c, g, 4), doctest::Contains("prime"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(decompose(LinearCode::full(10), g, 3), doctest::Contains("degree"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(decompose(c, Perm::from_cycles(12, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}), 3),
                         doctest::Contains("order"), std::invalid_argument);
    const Perm with_fixed = Perm::from_cycles(12, {{1, 2, 3, 4, 5, 6}, {7, 8, 9}});
    CHECK_THROWS_WITH_AS(decompose(c, with_fixed, 3), doctest::Contains("fix"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(decompose(golay24(), Perm::from_cycles(24, {{1, 2, 3, 4, 5, 6}, {7, 8}, {9, 10}, {11, 12}, {13, 14}, {15, 16}, {17, 18}, {19, 20}, {21, 22}, {23, 24}}), 3),
                         doctest::Contains("automorphism"), std::invalid_argument);
    CHECK_THROWS_AS(is_projective(LinearCode(BitMatrix::from_strings({"111111000000"})), g, 3), std::invalid_argument);
}

TEST_CASE("quotient dimension formula") {
    ModuleDecomposition d;
    d.s = 2;
    d.z = {2, 1, 1};
    CHECK(quotient_dimension(d) == 6);
}

TEST_CASE("properties on synthetic fixtures") {
    const auto fixtures = testing::synthetic_fixtures();
    REQUIRE(fixtures.size() > 12);
    bool saw_projective = false, saw_non_projective = false, saw_s_odd = false;
    for (const auto& f : fixtures) {
        CAPTURE(f.name);
        REQUIRE(is_self_dual(f.code));
        REQUIRE(is_automorphism(f.code, f.g));
        const auto d = decompose(f.code, f.g, f.p);
        const std::size_t n = f.code.length();
        const Perm h = power(f.g, f.p);
        CHECK(self_dual_constraint_violations(d).empty());
        CHECK(d.module_dimension() == f.code.dimension());
        CHECK(d.socle_dimension() == fixed_subcode(f.code, h).dimension());
        // parity laws
        if (n % 4 == 0) CHECK(d.x % 2 == d.w % 2);
        if (n % 4 == 2) CHECK(d.x % 2 != d.w % 2);
        if (d.s % 2 == 0)
            for (std::size_t i = 1; i < d.z.size(); ++i) CHECK(d.z[i] % 2 == d.x % 2);
        CHECK(quotient_dimension(d) % 2 == (n % 4 == 0 ? 0u : 1u));
        const LinearCode proj = orbit_projection(fixed_subcode(f.code, h), h);
        // odd dimension: never free over <h>, and the test refuses
        if (f.code.dimension() % 2 == 1) {
            CHECK_THROWS_AS(is_projective(f.code, f.g, f.p), std::invalid_argument);
            CHECK_FALSE(is_self_dual(proj));
        }
        const bool projective = f.code.dimension() % 2 == 0 && is_projective(f.code, f.g, f.p);
        CHECK(projective == is_self_dual(proj));
        CHECK(projective == std::all_of(d.z.begin(), d.z.end(), [](std::size_t z) { return z == 0; }));
        // phi(C) <= pi(C(h)) = phi(C)^perp
        const LinearCode phi = phi_map(f.code, h);
        CHECK(proj.contains(phi));
        CHECK(proj == dual(phi));
        CHECK(quotient_dimension(d) == proj.dimension() - phi.dimension());
        // coro2 and its corollary
        if (n % 4 == 0 && d.s % 2 == 0 && d.w % 2 == 1) {
            CHECK(fixed_subcode(f.code, h).dimension() >= n / 4 + (f.p - 1) / 2);
            CHECK_FALSE(projective);
        }
        saw_projective |= projective;
        saw_non_projective |= !projective;
        saw_s_odd |= d.s % 2 == 1;
    }
    CHECK(saw_projective);
    CHECK(saw_non_projective);
    CHECK(saw_s_odd);
}
