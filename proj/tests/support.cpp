#include "support.hpp"

#include <stdexcept>

#include "sdc/constructions.hpp"

namespace sdc::testing {

std::vector<BitVector> all_codewords(const LinearCode& c) {
    const std::size_t k = c.dimension();
    if (k > 22) throw std::length_error("all_codewords: k too large for the oracle");
    std::vector<BitVector> out;
    out.reserve(std::size_t{1} << k);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
        BitVector v(c.length());
        for (std::size_t i = 0; i < k; ++i)
            if ((m >> i) & 1u) v ^= c.generator().row(i);
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t brute_min_distance(const LinearCode& c) {
    std::size_t best = c.length() + 1;
    for (const auto& v : all_codewords(c))
        if (!v.is_zero()) best = std::min(best, v.weight());
    return best;
}

std::vector<std::uint64_t> brute_weights(const LinearCode& c) {
    std::vector<std::uint64_t> w(c.length() + 1, 0);
    for (const auto& v : all_codewords(c)) ++w[v.weight()];
    return w;
}

unsigned brute_order_of_two(unsigned p) {
    unsigned s = 1, v = 2 % p;
    while (v != 1) {
        v = (2 * v) % p;
        ++s;
    }
    return s;
}

namespace {

Poly2 x_pow_2k_mod(unsigned k, const Poly2& f) {
    Poly2 r = Poly2::monomial(1) % f;
    for (unsigned i = 0; i < k; ++i) r = mulmod(r, r, f);
    return r;
}

}  // namespace

bool is_irreducible(const Poly2& f) {
    const long d = f.degree();
    if (d <= 0) return false;
    const Poly2 x = Poly2::monomial(1) % f;
    if (x_pow_2k_mod(static_cast<unsigned>(d), f) != x) return false;
    for (long r = 2; r <= d; ++r) {
        if (d % r != 0) continue;
        bool prime = true;
        for (long t = 2; t * t <= r; ++t) prime = prime && r % t != 0;
        if (!prime) continue;
        const Poly2 diff = x_pow_2k_mod(static_cast<unsigned>(d / r), f) + x;
        if (gcd(f, diff).degree() != 0) return false;
    }
    return true;
}

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, coin(rng));
    return m;
}

LinearCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    for (;;) {
        LinearCode c(random_matrix(rng, k, n));
        if (c.dimension() == k) return c;
    }
}

LinearCode pair_code(const Perm& h) {
    BitMatrix m(0, h.degree());
    for (const auto& cyc : h.cycles()) {
        if (cyc.size() != 2) continue;
        BitVector v(h.degree());
        v.set(cyc[0]);
        v.set(cyc[1]);
        m.append_row(std::move(v));
    }
    return LinearCode(m);
}

std::optional<LinearCode> random_invariant_self_dual(const Perm& g, std::mt19937_64& rng, int attempts) {
    const std::size_t n = g.degree();
    const std::uint64_t ord = order(g);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        LinearCode c = LinearCode::zero(n);
        int stuck = 0;
        while (c.dimension() < n / 2 && stuck < 64) {
            const LinearCode d = dual(c);
            std::bernoulli_distribution coin(0.5);
            BitVector v(n);
            for (const auto& row : d.generator().row_list())
                if (coin(rng)) v ^= row;
            if (c.contains(v)) {
                ++stuck;
                continue;
            }
            BitMatrix orbit(0, n);
            BitVector u = v;
            for (std::uint64_t i = 0; i < ord; ++i) {
                orbit.append_row(u);
                u = g.apply(u);
            }
            LinearCode grown = sum(c, LinearCode(orbit));
            if (is_self_orthogonal(grown)) {
                c = std::move(grown);
                stuck = 0;
            } else {
                ++stuck;
            }
        }
        if (c.dimension() == n / 2) return c;
    }
    return std::nullopt;
}

std::vector<Fixture> xqr_fixtures(std::uint64_t seed) {
    std::vector<Fixture> out;
    for (std::uint64_t q : {23u, 47u}) {
        const auto g = find_element_of_order(psl2_generators(q), 6, seed, 10000);
        if (!g) throw std::runtime_error("no element of order 6 found");
        out.push_back({"xqr" + std::to_string(q + 1), xqr(q), *g, 3});
    }
    return out;
}

std::vector<Fixture> synthetic_fixtures(std::uint64_t seed) {
    struct Shape {
        std::string name;
        std::size_t n;
        unsigned p;
        std::vector<std::vector<std::size_t>> cycles;  // 1-indexed
    };
    auto cyc = [](std::size_t from, std::size_t len) {
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < len; ++i) c.push_back(from + i);
        return c;
    };
    const std::vector<Shape> shapes = {
        {"n8-p3-x1w1", 8, 3, {cyc(1, 6), {7, 8}}},
        {"n12-p3-x2", 12, 3, {cyc(1, 6), cyc(7, 6)}},
        {"n12-p5-x1w1", 12, 5, {cyc(1, 10), {11, 12}}},
        {"n14-p7-x1", 14, 7, {cyc(1, 14)}},
        {"n16-p7-x1w1", 16, 7, {cyc(1, 14), {15, 16}}},
        {"n16-p3-x2w2", 16, 3, {cyc(1, 6), cyc(7, 6), {13, 14}, {15, 16}}},
        {"n20-p3-x3w1", 20, 3, {cyc(1, 6), cyc(7, 6), cyc(13, 6), {19, 20}}},
        {"n24-p5-x2w2", 24, 5, {cyc(1, 10), cyc(11, 10), {21, 22}, {23, 24}}},
        {"n28-p7-x2", 28, 7, {cyc(1, 14), cyc(15, 14)}},
    };
    std::mt19937_64 rng(seed);
    std::vector<Fixture> out;
    for (const auto& s : shapes) {
        const Perm g = Perm::from_cycles(s.n, s.cycles);
        out.push_back({s.name + "-pairs", pair_code(power(g, s.p)), g, s.p});
        for (int i = 0; i < 3; ++i) {
            auto c = random_invariant_self_dual(g, rng);
            if (c) out.push_back({s.name + "-rand" + std::to_string(i), *c, g, s.p});
        }
    }
    return out;
}

}  // namespace sdc::testing
