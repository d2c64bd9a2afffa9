#include "sdc/constructions.hpp"

#include <random>
#include <stdexcept>

#include "sdc/modrep.hpp"
#include "sdc/poly2.hpp"

namespace sdc {

namespace {

std::int64_t mod(std::int64_t x, std::uint64_t q) {
    const auto m = static_cast<std::int64_t>(q);
    return ((x % m) + m) % m;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1u) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * b) % m);
        b = static_cast<std::uint64_t>((static_cast<unsigned __int128>(b) * b) % m);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::int64_t x, std::uint64_t q) { return pow_mod(static_cast<std::uint64_t>(mod(x, q)), q - 2, q); }

// Polynomials in X whose coefficients live in GF(2^m) = GF(2)[y] / field.
using ExtPoly = std::vector<Poly2>;

ExtPoly ext_mul_linear(const ExtPoly& f, const Poly2& root, const Poly2& field) {
    // f * (X + root); characteristic 2 so minus is plus.
    ExtPoly out(f.size() + 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
        out[i + 1] += f[i];
        out[i] += mulmod(f[i], root, field);
    }
    return out;
}

}  // namespace

bool is_nonzero_square(std::int64_t x, std::uint64_t q) {
    const std::int64_t r = mod(x, q);
    return r != 0 && pow_mod(static_cast<std::uint64_t>(r), (q - 1) / 2, q) == 1;
}

LinearCode xqr(std::uint64_t q) {
    if (!is_odd_prime(q) || (q % 8 != 1 && q % 8 != 7))
        throw std::invalid_argument("xqr: q = " + std::to_string(q) + " must be a prime with q = +-1 mod 8");
    // Any nontrivial irreducible factor F of x^q - 1 has the primitive q-th
    // root of unity alpha = y as a root in GF(2)[y] / F.
    const auto factors = factor_x_p_minus_1(static_cast<unsigned>(q));
    const Poly2& field = factors.at(1);
    const Poly2 alpha = Poly2::monomial(1);

    ExtPoly g{Poly2::one()};
    Poly2 alpha_r = Poly2::one();
    for (std::uint64_t r = 1; r < q; ++r) {
        alpha_r = mulmod(alpha_r, alpha, field);
        if (is_nonzero_square(static_cast<std::int64_t>(r), q)) g = ext_mul_linear(g, alpha_r, field);
    }
    Poly2 gen_poly;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i].degree() > 0) throw std::logic_error("xqr: generator polynomial has a coefficient outside GF(2)");
        gen_poly.set_coeff(i, !g[i].is_zero());
    }

    const std::size_t n = q + 1;
    const std::size_t k = q - static_cast<std::size_t>(gen_poly.degree());
    BitMatrix m(0, n);
    for (std::size_t shift = 0; shift < k; ++shift) {
        BitVector row(n);
        for (long i = 0; i <= gen_poly.degree(); ++i)
            if (gen_poly.coeff(static_cast<std::size_t>(i))) row.set(shift + static_cast<std::size_t>(i));
        row.set(q, row.weight() % 2 == 1);
        m.append_row(std::move(row));
    }
    return LinearCode(m);
}

LinearCode golay24() { return xqr(23); }

LinearCode extended_hamming8() {
    BitMatrix m(0, 8);
    for (std::size_t shift = 0; shift < 4; ++shift) {
        BitVector row(8);
        for (std::size_t e : {0u, 1u, 3u}) row.set(shift + e);
        row.set(7, true);  // weight 3 plus parity
        m.append_row(std::move(row));
    }
    return LinearCode(m);
}

BitMatrix circulant(const BitVector& first_row) {
    const std::size_t l = first_row.size();
    BitMatrix m(l, l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            if (first_row.get(j)) m.set(i, (i + j) % l);
    return m;
}

LinearCode double_circulant(const BitVector& first_row) {
    const std::size_t l = first_row.size();
    const BitMatrix r = circulant(first_row);
    BitMatrix m(l, 2 * l);
    for (std::size_t i = 0; i < l; ++i) {
        m.set(i, i);
        for (std::size_t j = 0; j < l; ++j)
            if (r.get(i, j)) m.set(i, l + j);
    }
    return LinearCode(m);
}

LinearCode bordered_double_circulant(const BitVector& first_row, Border border) {
    const std::size_t l = first_row.size();
    if (l == 0) throw std::invalid_argument("bordered_double_circulant: first row must be nonempty");
    const std::size_t half = l + 1;
    const BitMatrix r = circulant(first_row);
    BitMatrix m(half, 2 * half);
    for (std::size_t i = 0; i < half; ++i) m.set(i, i);
    m.set(0, half, border.corner);
    for (std::size_t j = 0; j < l; ++j) m.set(0, half + 1 + j, border.top_fill);
    for (std::size_t i = 0; i < l; ++i) {
        m.set(1 + i, half, border.left_fill);
        for (std::size_t j = 0; j < l; ++j)
            if (r.get(i, j)) m.set(1 + i, half + 1 + j);
    }
    return LinearCode(m);
}

Perm moebius_perm(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::uint64_t q) {
    if (!is_odd_prime(q)) throw std::invalid_argument("moebius_perm: q = " + std::to_string(q) + " is not an odd prime");
    a = mod(a, q);
    b = mod(b, q);
    c = mod(c, q);
    d = mod(d, q);
    if (!is_nonzero_square(a * d - b * c, q))
        throw std::invalid_argument("moebius_perm: determinant ad - bc is not a nonzero square mod " + std::to_string(q));
    const auto qi = static_cast<std::int64_t>(q);
    std::vector<std::uint32_t> im(q + 1);
    for (std::int64_t z = 0; z < qi; ++z) {
        const std::int64_t den = mod(c * z + d, q);
        im[static_cast<std::size_t>(z)] =
            den == 0 ? static_cast<std::uint32_t>(q)
                     : static_cast<std::uint32_t>(mod((a * z + b) % qi * static_cast<std::int64_t>(inv_mod(den, q)), q));
    }
    im[q] = c == 0 ? static_cast<std::uint32_t>(q) : static_cast<std::uint32_t>(mod(a * static_cast<std::int64_t>(inv_mod(c, q)), q));
    return Perm(std::move(im));
}

std::vector<Perm> psl2_generators(std::uint64_t q) { return {moebius_perm(1, 1, 0, 1, q), moebius_perm(0, -1, 1, 0, q)}; }

std::optional<Perm> find_element_of_order(const std::vector<Perm>& gens, std::uint64_t target, std::uint64_t seed,
                                          std::size_t max_tries) {
    if (gens.empty()) throw std::invalid_argument("find_element_of_order: no generators");
    if (target == 1) return Perm::identity(gens.front().degree());
    std::mt19937_64 rng(seed);
    std::vector<Perm> letters = gens;
    for (const auto& g : gens) letters.push_back(g.inverse());
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    std::uniform_int_distribution<std::size_t> length(1, 32);
    for (std::size_t t = 0; t < max_tries; ++t) {
        Perm w = Perm::identity(gens.front().degree());
        for (std::size_t i = length(rng); i > 0; --i) w = compose(w, letters[pick(rng)]);
        const std::uint64_t o = order(w);
        if (o % target == 0) return power(w, static_cast<std::int64_t>(o / target));
    }
    return std::nullopt;
}

}  // namespace sdc
