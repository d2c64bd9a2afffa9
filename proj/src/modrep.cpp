#include "sdc/modrep.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace sdc {

bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

unsigned s_of_p(unsigned p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("s_of_p: " + std::to_string(p) + " is not an odd prime");
    unsigned s = 1;
    for (std::uint64_t v = 2 % p; v != 1; v = (v * 2) % p) ++s;
    return s;
}

namespace {

// Splits g, a product of distinct irreducibles all of degree d, by gcds with
// random traces Tr(a) = a + a^2 + ... + a^(2^(d-1)) mod g.
void equal_degree_split(const Poly2& g, std::size_t d, std::mt19937_64& rng, std::vector<Poly2>& out) {
    if (static_cast<std::size_t>(g.degree()) == d) {
        out.push_back(g);
        return;
    }
    const auto deg = static_cast<std::size_t>(g.degree());
    for (;;) {
        Poly2 a;
        for (std::size_t i = 0; i < deg; ++i)
            if (rng() & 1u) a.set_coeff(i, true);
        if (a.degree() < 1) continue;
        Poly2 trace = a;
        Poly2 term = a;
        for (std::size_t i = 1; i < d; ++i) {
            term = mulmod(term, term, g);
            trace += term;
        }
        Poly2 f = gcd(g, trace);
        if (f.degree() > 0 && f.degree() < g.degree()) {
            equal_degree_split(f, d, rng, out);
            equal_degree_split(divmod(g, f).quotient, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<Poly2> factor_x_p_minus_1(unsigned p, std::uint64_t seed) {
    if (!is_odd_prime(p)) throw std::invalid_argument("factor_x_p_minus_1: " + std::to_string(p) + " is not an odd prime");
    std::mt19937_64 rng(seed);
    Poly2 rest = Poly2::from_exponents({p, 0});
    const Poly2 x = Poly2::monomial(1);
    std::vector<Poly2> factors;
    Poly2 frob = x;  // x^(2^d) mod rest
    for (std::size_t d = 1; rest.degree() >= static_cast<long>(2 * d); ++d) {
        frob = mulmod(frob, frob, rest);
        Poly2 g = gcd(rest, frob + x);
        if (g.degree() > 0) {
            equal_degree_split(g, d, rng, factors);
            rest = divmod(rest, g).quotient;
            frob = frob % rest;
        }
    }
    if (rest.degree() > 0) factors.push_back(rest);

    std::sort(factors.begin(), factors.end());
    // x + 1 sorts first among the degree-1 factors and is the only one.
    return factors;
}

std::vector<std::size_t> reciprocal_pairing(const std::vector<Poly2>& factors) {
    std::vector<std::size_t> pairing(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const Poly2 r = factors[i].reciprocal();
        const auto it = std::find(factors.begin(), factors.end(), r);
        if (it == factors.end()) throw std::logic_error("reciprocal of " + factors[i].to_string() + " is not a factor");
        pairing[i] = static_cast<std::size_t>(it - factors.begin());
    }
    return pairing;
}

std::vector<std::size_t> self_dual_irreducibles(unsigned p) {
    const auto factors = factor_x_p_minus_1(p);
    const auto pairing = reciprocal_pairing(factors);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (pairing[i] == i) out.push_back(i);
    return out;
}

std::size_t ModuleDecomposition::module_dimension() const {
    std::size_t d = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) d += (2 * y[i] + z[i]) * factor_degree(i);
    return d;
}

std::size_t ModuleDecomposition::socle_dimension() const {
    std::size_t d = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) d += (y[i] + z[i]) * factor_degree(i);
    return d;
}

std::vector<std::string> self_dual_constraint_violations(const ModuleDecomposition& d) {
    std::vector<std::string> bad;
    auto str = [](std::size_t v) { return std::to_string(v); };
    if (2 * d.y[0] + d.z[0] != d.x + d.w)
        bad.push_back("2y_0 + z_0 = " + str(2 * d.y[0] + d.z[0]) + " but x + w = " + str(d.x + d.w));
    for (std::size_t i = 1; i < d.factors.size(); ++i) {
        if (d.s % 2 == 0) {
            if (2 * d.y[i] + d.z[i] != d.x)
                bad.push_back("2y_" + str(i) + " + z_" + str(i) + " = " + str(2 * d.y[i] + d.z[i]) + " but x = " + str(d.x));
        } else {
            const std::size_t j = d.pairing[i];
            if (d.z[i] != d.z[j]) bad.push_back("z_" + str(i) + " != z_" + str(j));
            if (d.y[i] + d.y[j] + d.z[i] != d.x)
                bad.push_back("y_" + str(i) + " + y_" + str(j) + " + z_" + str(i) + " = " +
                              str(d.y[i] + d.y[j] + d.z[i]) + " but x = " + str(d.x));
        }
    }
    return bad;
}

BitVector apply_poly(const Poly2& f, const Perm& q, const BitVector& v) {
    BitVector acc(v.size());
    BitVector term = v;
    for (long j = 0; j <= f.degree(); ++j) {
        if (f.coeff(static_cast<std::size_t>(j))) acc ^= term;
        term = q.apply(term);
    }
    return acc;
}

namespace {

struct Setting {
    Perm h;
    AutType type;
};

Setting validate_setting(const LinearCode& c, const Perm& g, unsigned p, const char* who) {
    const std::string me(who);
    if (!is_odd_prime(p)) throw std::invalid_argument(me + ": " + std::to_string(p) + " is not an odd prime");
    if (g.degree() != c.length()) throw std::invalid_argument(me + ": permutation degree differs from code length");
    if (order(g) != 2ull * p)
        throw std::invalid_argument(me + ": g has order " + std::to_string(order(g)) + ", expected 2p = " +
                                    std::to_string(2 * p));
    Perm h = power(g, p);
    for (const auto& cyc : h.cycles())
        if (cyc.size() == 1)
            throw std::invalid_argument(me + ": h = g^p fixes point " + std::to_string(cyc.front() + 1) +
                                        "; it must be fixed-point-free");
    if (!is_automorphism(c, g)) throw std::invalid_argument(me + ": g is not an automorphism of the code");
    return {std::move(h), aut_type(g, p)};
}

// Dimension of the image of (s + 1) on the span of `rows`.
std::size_t rank_of_plus_one(const std::vector<BitVector>& rows, const Perm& s, std::size_t n) {
    BitMatrix m(0, n);
    for (const auto& r : rows) m.append_row(s.apply(r) ^ r);
    return rank(m);
}

}  // namespace

ModuleDecomposition decompose(const LinearCode& c, const Perm& g, unsigned p) {
    const Setting st = validate_setting(c, g, p, "decompose");
    ModuleDecomposition d;
    d.p = p;
    d.s = s_of_p(p);
    d.nu = (p - 1) / d.s;
    d.factors = factor_x_p_minus_1(p);
    d.pairing = reciprocal_pairing(d.factors);
    d.x = st.type.gamma;
    d.w = st.type.alpha;
    d.n = c.length();
    d.k = c.dimension();

    const Perm q = power(g, 2);
    const BitMatrix& gen = c.generator();
    for (const auto& f : d.factors) {
        BitMatrix images(0, c.length());
        for (const auto& r : gen.row_list()) images.append_row(apply_poly(f, q, r));
        std::vector<BitVector> piece;
        const BitMatrix msgs = left_kernel(images);
        for (const auto& m : msgs.row_list()) piece.push_back(gen.combine(m));

        const auto deg = static_cast<std::size_t>(f.degree());
        const std::size_t socle_rank = rank_of_plus_one(piece, st.h, c.length());
        if (piece.size() % deg != 0 || socle_rank % deg != 0)
            throw std::logic_error("decompose: isotypic piece for " + f.to_string() + " has dimension " +
                                   std::to_string(piece.size()) + " not divisible by its degree");
        d.y.push_back(socle_rank / deg);
        d.z.push_back(piece.size() / deg - 2 * d.y.back());
    }

    if (d.module_dimension() != d.k)
        throw std::logic_error("decompose: isotypic pieces span " + std::to_string(d.module_dimension()) +
                               " dimensions, code has " + std::to_string(d.k));
    if (is_self_dual(c)) {
        if (const auto bad = self_dual_constraint_violations(d); !bad.empty())
            throw std::logic_error("decompose: self-dual multiplicity constraint violated: " + bad.front());
    }
    return d;
}

bool is_projective(const LinearCode& c, const Perm& g, unsigned p) {
    if (c.dimension() % 2 != 0)
        throw std::invalid_argument("is_projective: code dimension " + std::to_string(c.dimension()) +
                                    " is odd, so the code cannot be free over <h>");
    const Setting st = validate_setting(c, g, p, "is_projective");
    return 2 * rank_of_plus_one(c.generator().row_list(), st.h, c.length()) == c.dimension();
}

std::size_t quotient_dimension(const ModuleDecomposition& d) {
    std::size_t rest = 0;
    for (std::size_t i = 1; i < d.z.size(); ++i) rest += d.z[i];
    return d.z.at(0) + d.s * rest;
}

}  // namespace sdc
