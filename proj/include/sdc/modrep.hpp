#pragma once
// Modules over GF(2)<g> for g of order 2p (p an odd prime) acting on a code.
//
// The irreducible modules of the cyclic group of order p correspond to the
// irreducible factors of x^p - 1 over GF(2): factor 0 is x + 1 (the trivial
// module), the other nu = (p-1)/s(p) factors all have degree s(p). A module's
// dual corresponds to the reciprocal polynomial.
//
// Under g, a g-invariant code splits into isotypic pieces C_i = C ∩ ker f_i(g^2).
// Each piece is W_i^{y_i} + V_i^{z_i}, where W_i is the projective cover (a
// nonsplit self-extension of V_i) and V_i is the bare irreducible. The
// involution h = g^p acts trivially on V_i and maps each W_i onto its socle, so
// rank(h + 1) on C_i equals deg(f_i) * y_i.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sdc/codes.hpp"
#include "sdc/perms.hpp"
#include "sdc/poly2.hpp"

namespace sdc {

bool is_odd_prime(std::uint64_t p);

/// Multiplicative order of 2 modulo the odd prime p.
unsigned s_of_p(unsigned p);

/// Irreducible factors of x^p - 1 over GF(2): x + 1 first, the rest sorted.
/// Distinct-degree then equal-degree (trace) splitting with a per-call
/// generator seeded by `seed`.
std::vector<Poly2> factor_x_p_minus_1(unsigned p, std::uint64_t seed = 0x5dc0de);

/// Indices of self-reciprocal factors (the self-dual irreducible modules).
std::vector<std::size_t> self_dual_irreducibles(unsigned p);

/// pairing[i] = index of the reciprocal of factor i.
std::vector<std::size_t> reciprocal_pairing(const std::vector<Poly2>& factors);

struct ModuleDecomposition {
    unsigned p = 0;
    unsigned s = 0;   // s(p)
    unsigned nu = 0;  // (p - 1) / s(p)
    std::vector<Poly2> factors;
    std::vector<std::size_t> pairing;
    std::vector<std::size_t> y;  // projective cover multiplicities
    std::vector<std::size_t> z;  // bare irreducible multiplicities
    std::size_t x = 0;           // 2p-cycles of g
    std::size_t w = 0;           // 2-cycles of g
    std::size_t n = 0;
    std::size_t k = 0;

    std::size_t factor_degree(std::size_t i) const { return static_cast<std::size_t>(factors[i].degree()); }
    /// sum_i (2 y_i + z_i) deg f_i
    std::size_t module_dimension() const;
    /// sum_i (y_i + z_i) deg f_i, the dimension of the socle under h, i.e. dim C(h).
    std::size_t socle_dimension() const;
};

/// Human-readable list of violated multiplicity constraints for a self-dual
/// code: 2y_0 + z_0 = x + w; 2y_i + z_i = x (s even); z_i = z_pair(i) and
/// y_i + y_pair(i) + z_i = x (s odd). Empty when all hold.
std::vector<std::string> self_dual_constraint_violations(const ModuleDecomposition& d);

/// Requires g to be an automorphism of c of order 2p with g^p fixed-point-free;
/// each failure is a distinct std::invalid_argument. When c is self-dual the
/// multiplicity constraints are verified before returning.
ModuleDecomposition decompose(const LinearCode& c, const Perm& g, unsigned p);

/// True iff rank(h + 1) on c is dim(c) / 2. Refuses odd dim(c).
bool is_projective(const LinearCode& c, const Perm& g, unsigned p);

/// z_0 + s(p) * sum_{i>=1} z_i, the dimension of phi(C)^perp / phi(C).
std::size_t quotient_dimension(const ModuleDecomposition& d);

/// Applies f(Q) to v, where Q permutes coordinates by q.
BitVector apply_poly(const Poly2& f, const Perm& q, const BitVector& v);

}  // namespace sdc
