#pragma once
// Permutations of code coordinates, cycle types, and the maps between a code
// and its fixed subcodes.
//
// Permutations act on the right: i^(st) = (i^s)^t. A codeword v is sent to
// v^s with (v^s)[i^s] = v[i].

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/gf2.hpp"

namespace sdc {

class LinearCode;

class Perm {
public:
    Perm() = default;
    /// 0-indexed image list; throws std::invalid_argument unless it is a bijection.
    explicit Perm(std::vector<std::uint32_t> image);

    static Perm identity(std::size_t n);
    /// Builds a permutation from 1-indexed cycles; unlisted points are fixed.
    static Perm from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles);
    /// Text syntax: optional "deg=N" prefix, then cycle notation "(1,2)(3,4)" or a
    /// one-line image "2 1 4 3". All points 1-indexed. `degree` supplies the degree
    /// from context when the text does not.
    static Perm parse(std::string_view text, std::optional<std::size_t> degree = std::nullopt);

    std::size_t degree() const { return image_.size(); }
    std::size_t operator()(std::size_t i) const { return image_[i]; }
    const std::vector<std::uint32_t>& images() const { return image_; }

    Perm inverse() const;
    /// Cycles (0-indexed) including fixed points, each starting at its minimum, sorted by minimum.
    std::vector<std::vector<std::size_t>> cycles() const;
    /// 1-indexed cycle notation with fixed points omitted; "()" for the identity.
    std::string to_string() const;
    BitVector apply(const BitVector& v) const;

    friend bool operator==(const Perm&, const Perm&) = default;

private:
    std::vector<std::uint32_t> image_;
};

Perm compose(const Perm& s, const Perm& t);
Perm power(const Perm& s, std::int64_t e);
std::uint64_t order(const Perm& s);

/// Cycle census in the notation p-(alpha,beta) (alpha p-cycles, beta fixed points)
/// or 2p-(alpha,beta,gamma;delta) (2-cycles, p-cycles, 2p-cycles, fixed points).
/// Involutions use the prime form with p = 2.
struct AutType {
    enum class Form { prime, two_p };

    Form form = Form::prime;
    unsigned p = 0;
    std::size_t alpha = 0;
    std::size_t beta = 0;
    std::size_t gamma = 0;
    std::size_t delta = 0;

    static AutType prime(unsigned p, std::size_t alpha, std::size_t beta) {
        return {Form::prime, p, alpha, beta, 0, 0};
    }
    static AutType involution(std::size_t two_cycles, std::size_t fixed) { return prime(2, two_cycles, fixed); }
    static AutType two_p(unsigned p, std::size_t alpha, std::size_t beta, std::size_t gamma, std::size_t delta) {
        return {Form::two_p, p, alpha, beta, gamma, delta};
    }
    /// Accepts "29-(4,4)", "2-(60,0)", "2*29-(2,0,2;0)" and "2·29-(2,0,2;0)".
    static AutType parse(std::string_view text);

    std::size_t degree() const;
    std::string to_string() const;

    /// Type of g^2 for a 2p-form element: p-(beta + 2 gamma, 2 alpha + delta).
    AutType square_type() const;
    /// Type of g^p for a 2p-form element: 2-(alpha + p gamma, p beta + delta).
    AutType pth_power_type() const;

    friend bool operator==(const AutType&, const AutType&) = default;
};

/// Throws std::invalid_argument naming the order unless order(s) is 2, p or 2p.
AutType aut_type(const Perm& s, unsigned p);

bool is_automorphism(const LinearCode& c, const Perm& s);

/// Codewords of c fixed by s, without requiring s to be an automorphism.
LinearCode fixed_vectors(const LinearCode& c, const Perm& s);
/// C(s); throws std::invalid_argument when s is not an automorphism of c.
LinearCode fixed_subcode(const LinearCode& c, const Perm& s);
/// Reads one coordinate per s-orbit (orbits ordered by minimum) from an
/// orbit-constant code. Throws naming the first orbit a generator is not constant on.
LinearCode orbit_projection(const LinearCode& cfix, const Perm& s);
/// Sums each codeword across the 2-cycles of a fixed-point-free involution h.
LinearCode phi_map(const LinearCode& c, const Perm& h);
/// Inverse of orbit_projection: spreads each coordinate over its s-orbit.
LinearCode orbit_lift(const LinearCode& a, const Perm& s);

}  // namespace sdc
