#pragma once
// Dense polynomials over GF(2), lowest degree first.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sdc/gf2.hpp"

namespace sdc {

class Poly2 {
public:
    Poly2() = default;
    /// Polynomial with the given exponents set, e.g. {3, 1, 0} = x^3 + x + 1.
    static Poly2 from_exponents(const std::vector<std::size_t>& exps);
    static Poly2 monomial(std::size_t e);
    static Poly2 one() { return monomial(0); }

    bool is_zero() const { return words_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const;
    bool coeff(std::size_t i) const {
        return i / kWordBits < words_.size() && ((words_[i / kWordBits] >> (i % kWordBits)) & 1u);
    }
    void set_coeff(std::size_t i, bool v);

    Poly2& operator+=(const Poly2& o);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend bool operator==(const Poly2&, const Poly2&) = default;
    friend bool operator<(const Poly2& a, const Poly2& b);

    /// x^deg f(1/x).
    Poly2 reciprocal() const;
    std::string to_string() const;

private:
    void trim();
    std::vector<word_t> words_;
};

struct PolyDivision {
    Poly2 quotient;
    Poly2 remainder;
};

PolyDivision divmod(const Poly2& a, const Poly2& b);
Poly2 operator%(const Poly2& a, const Poly2& b);
Poly2 gcd(Poly2 a, Poly2 b);
Poly2 mulmod(const Poly2& a, const Poly2& b, const Poly2& m);

}  // namespace sdc
