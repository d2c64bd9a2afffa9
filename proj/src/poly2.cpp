#include "sdc/poly2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sdc {

Poly2 Poly2::from_exponents(const std::vector<std::size_t>& exps) {
    Poly2 f;
    for (auto e : exps) f.set_coeff(e, !f.coeff(e));
    return f;
}

Poly2 Poly2::monomial(std::size_t e) {
    Poly2 f;
    f.set_coeff(e, true);
    return f;
}

long Poly2::degree() const {
    if (words_.empty()) return -1;
    return static_cast<long>((words_.size() - 1) * kWordBits + (kWordBits - 1 - std::countl_zero(words_.back())));
}

void Poly2::set_coeff(std::size_t i, bool v) {
    if (i / kWordBits >= words_.size()) {
        if (!v) return;
        words_.resize(i / kWordBits + 1, 0);
    }
    const word_t mask = word_t{1} << (i % kWordBits);
    if (v)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
    trim();
}

void Poly2::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Poly2& Poly2::operator+=(const Poly2& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
    trim();
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 out;
    if (a.is_zero() || b.is_zero()) return out;
    out.words_.assign(a.words_.size() + b.words_.size(), 0);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        for (word_t w = a.words_[i]; w; w &= w - 1) {
            const std::size_t shift = i * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
            const std::size_t ws = shift / kWordBits;
            const std::size_t bs = shift % kWordBits;
            for (std::size_t j = 0; j < b.words_.size(); ++j) {
                out.words_[ws + j] ^= b.words_[j] << bs;
                if (bs) out.words_[ws + j + 1] ^= b.words_[j] >> (kWordBits - bs);
            }
        }
    }
    out.trim();
    return out;
}

bool operator<(const Poly2& a, const Poly2& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.words_.size(); i-- > 0;)
        if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    return false;
}

Poly2 Poly2::reciprocal() const {
    Poly2 r;
    const long d = degree();
    for (long i = 0; i <= d; ++i)
        if (coeff(static_cast<std::size_t>(i))) r.set_coeff(static_cast<std::size_t>(d - i), true);
    return r;
}

std::string Poly2::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (long i = degree(); i >= 0; --i) {
        if (!coeff(static_cast<std::size_t>(i))) continue;
        if (!s.empty()) s += '+';
        if (i == 0)
            s += '1';
        else if (i == 1)
            s += 'x';
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

PolyDivision divmod(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    PolyDivision res{Poly2{}, a};
    const long db = b.degree();
    for (long dr = res.remainder.degree(); dr >= db; dr = res.remainder.degree()) {
        const auto shift = static_cast<std::size_t>(dr - db);
        res.quotient.set_coeff(shift, true);
        res.remainder += b * Poly2::monomial(shift);
    }
    return res;
}

Poly2 operator%(const Poly2& a, const Poly2& b) { return divmod(a, b).remainder; }

Poly2 gcd(Poly2 a, Poly2 b) {
    while (!b.is_zero()) {
        Poly2 r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly2 mulmod(const Poly2& a, const Poly2& b, const Poly2& m) { return (a * b) % m; }

}  // namespace sdc
