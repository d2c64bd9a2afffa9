#include "sdc/perms.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "sdc/codes.hpp"
#include "sdc/modrep.hpp"

namespace sdc {

Perm::Perm(std::vector<std::uint32_t> image) : image_(std::move(image)) {
    std::vector<bool> hit(image_.size(), false);
    for (auto x : image_) {
        if (x >= image_.size() || hit[x]) throw std::invalid_argument("Perm: image list is not a bijection");
        hit[x] = true;
    }
}

Perm Perm::identity(std::size_t n) {
    std::vector<std::uint32_t> im(n);
    std::iota(im.begin(), im.end(), 0u);
    return Perm(std::move(im));
}

Perm Perm::from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
    std::vector<std::uint32_t> im(n);
    std::iota(im.begin(), im.end(), 0u);
    std::vector<bool> seen(n, false);
    for (const auto& cyc : cycles) {
        for (std::size_t j = 0; j < cyc.size(); ++j) {
            const std::size_t a = cyc[j];
            const std::size_t b = cyc[(j + 1) % cyc.size()];
            if (a < 1 || a > n || b < 1 || b > n)
                throw std::invalid_argument("cycle point " + std::to_string(a < 1 || a > n ? a : b) +
                                            " outside 1.." + std::to_string(n));
            if (seen[a - 1]) throw std::invalid_argument("point " + std::to_string(a) + " appears in two cycles");
            seen[a - 1] = true;
            im[a - 1] = static_cast<std::uint32_t>(b - 1);
        }
    }
    return Perm(std::move(im));
}

namespace {

std::size_t parse_point(const std::string& tok) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char ch) { return std::isdigit(ch); }))
        throw std::invalid_argument("bad permutation point '" + tok + "'");
    return std::stoul(tok);
}

}  // namespace

Perm Perm::parse(std::string_view text, std::optional<std::size_t> degree) {
    std::string s(text);
    // Optional "deg=N" prefix.
    static const std::regex deg_re(R"(^\s*deg\s*=\s*(\d+)\s*)");
    std::smatch m;
    if (std::regex_search(s, m, deg_re)) {
        degree = std::stoul(m[1].str());
        s = m.suffix().str();
    }
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        if (!degree) throw std::invalid_argument("empty permutation text without a degree");
        return identity(*degree);
    }

    if (s[first] == '(') {
        std::vector<std::vector<std::size_t>> cycles;
        std::size_t max_point = 0;
        std::size_t pos = first;
        while (pos < s.size()) {
            if (std::isspace(static_cast<unsigned char>(s[pos]))) {
                ++pos;
                continue;
            }
            if (s[pos] != '(') throw std::invalid_argument("expected '(' at offset " + std::to_string(pos));
            const auto close = s.find(')', pos);
            if (close == std::string::npos) throw std::invalid_argument("unterminated cycle");
            std::string body = s.substr(pos + 1, close - pos - 1);
            std::replace(body.begin(), body.end(), ',', ' ');
            std::istringstream in(body);
            std::vector<std::size_t> cyc;
            for (std::string tok; in >> tok;) {
                cyc.push_back(parse_point(tok));
                max_point = std::max(max_point, cyc.back());
            }
            if (!cyc.empty()) cycles.push_back(std::move(cyc));
            pos = close + 1;
        }
        const std::size_t n = degree.value_or(max_point);
        return from_cycles(n, cycles);
    }

    std::istringstream in(s);
    std::vector<std::uint32_t> im;
    for (std::string tok; in >> tok;) {
        const std::size_t v = parse_point(tok);
        if (v < 1) throw std::invalid_argument("one-line images are 1-indexed");
        im.push_back(static_cast<std::uint32_t>(v - 1));
    }
    if (degree && *degree != im.size())
        throw std::invalid_argument("one-line permutation has " + std::to_string(im.size()) + " images, expected " +
                                    std::to_string(*degree));
    return Perm(std::move(im));
}

Perm Perm::inverse() const {
    std::vector<std::uint32_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<std::uint32_t>(i);
    return Perm(std::move(inv));
}

std::vector<std::vector<std::size_t>> Perm::cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> cyc;
        for (std::size_t j = i; !seen[j]; j = image_[j]) {
            seen[j] = true;
            cyc.push_back(j);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string Perm::to_string() const {
    std::string s;
    for (const auto& cyc : cycles()) {
        if (cyc.size() == 1) continue;
        s += '(';
        for (std::size_t j = 0; j < cyc.size(); ++j) {
            if (j) s += ',';
            s += std::to_string(cyc[j] + 1);
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

BitVector Perm::apply(const BitVector& v) const {
    if (v.size() != image_.size()) throw std::invalid_argument("Perm::apply: degree differs from vector length");
    BitVector out(v.size());
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (v.get(i)) out.set(image_[i]);
    return out;
}

Perm compose(const Perm& s, const Perm& t) {
    if (s.degree() != t.degree()) throw std::invalid_argument("compose: degree mismatch");
    std::vector<std::uint32_t> im(s.degree());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = static_cast<std::uint32_t>(t(s(i)));
    return Perm(std::move(im));
}

Perm power(const Perm& s, std::int64_t e) {
    // Cycle-wise: the image of the element at position j is the one at j + e.
    std::vector<std::uint32_t> im(s.degree());
    for (const auto& cyc : s.cycles()) {
        const auto len = static_cast<std::int64_t>(cyc.size());
        const std::int64_t shift = ((e % len) + len) % len;
        for (std::size_t j = 0; j < cyc.size(); ++j)
            im[cyc[j]] = static_cast<std::uint32_t>(cyc[static_cast<std::size_t>((static_cast<std::int64_t>(j) + shift) % len)]);
    }
    return Perm(std::move(im));
}

std::uint64_t order(const Perm& s) {
    std::uint64_t o = 1;
    for (const auto& cyc : s.cycles()) o = std::lcm(o, static_cast<std::uint64_t>(cyc.size()));
    return o;
}

// ---------------------------------------------------------------------------

AutType AutType::parse(std::string_view text) {
    static const std::regex prime_re(R"(^\s*(\d+)\s*-\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$)");
    static const std::regex two_p_re(
        R"(^\s*2\s*(?:\*|·|x)\s*(\d+)\s*-\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*;\s*(\d+)\s*\)\s*$)");
    const std::string s(text);
    std::smatch m;
    auto num = [&](int i) { return static_cast<std::size_t>(std::stoul(m[i].str())); };
    if (std::regex_match(s, m, prime_re)) return prime(static_cast<unsigned>(num(1)), num(2), num(3));
    if (std::regex_match(s, m, two_p_re)) return two_p(static_cast<unsigned>(num(1)), num(2), num(3), num(4), num(5));
    throw std::invalid_argument("cannot parse cycle type '" + s + "'");
}

std::size_t AutType::degree() const {
    if (form == Form::prime) return p * alpha + beta;
    return 2 * alpha + p * beta + 2 * p * gamma + delta;
}

std::string AutType::to_string() const {
    std::ostringstream out;
    if (form == Form::prime)
        out << p << "-(" << alpha << ',' << beta << ')';
    else
        out << "2*" << p << "-(" << alpha << ',' << beta << ',' << gamma << ';' << delta << ')';
    return out.str();
}

AutType AutType::square_type() const {
    if (form != Form::two_p) throw std::invalid_argument("square_type: needs a 2p-form type");
    return prime(p, beta + 2 * gamma, 2 * alpha + delta);
}

AutType AutType::pth_power_type() const {
    if (form != Form::two_p) throw std::invalid_argument("pth_power_type: needs a 2p-form type");
    return involution(alpha + p * gamma, p * beta + delta);
}

AutType aut_type(const Perm& s, unsigned p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("aut_type: " + std::to_string(p) + " is not an odd prime");
    const std::uint64_t ord = order(s);
    std::vector<std::size_t> by_length(s.degree() + 1, 0);
    for (const auto& cyc : s.cycles()) ++by_length[cyc.size()];
    const auto count = [&](std::size_t len) { return len < by_length.size() ? by_length[len] : std::size_t{0}; };
    if (ord == p) return AutType::prime(p, count(p), count(1));
    if (ord == 2) return AutType::involution(count(2), count(1));
    if (ord == 2ull * p) return AutType::two_p(p, count(2), count(p), count(2 * p), count(1));
    throw std::invalid_argument("aut_type: permutation has order " + std::to_string(ord) + ", expected 2, " +
                                std::to_string(p) + " or " + std::to_string(2 * p));
}

bool is_automorphism(const LinearCode& c, const Perm& s) { return permute(c, s) == c; }

LinearCode fixed_vectors(const LinearCode& c, const Perm& s) {
    if (s.degree() != c.length()) throw std::invalid_argument("fixed_vectors: degree differs from code length");
    // Messages m with (m G)^s = m G, i.e. m (G^s + G) = 0.
    const BitMatrix& g = c.generator();
    BitMatrix diff(0, c.length());
    for (const auto& r : g.row_list()) diff.append_row(s.apply(r) ^ r);
    const BitMatrix msgs = left_kernel(diff);
    BitMatrix out(0, c.length());
    for (const auto& m : msgs.row_list()) out.append_row(g.combine(m));
    return LinearCode(out);
}

LinearCode fixed_subcode(const LinearCode& c, const Perm& s) {
    if (!is_automorphism(c, s))
        throw std::invalid_argument("fixed_subcode: " + s.to_string() + " is not an automorphism of the code");
    return fixed_vectors(c, s);
}

LinearCode orbit_projection(const LinearCode& cfix, const Perm& s) {
    if (s.degree() != cfix.length()) throw std::invalid_argument("orbit_projection: degree differs from code length");
    const auto orbits = s.cycles();
    BitMatrix out(0, orbits.size());
    for (const auto& r : cfix.generator().row_list()) {
        BitVector v(orbits.size());
        for (std::size_t j = 0; j < orbits.size(); ++j) {
            const bool bit = r.get(orbits[j].front());
            for (auto i : orbits[j]) {
                if (r.get(i) != bit) {
                    std::string desc = "{";
                    for (std::size_t t = 0; t < orbits[j].size(); ++t)
                        desc += (t ? "," : "") + std::to_string(orbits[j][t] + 1);
                    throw std::invalid_argument("orbit_projection: generator is not constant on orbit " + desc + "}");
                }
            }
            v.set(j, bit);
        }
        out.append_row(std::move(v));
    }
    return LinearCode(out);
}

LinearCode orbit_lift(const LinearCode& a, const Perm& s) {
    const auto orbits = s.cycles();
    if (orbits.size() != a.length())
        throw std::invalid_argument("orbit_lift: code length " + std::to_string(a.length()) + " differs from orbit count " +
                                    std::to_string(orbits.size()));
    BitMatrix out(0, s.degree());
    for (const auto& r : a.generator().row_list()) {
        BitVector v(s.degree());
        for (std::size_t j = 0; j < orbits.size(); ++j)
            if (r.get(j))
                for (auto i : orbits[j]) v.set(i);
        out.append_row(std::move(v));
    }
    return LinearCode(out);
}

LinearCode phi_map(const LinearCode& c, const Perm& h) {
    if (h.degree() != c.length()) throw std::invalid_argument("phi_map: degree differs from code length");
    const auto orbits = h.cycles();
    for (const auto& o : orbits)
        if (o.size() != 2)
            throw std::invalid_argument("phi_map: h must be a fixed-point-free involution (found a " +
                                        std::to_string(o.size()) + "-cycle at point " + std::to_string(o.front() + 1) +
                                        ")");
    BitMatrix out(0, orbits.size());
    for (const auto& r : c.generator().row_list()) {
        BitVector v(orbits.size());
        for (std::size_t j = 0; j < orbits.size(); ++j) v.set(j, r.get(orbits[j][0]) != r.get(orbits[j][1]));
        out.append_row(std::move(v));
    }
    return LinearCode(out);
}

}  // namespace sdc
