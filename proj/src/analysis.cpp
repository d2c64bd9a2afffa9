#include "sdc/analysis.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "sdc/modrep.hpp"

namespace sdc {

// ---------------------------------------------------------------------------
// BestKnownTable

BestKnownTable BestKnownTable::read_csv(std::istream& in) {
    BestKnownTable t;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
        line.erase(std::remove_if(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; }), line.end());
        if (!header_seen) {
            if (line != "n,k,d_upper")
                throw std::invalid_argument("line " + std::to_string(lineno) + ": expected header 'n,k,d_upper'");
            header_seen = true;
            continue;
        }
        std::istringstream row(line);
        std::size_t n = 0, k = 0, d = 0;
        char c1 = 0, c2 = 0;
        std::string extra;
        if (!(row >> n >> c1 >> k >> c2 >> d) || c1 != ',' || c2 != ',' || (row >> extra))
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'n,k,d_upper', got '" + line + "'");
        t.set(n, k, d);
    }
    if (!header_seen) throw std::invalid_argument("best-known table is empty: expected header 'n,k,d_upper'");
    return t;
}

BestKnownTable BestKnownTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open table file '" + path + "'");
    return read_csv(in);
}

BestKnownTable BestKnownTable::shipped() {
    BestKnownTable t;
    t.set(60, 39, 10);
    return t;
}

std::optional<std::size_t> BestKnownTable::bound(std::size_t n, std::size_t k) const {
    const auto it = entries_.find({n, k});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

bool BestKnownTable::is_monotone() const {
    for (const auto& [key, d] : entries_) {
        const auto next = entries_.find({key.first, key.second + 1});
        if (next != entries_.end() && next->second > d) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Reports

bool TrailStep::holds() const {
    switch (rel) {
        case Relation::eq: return lhs == rhs;
        case Relation::ne: return lhs != rhs;
        case Relation::lt: return lhs < rhs;
        case Relation::le: return lhs <= rhs;
        case Relation::gt: return lhs > rhs;
        case Relation::ge: return lhs >= rhs;
    }
    return false;
}

std::string TrailStep::to_string() const {
    static constexpr const char* sym[] = {"=", "!=", "<", "<=", ">", ">="};
    return label + ": " + std::to_string(lhs) + " " + sym[static_cast<int>(rel)] + " " + std::to_string(rhs) +
           (holds() ? "" : "  [fails]");
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::excluded: return "excluded";
        case Verdict::not_excluded: return "not-excluded";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

bool ExclusionReport::replay() const {
    if (verdict != Verdict::excluded) return true;
    return !trail.empty() && std::all_of(trail.begin(), trail.end(), [](const TrailStep& s) { return s.holds(); });
}

// ---------------------------------------------------------------------------
// Bounds

std::uint64_t griesmer_min_length(std::uint64_t k, std::uint64_t d) {
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (i >= 63 || (d >> i) == 0) {
            // ceil(d / 2^i) is 1 from here on.
            total += k - i;
            break;
        }
        const std::uint64_t div = std::uint64_t{1} << i;
        total += (d + div - 1) / div;
    }
    return total;
}

std::size_t coro2_bound(std::size_t n, unsigned p) {
    if (n % 4 != 0) throw std::invalid_argument("coro2_bound: n = " + std::to_string(n) + " is not divisible by 4");
    const unsigned s = s_of_p(p);
    if (s % 2 != 0)
        throw std::invalid_argument("coro2_bound: s(" + std::to_string(p) + ") = " + std::to_string(s) + " is odd");
    return n / 4 + (p - 1) / 2;
}

std::vector<AutType> feasible_2p_types(std::size_t n, unsigned p, const std::vector<AutType>& p_types,
                                       const std::vector<AutType>& involution_types) {
    auto listed = [](const std::vector<AutType>& list, const AutType& t) {
        return std::find(list.begin(), list.end(), t) != list.end();
    };
    std::vector<AutType> out;
    for (std::size_t alpha = 0; 2 * alpha <= n; ++alpha)
        for (std::size_t beta = 0; 2 * alpha + p * beta <= n; ++beta)
            for (std::size_t gamma = 0; 2 * alpha + p * beta + 2 * p * gamma <= n; ++gamma) {
                const std::size_t delta = n - 2 * alpha - p * beta - 2 * p * gamma;
                const AutType t = AutType::two_p(p, alpha, beta, gamma, delta);
                if (listed(p_types, t.square_type()) && listed(involution_types, t.pth_power_type())) out.push_back(t);
            }
    return out;
}

std::vector<AutType> length120_prime_types() {
    return {AutType::prime(29, 4, 4),  AutType::prime(23, 5, 5), AutType::prime(19, 6, 6),
            AutType::prime(7, 17, 1),  AutType::prime(5, 24, 0), AutType::prime(3, 40, 0)};
}

std::vector<AutType> length120_involution_types() { return {AutType::involution(48, 24), AutType::involution(60, 0)}; }

ExclusionReport exclude_order_2p_at_boundary(unsigned p, std::size_t d_min) {
    if (!is_odd_prime(p)) throw std::invalid_argument("exclude_order_2p_at_boundary: p must be an odd prime");
    const std::size_t n = 2 * p + 2;
    ExclusionReport r;
    r.claim = "no automorphism of order " + std::to_string(2 * p) + " in a self-dual code of length " +
              std::to_string(n) + " with d > 4 and fixed-point-free involutions";
    r.premises.push_back({"involutions in Aut(C) are fixed-point-free", "hypothesis"});
    r.premises.push_back({"minimum distance d(C) = " + std::to_string(d_min), "hypothesis"});

    const unsigned s = s_of_p(p);
    r.premises.push_back({"s(" + std::to_string(p) + ") = " + std::to_string(s), "computed"});
    if (d_min <= 4) {
        r.verdict = Verdict::inconclusive;
        r.note = "requires d(C) > 4";
        r.trail.push_back({"d(C) > 4", static_cast<std::int64_t>(d_min), Relation::gt, 4});
        return r;
    }
    if (s % 2 != 0) {
        r.verdict = Verdict::inconclusive;
        r.note = "s(" + std::to_string(p) + ") = " + std::to_string(s) + " is odd; the argument needs s(p) even";
        r.trail.push_back({"s(p) mod 2", s % 2, Relation::eq, 0});
        return r;
    }

    // h = g^p fixed-point-free forces cycles of length 2 and 2p only, and
    // n = 2p x + 2w with x >= 1 leaves x = w = 1.
    const std::size_t x = 1, w = 1;
    const auto nn = static_cast<std::int64_t>(n);
    r.trail.push_back({"n = 2p x + 2w with x = 1, w = 1", static_cast<std::int64_t>(2 * p * x + 2 * w), Relation::eq, nn});
    r.trail.push_back({"w odd", static_cast<std::int64_t>(w % 2), Relation::eq, 1});
    r.trail.push_back({"n mod 4", nn % 4, Relation::eq, 0});
    r.trail.push_back({"s(p) even", s % 2, Relation::eq, 0});
    const auto bound = static_cast<std::int64_t>(coro2_bound(n, p));
    r.trail.push_back({"dim pi(C(h)) >= n/4 + (p-1)/2", bound, Relation::eq, static_cast<std::int64_t>(p)});
    const std::int64_t proj_len = nn / 2;
    // Singleton: an [N, K] code has d <= N - K + 1.
    const std::int64_t proj_d_upper = proj_len - bound + 1;
    r.trail.push_back({"Singleton bound on d(pi(C(h))) for [" + std::to_string(proj_len) + ", >=" +
                           std::to_string(bound) + "]",
                       proj_d_upper, Relation::le, 2});
    // A weight-t word of pi(C(h)) lifts to a weight-2t word of C.
    const auto proj_d_lower = static_cast<std::int64_t>((d_min + 1) / 2);
    r.trail.push_back({"d(pi(C(h))) >= ceil(d(C)/2)", proj_d_lower, Relation::ge, 3});
    r.trail.push_back({"contradiction: Singleton bound < required distance", proj_d_upper, Relation::lt, proj_d_lower});
    r.verdict = Verdict::excluded;
    return r;
}

std::uint64_t corollary_prime_bound(std::uint64_t m, PrimeBoundMode mode) {
    if (m < 1) throw std::invalid_argument("corollary_prime_bound: m must be >= 1");
    if (mode == PrimeBoundMode::crude) return 6 * m - 1;
    std::uint64_t best = 0;
    for (std::uint64_t p = 3; p <= 6 * m - 1; p += 2) {
        if (!is_odd_prime(p)) continue;
        if (griesmer_min_length(6 * m + (p - 1) / 2, 2 * m + 2) <= 12 * m) best = p;
    }
    return best;
}

ExclusionReport exclude_order_38(const BestKnownTable& table) {
    constexpr unsigned p = 19;
    constexpr std::size_t n = 120;
    constexpr std::size_t d_code = 24;
    ExclusionReport r;
    r.claim = "no element of order 38 in the automorphism group of a self-dual [120,60,24] code";
    r.premises.push_back({"admissible prime-order types 29-(4,4), 23-(5,5), 19-(6,6), 7-(17,1), 5-(24,0), 3-(40,0)",
                          "cited: classification of automorphisms of prime order for [120,60,24]"});
    r.premises.push_back({"admissible involution types 2-(48,24), 2-(60,0)",
                          "cited: classification of involutions for [120,60,24]"});

    const auto types = feasible_2p_types(n, p, length120_prime_types(), length120_involution_types());
    std::string listing;
    for (const auto& t : types) listing += (listing.empty() ? "" : ", ") + t.to_string();
    r.premises.push_back({"feasible order-38 types: {" + listing + "}", "computed"});
    r.trail.push_back({"number of feasible order-38 types", static_cast<std::int64_t>(types.size()), Relation::eq, 1});
    if (types.size() != 1 || types.front() != AutType::two_p(p, 3, 0, 3, 0)) {
        r.verdict = Verdict::inconclusive;
        r.note = "cycle-type premise did not reduce to 2*19-(3,0,3;0)";
        return r;
    }
    const AutType& t = types.front();
    const std::size_t h_fixed = t.pth_power_type().beta;
    r.trail.push_back({"fixed points of h = g^19", static_cast<std::int64_t>(h_fixed), Relation::eq, 0});
    r.trail.push_back({"w = number of 2-cycles, odd", static_cast<std::int64_t>(t.alpha % 2), Relation::eq, 1});
    r.trail.push_back({"n mod 4", static_cast<std::int64_t>(n % 4), Relation::eq, 0});
    const unsigned s = s_of_p(p);
    r.premises.push_back({"s(19) = " + std::to_string(s), "computed"});
    r.trail.push_back({"s(19) even", s % 2, Relation::eq, 0});
    const auto k_lower = static_cast<std::int64_t>(coro2_bound(n, p));
    r.trail.push_back({"dim pi(C(h)) >= 120/4 + (19-1)/2", k_lower, Relation::eq, 39});
    const auto d_required = static_cast<std::int64_t>(d_code / 2);
    r.trail.push_back({"d(pi(C(h))) >= d(C)/2", d_required, Relation::eq, 12});

    const auto proj_len = static_cast<std::size_t>(n / 2);
    const auto bound = table.bound(proj_len, static_cast<std::size_t>(k_lower));
    if (!bound) {
        r.verdict = Verdict::inconclusive;
        r.note = "missing premise: best-known bound for [60,39]";
        return r;
    }
    r.premises.push_back({"every [60,39] code has d <= " + std::to_string(*bound), "table: best-known linear codes"});
    const TrailStep last{"contradiction: table bound for [60,39] < required distance", static_cast<std::int64_t>(*bound),
                         Relation::lt, d_required};
    r.trail.push_back(last);
    r.verdict = last.holds() ? Verdict::excluded : Verdict::not_excluded;
    if (!last.holds()) r.note = "table bound does not contradict d >= 12";
    return r;
}

}  // namespace sdc
