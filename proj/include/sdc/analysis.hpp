#pragma once
// Bound machinery and exclusion arguments for automorphisms of order 2p.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdc/perms.hpp"

namespace sdc {

/// Upper bounds on the minimum distance of any [n, >= k] binary code, taken
/// as trusted external data. CSV layout: header "n,k,d_upper", integer rows.
class BestKnownTable {
public:
    BestKnownTable() = default;

    static BestKnownTable read_csv(std::istream& in);
    static BestKnownTable load(const std::string& path);
    /// The single entry the length-120 order-38 argument relies on: (60, 39) -> 10.
    static BestKnownTable shipped();

    void set(std::size_t n, std::size_t k, std::size_t d_upper) { entries_[{n, k}] = d_upper; }
    void erase(std::size_t n, std::size_t k) { entries_.erase({n, k}); }
    std::optional<std::size_t> bound(std::size_t n, std::size_t k) const;
    /// bound(n, k) >= bound(n, k + 1) wherever both entries are present.
    bool is_monotone() const;
    const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& entries() const { return entries_; }

private:
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> entries_;
};

enum class Relation { eq, ne, lt, le, gt, ge };

/// One arithmetic fact in an argument, re-checkable on its own.
struct TrailStep {
    std::string label;
    std::int64_t lhs = 0;
    Relation rel = Relation::eq;
    std::int64_t rhs = 0;

    bool holds() const;
    std::string to_string() const;
};

struct Premise {
    std::string fact;
    std::string source;  // "cited: ...", "computed", or "table: ..."
};

enum class Verdict { excluded, not_excluded, inconclusive };
std::string to_string(Verdict v);

struct ExclusionReport {
    std::string claim;
    std::vector<Premise> premises;
    std::vector<TrailStep> trail;
    Verdict verdict = Verdict::inconclusive;
    std::string note;

    /// Re-evaluates every step; for an excluded verdict all of them must hold.
    bool replay() const;
};

/// sum_{i=0}^{k-1} ceil(d / 2^i)
std::uint64_t griesmer_min_length(std::uint64_t k, std::uint64_t d);

/// n/4 + (p-1)/2; requires 4 | n and s(p) even.
std::size_t coro2_bound(std::size_t n, unsigned p);

/// Every 2p-(alpha,beta,gamma;delta) of degree n whose square has a type in
/// `p_types` and whose p-th power has a type in `involution_types`.
std::vector<AutType> feasible_2p_types(std::size_t n, unsigned p, const std::vector<AutType>& p_types,
                                       const std::vector<AutType>& involution_types);

/// Prime-order and involution types admissible in a self-dual [120,60,24] code.
std::vector<AutType> length120_prime_types();
std::vector<AutType> length120_involution_types();

/// Length 2p + 2 argument: no element of order 2p when s(p) is even and d_min > 4.
ExclusionReport exclude_order_2p_at_boundary(unsigned p, std::size_t d_min);

enum class PrimeBoundMode { crude, refined };
/// Largest admissible p for an extremal code of length 24m with a
/// 2p-(w,0,x;0) automorphism, w odd: 6m - 1 (crude), or the largest prime p
/// with griesmer_min_length(6m + (p-1)/2, 2m + 2) <= 12m (refined).
std::uint64_t corollary_prime_bound(std::uint64_t m, PrimeBoundMode mode);

/// No element of order 38 in a self-dual [120,60,24] code.
ExclusionReport exclude_order_38(const BestKnownTable& table);

}  // namespace sdc
