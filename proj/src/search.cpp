#include "sdc/search.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sdc/modrep.hpp"

namespace sdc {

namespace {

const std::vector<BitVector>& key(const LinearCode& c) { return c.generator().row_list(); }

SurvivorCertificate certify(const LinearCode& c) {
    SurvivorCertificate cert;
    cert.weights = weight_enumerator(c);
    cert.min_distance = cert.weights.min_nonzero_weight();
    cert.doubly_even = is_doubly_even(c);
    return cert;
}

}  // namespace

// ---------------------------------------------------------------------------
// [8,4,4]

SearchOutcome enumerate_selfdual_8_4_4() {
    SearchOutcome out;
    std::set<std::vector<BitVector>> seen;
    std::deque<LinearCode> queue;

    for (std::uint32_t bits = 0; bits < (1u << 16); ++bits) {
        ++out.examined;
        BitMatrix g(4, 8);
        for (std::size_t i = 0; i < 4; ++i) {
            g.set(i, i);
            for (std::size_t j = 0; j < 4; ++j)
                if ((bits >> (4 * i + j)) & 1u) g.set(i, 4 + j);
        }
        // A A^T = I over GF(2)
        bool ok = true;
        for (std::size_t i = 0; i < 4 && ok; ++i)
            for (std::size_t j = i; j < 4 && ok; ++j) {
                const unsigned ri = (bits >> (4 * i)) & 0xfu, rj = (bits >> (4 * j)) & 0xfu;
                ok = (std::popcount(ri & rj) & 1) == (i == j ? 1 : 0);
            }
        if (!ok) continue;
        LinearCode c(g);
        if (seen.insert(key(c)).second) queue.push_back(std::move(c));
    }

    // Adjacent transpositions generate S_8.
    std::vector<Perm> swaps;
    for (std::size_t i = 0; i + 1 < 8; ++i) swaps.push_back(Perm::from_cycles(8, {{i + 1, i + 2}}));
    std::vector<LinearCode> all;
    while (!queue.empty()) {
        LinearCode c = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : swaps) {
            LinearCode img = permute(c, s);
            if (seen.insert(key(img)).second) queue.push_back(std::move(img));
        }
        all.push_back(std::move(c));
    }

    const LinearCode hamming = extended_hamming8();
    std::sort(all.begin(), all.end(), [](const LinearCode& a, const LinearCode& b) { return key(a) < key(b); });
    for (auto& c : all) {
        if (!is_self_dual(c) || min_distance(c) != 4) continue;
        SurvivorCertificate cert = certify(c);
        cert.witness = equivalent_small(hamming, c);
        out.survivors.push_back(std::move(c));
        out.certificates.push_back(std::move(cert));
    }
    std::ostringstream note;
    note << all.size() << " self-dual [8,4] codes in total";
    out.note = note.str();
    return out;
}

// ---------------------------------------------------------------------------
// Order 58

Perm build_g58() {
    std::vector<std::uint32_t> im(120);
    // g = q^15 t, where q is the product of the four 29-cycles and t swaps
    // block b with its partner; then g^2 = q^30 = q and g^29 = q^435 t = t.
    for (std::uint32_t pair = 0; pair < 2; ++pair) {
        const std::uint32_t a = 58 * pair, b = a + 29;
        for (std::uint32_t i = 0; i < 29; ++i) {
            im[a + i] = b + (i + 15) % 29;
            im[b + i] = a + (i + 15) % 29;
        }
    }
    im[116] = 117;
    im[117] = 116;
    im[118] = 119;
    im[119] = 118;
    return Perm(std::move(im));
}

Perm build_g58_interleaved() {
    std::vector<std::vector<std::size_t>> cycles;
    for (std::size_t pair = 0; pair < 2; ++pair) {
        const std::size_t a = 58 * pair + 1, b = a + 29;
        std::vector<std::size_t> cyc;
        for (std::size_t i = 0; i < 29; ++i) {
            cyc.push_back(a + i);
            cyc.push_back(b + i);
        }
        cycles.push_back(std::move(cyc));
    }
    cycles.push_back({117, 118});
    cycles.push_back({119, 120});
    return Perm::from_cycles(120, cycles);
}

namespace {

LinearCode checked_lift(const LinearCode& a, const Perm& g) {
    if (a.length() != 8)
        throw std::invalid_argument("pullback: code length " + std::to_string(a.length()) + ", expected 8");
    if (g.degree() != 120)
        throw std::invalid_argument("pullback: permutation degree " + std::to_string(g.degree()) +
                                    ", expected 120");
    if (order(g) != 58 || aut_type(g, 29) != AutType::two_p(29, 2, 0, 2, 0))
        throw std::invalid_argument("pullback: g must have type 2*29-(2,0,2;0)");
    return orbit_lift(a, power(g, 2));
}

}  // namespace

std::size_t pullback_fixed_dim(const LinearCode& a, const Perm& g) { return fixed_vectors(checked_lift(a, g), g).dimension(); }

std::size_t pullback_min_distance(const LinearCode& a, const Perm& g) { return min_distance(checked_lift(a, g)); }

std::vector<StructureCase> order58_structure_cases(std::size_t dim_fixed_g) {
    constexpr unsigned p = 29;
    constexpr std::size_t x = 2, w = 2, n = 120;
    ModuleDecomposition base;
    base.p = p;
    base.s = s_of_p(p);
    base.nu = (p - 1) / base.s;
    base.factors = factor_x_p_minus_1(p);
    base.pairing = reciprocal_pairing(base.factors);
    base.x = x;
    base.w = w;
    base.n = n;
    base.k = n / 2;
    if (base.nu != 1) throw std::logic_error("order58_structure_cases: expected one nontrivial module");

    std::vector<StructureCase> out;
    for (std::size_t y1 = 0; 2 * y1 <= x; ++y1)
        for (std::size_t y0 = 0; 2 * y0 <= x + w; ++y0) {
            const std::size_t z0 = x + w - 2 * y0, z1 = x - 2 * y1;
            if (y0 + z0 != dim_fixed_g) continue;
            ModuleDecomposition d = base;
            d.y = {y0, y1};
            d.z = {z0, z1};
            if (!self_dual_constraint_violations(d).empty() || d.module_dimension() != d.k) continue;

            StructureCase sc;
            sc.label = std::string(1, static_cast<char>('a' + out.size()));
            sc.y = d.y;
            sc.z = d.z;
            sc.dim_fixed_g = y0 + z0;
            sc.dim_b = d.socle_dimension();
            const auto dim_b = static_cast<std::int64_t>(sc.dim_b);
            sc.trail.push_back({"dimension identity", static_cast<std::int64_t>(d.module_dimension()), Relation::eq, 60});
            sc.trail.push_back({"dim B = dim C(g^29) = socle dimension", dim_b, Relation::eq, 30});
            sc.trail.push_back({"Singleton bound on d(B), [60, " + std::to_string(sc.dim_b) + "]", 60 - dim_b + 1,
                                Relation::ge, 12});
            sc.admissible = std::all_of(sc.trail.begin(), sc.trail.end(), [](const TrailStep& s) { return s.holds(); });
            out.push_back(std::move(sc));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Bordered double circulants

namespace {

inline std::uint64_t rotl(std::uint64_t r, unsigned t, unsigned l, std::uint64_t mask) {
    return t == 0 ? r : ((r << t) | (r >> (l - t))) & mask;
}

std::uint64_t reverse_bits(std::uint64_t r, unsigned l) {
    std::uint64_t out = 0;
    for (unsigned i = 0; i < l; ++i)
        if ((r >> i) & 1u) out |= std::uint64_t{1} << (l - 1 - i);
    return out;
}

// Smallest among all rotations of r and of its reversal.
bool is_bracelet_rep(std::uint64_t r, unsigned l, std::uint64_t mask) {
    const std::uint64_t rev = reverse_bits(r, l);
    for (unsigned t = 0; t < l; ++t)
        if (rotl(r, t, l, mask) < r || rotl(rev, t, l, mask) < r) return false;
    return true;
}

}  // namespace

Perm bordered_dc_shift(std::size_t l) {
    std::vector<std::uint32_t> im(2 * l + 2);
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = static_cast<std::uint32_t>(i);
    for (std::size_t block : {std::size_t{1}, l + 2})
        for (std::size_t i = 0; i < l; ++i) im[block + i] = static_cast<std::uint32_t>(block + (i + 1) % l);
    return Perm(std::move(im));
}

std::vector<WeightEnumerator> weight_classes(const SearchOutcome& outcome) {
    std::vector<WeightEnumerator> classes;
    for (const auto& cert : outcome.certificates)
        if (std::find(classes.begin(), classes.end(), cert.weights) == classes.end()) classes.push_back(cert.weights);
    return classes;
}

SearchOutcome search_bordered_dc(std::size_t l, const DcSearchOptions& opt) {
    if (l < 3 || l > 63) throw std::invalid_argument("search_bordered_dc: l must be in [3, 63]");
    if (opt.shard_count == 0 || opt.shard_index >= opt.shard_count)
        throw std::invalid_argument("search_bordered_dc: shard index " + std::to_string(opt.shard_index) +
                                    " out of range for " + std::to_string(opt.shard_count) + " shards");
    const auto ll = static_cast<unsigned>(l);
    const std::uint64_t mask = (std::uint64_t{1} << ll) - 1;
    const std::uint64_t total = std::uint64_t{1} << ll;
    // Shards are contiguous ranges of first rows, i.e. fixed high-bit prefixes
    // when shard_count is a power of two.
    const std::uint64_t lo = total / opt.shard_count * opt.shard_index;
    const std::uint64_t hi = opt.shard_index + 1 == opt.shard_count ? total : total / opt.shard_count * (opt.shard_index + 1);

    SearchOutcome out;
    std::set<std::vector<BitVector>> seen;
    for (std::uint64_t r = lo; r < hi; ++r) {
        if (opt.budget != 0 && out.examined >= opt.budget) {
            out.complete = false;
            out.note = "budget of " + std::to_string(opt.budget) + " first rows exhausted at row " + std::to_string(r);
            break;
        }
        ++out.examined;

        // (I | M) is self-dual iff M M^T = I. For the circulant rows this
        // needs every cyclic autocorrelation of r to share one parity.
        const unsigned wt = static_cast<unsigned>(std::popcount(r)) & 1u;
        const unsigned ac = static_cast<unsigned>(std::popcount(r & rotl(r, 1, ll, mask))) & 1u;
        bool ok = true;
        for (unsigned t = 2; t <= ll / 2 && ok; ++t)
            ok = (static_cast<unsigned>(std::popcount(r & rotl(r, t, ll, mask))) & 1u) == ac;
        if (!ok) continue;

        bool rep_checked = false, rep = false;
        for (unsigned bits = 0; bits < 8; ++bits) {
            const Border b = Border::from_bits(bits);
            const unsigned top = b.top_fill, left = b.left_fill, corner = b.corner;
            if (((corner + ll * top) & 1u) != 1u) continue;    // row 0 with itself
            if (((corner * left + top * wt) & 1u) != 0u) continue;  // row 0 with row i
            if (((left + wt) & 1u) != 1u) continue;              // row i with itself
            if (ac != left) continue;                            // row i with row j
            if (!rep_checked) {
                rep = is_bracelet_rep(r, ll, mask);
                rep_checked = true;
            }
            if (!rep) break;

            BitVector first(l);
            for (std::size_t i = 0; i < l; ++i) first.set(i, (r >> i) & 1u);
            LinearCode c = bordered_double_circulant(first, b);
            if (!is_self_dual(c)) throw std::logic_error("search_bordered_dc: self-duality filter admitted a non-self-dual code");
            if (!min_distance_at_least(c, opt.d_target, opt.enumeration)) continue;
            if (!seen.insert(key(c)).second) continue;
            SurvivorCertificate cert;
            cert.weights = weight_enumerator(c, opt.enumeration);
            cert.min_distance = cert.weights.min_nonzero_weight();
            cert.doubly_even = is_doubly_even(c);
            std::ostringstream note;
            note << "first_row=" << first.to_string() << " border=" << bits;
            cert.note = note.str();
            cert.first_row = r;
            cert.border = bits;
            out.survivors.push_back(std::move(c));
            out.certificates.push_back(std::move(cert));
        }
    }
    return out;
}

std::vector<std::uint64_t> min_word_intersections(const LinearCode& c, std::size_t d, const EnumerationOptions& opt) {
    const auto words = codewords_of_weight(c, d, opt);
    std::vector<std::uint64_t> hist(d + 1, 0);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) ++hist[(words[i] & words[j]).weight()];
    return hist;
}

DcClassification classify_bordered_dc(const SearchOutcome& outcome, std::size_t l, const EnumerationOptions& opt) {
    if (l < 3 || l > 63) throw std::invalid_argument("classify_bordered_dc: l must be in [3, 63]");
    const auto ll = static_cast<unsigned>(l);
    const std::uint64_t mask = (std::uint64_t{1} << ll) - 1;
    const std::size_t count = outcome.survivors.size();
    DcClassification out;
    out.weight_classes = weight_classes(outcome).size();

    auto canonical = [&](std::uint64_t r) {
        std::uint64_t best = r;
        const std::uint64_t rev = reverse_bits(r, ll);
        for (unsigned t = 0; t < ll; ++t) best = std::min({best, rotl(r, t, ll, mask), rotl(rev, t, ll, mask)});
        return best;
    };
    std::map<std::pair<std::uint64_t, unsigned>, std::size_t> index;
    for (std::size_t i = 0; i < count; ++i)
        index[{outcome.certificates[i].first_row, outcome.certificates[i].border}] = i;

    std::vector<std::size_t> parent(count);
    for (std::size_t i = 0; i < count; ++i) parent[i] = i;
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < count; ++i) {
        const auto& cert = outcome.certificates[i];
        for (std::uint64_t a = 2; a < l; ++a) {
            if (std::gcd(a, static_cast<std::uint64_t>(l)) != 1) continue;
            std::uint64_t img = 0;
            for (std::uint64_t j = 0; j < l; ++j)
                if ((cert.first_row >> j) & 1u) img |= std::uint64_t{1} << ((a * j) % l);
            const auto it = index.find({canonical(img), cert.border});
            if (it == index.end())
                throw std::logic_error("classify_bordered_dc: multiplier image missing from the survivors");
            parent[find(i)] = find(it->second);
        }
    }

    std::map<std::size_t, std::size_t> orbit_ids;
    std::vector<std::size_t> rep_of_orbit;
    out.orbit_of.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto [it, fresh] = orbit_ids.try_emplace(find(i), orbit_ids.size());
        if (fresh) rep_of_orbit.push_back(i);
        out.orbit_of[i] = it->second;
    }
    out.multiplier_orbits = orbit_ids.size();

    std::map<std::vector<std::uint64_t>, std::size_t> invariant_ids;
    std::vector<std::size_t> class_of_orbit;
    for (std::size_t rep : rep_of_orbit) {
        const auto inv =
            min_word_intersections(outcome.survivors[rep], outcome.certificates[rep].min_distance, opt);
        class_of_orbit.push_back(invariant_ids.try_emplace(inv, invariant_ids.size()).first->second);
    }
    out.invariant_classes = invariant_ids.size();
    out.class_of.resize(count);
    for (std::size_t i = 0; i < count; ++i) out.class_of[i] = class_of_orbit[out.orbit_of[i]];
    return out;
}

}  // namespace sdc
