#include "sdc/codes.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <bitset>
#include <fstream>
#include <functional>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace sdc {

LinearCode::LinearCode(const BitMatrix& generators) : n_(generators.cols()) {
    auto red = rref(generators);
    std::vector<BitVector> rows(red.matrix.row_list().begin(),
                                red.matrix.row_list().begin() + static_cast<std::ptrdiff_t>(red.rank));
    gen_ = BitMatrix(n_, std::move(rows));
    pivots_ = std::move(red.pivots);
}

LinearCode LinearCode::zero(std::size_t n) { return LinearCode(BitMatrix(0, n)); }
LinearCode LinearCode::full(std::size_t n) { return LinearCode(BitMatrix::identity(n)); }

bool LinearCode::contains(const BitVector& v) const {
    if (v.size() != n_) throw std::invalid_argument("contains: vector length differs from code length");
    BitVector rest = v;
    for (std::size_t r = 0; r < gen_.rows(); ++r)
        if (rest.get(pivots_[r])) rest ^= gen_.row(r);
    return rest.is_zero();
}

bool LinearCode::contains(const LinearCode& sub) const {
    return std::all_of(sub.generator().row_list().begin(), sub.generator().row_list().end(),
                       [&](const BitVector& v) { return contains(v); });
}

LinearCode dual(const LinearCode& c) { return LinearCode(kernel(c.generator())); }

LinearCode sum(const LinearCode& a, const LinearCode& b) {
    if (a.length() != b.length()) throw std::invalid_argument("sum: length mismatch");
    BitMatrix m = a.generator();
    for (const auto& r : b.generator().row_list()) m.append_row(r);
    return LinearCode(m);
}

LinearCode intersect(const LinearCode& a, const LinearCode& b) { return dual(sum(dual(a), dual(b))); }

LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
    const std::size_t n = a.length() + b.length();
    BitMatrix m(0, n);
    for (const auto& r : a.generator().row_list()) {
        BitVector v(n);
        for (std::size_t i = 0; i < a.length(); ++i) v.set(i, r.get(i));
        m.append_row(std::move(v));
    }
    for (const auto& r : b.generator().row_list()) {
        BitVector v(n);
        for (std::size_t i = 0; i < b.length(); ++i) v.set(a.length() + i, r.get(i));
        m.append_row(std::move(v));
    }
    return LinearCode(m);
}

bool is_self_orthogonal(const LinearCode& c) {
    const auto& rows = c.generator().row_list();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
            if (dot(rows[i], rows[j])) return false;
    return true;
}

bool is_self_dual(const LinearCode& c) { return 2 * c.dimension() == c.length() && is_self_orthogonal(c); }

bool is_doubly_even(const LinearCode& c) {
    const auto& rows = c.generator().row_list();
    return is_self_orthogonal(c) &&
           std::all_of(rows.begin(), rows.end(), [](const BitVector& r) { return r.weight() % 4 == 0; });
}

namespace {

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

struct EnumerationPlan {
    unsigned log2_block;
    std::uint64_t blocks;
};

EnumerationPlan plan_for(std::size_t k) {
    const unsigned log2_block = k > 8 ? static_cast<unsigned>(k - 8) : 0;
    return {log2_block, std::uint64_t{1} << (k - log2_block)};
}

// Workers pull groups of 4 consecutive blocks so that SIMD kernels always see
// full lane groups except possibly at the very end.
void run_blocks(const EnumerationPlan& plan, unsigned threads,
                const std::function<bool(kernels::BlockRange)>& work) {
    constexpr std::uint64_t kGroup = 4;
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> stop{false};
    auto worker = [&] {
        for (;;) {
            if (stop.load(std::memory_order_relaxed)) return;
            const std::uint64_t first = next.fetch_add(kGroup);
            if (first >= plan.blocks) return;
            const std::uint64_t count = std::min(kGroup, plan.blocks - first);
            if (!work({first, count, plan.log2_block})) stop = true;
        }
    };
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, (plan.blocks + kGroup - 1) / kGroup));
    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

std::size_t scan_min_weight(const LinearCode& c, std::size_t stop_below, const EnumerationOptions& opt) {
    const std::size_t k = c.dimension();
    if (k == 0) throw std::invalid_argument("min_distance: the zero code has no nonzero codewords");
    if (k > kMinDistanceMaxDim)
        throw BudgetExceeded("min_distance: dimension " + std::to_string(k) + " exceeds the enumeration budget of " +
                             std::to_string(kMinDistanceMaxDim));
    const kernels::PackedGenerator gen(c.generator());
    const auto& kt = kernels::table(opt.isa);
    std::mutex mu;
    std::size_t best = c.length() + 1;
    run_blocks(plan_for(k), resolve_threads(opt.threads), [&](kernels::BlockRange r) {
        const std::size_t local = kt.min_weight(gen, r, stop_below);
        std::lock_guard lock(mu);
        best = std::min(best, local);
        return best >= stop_below;
    });
    return best;
}

}  // namespace

std::size_t min_distance(const LinearCode& c, const EnumerationOptions& opt) { return scan_min_weight(c, 0, opt); }

bool min_distance_at_least(const LinearCode& c, std::size_t d, const EnumerationOptions& opt) {
    return scan_min_weight(c, d, opt) >= d;
}

std::size_t WeightEnumerator::min_nonzero_weight() const {
    for (std::size_t w = 1; w < counts.size(); ++w)
        if (counts[w]) return w;
    return counts.size();
}

WeightEnumerator weight_enumerator(const LinearCode& c, const EnumerationOptions& opt) {
    const std::size_t k = c.dimension();
    if (k > kWeightEnumeratorMaxDim)
        throw BudgetExceeded("weight_enumerator: dimension " + std::to_string(k) +
                             " exceeds the enumeration budget of " + std::to_string(kWeightEnumeratorMaxDim));
    WeightEnumerator we{std::vector<std::uint64_t>(c.length() + 1, 0)};
    if (k == 0) {
        we.counts[0] = 1;
        return we;
    }
    const kernels::PackedGenerator gen(c.generator());
    const auto& kt = kernels::table(opt.isa);
    std::mutex mu;
    run_blocks(plan_for(k), resolve_threads(opt.threads), [&](kernels::BlockRange r) {
        std::vector<std::uint64_t> local(c.length() + 1, 0);
        kt.histogram(gen, r, local);
        std::lock_guard lock(mu);
        for (std::size_t w = 0; w < local.size(); ++w) we.counts[w] += local[w];
        return true;
    });
    return we;
}

std::vector<BitVector> codewords_of_weight(const LinearCode& c, std::size_t w, const EnumerationOptions& opt) {
    const std::size_t k = c.dimension();
    if (k > kMinDistanceMaxDim)
        throw BudgetExceeded("codewords_of_weight: dimension " + std::to_string(k) +
                             " exceeds the enumeration budget of " + std::to_string(kMinDistanceMaxDim));
    if (k == 0) return w == 0 ? std::vector<BitVector>{BitVector(c.length())} : std::vector<BitVector>{};
    const kernels::PackedGenerator gen(c.generator());
    std::mutex mu;
    std::vector<BitVector> out;
    run_blocks(plan_for(k), resolve_threads(opt.threads), [&](kernels::BlockRange r) {
        std::vector<BitVector> local;
        std::vector<word_t> cw(gen.stride);
        const std::uint64_t len = std::uint64_t{1} << r.log2_block;
        for (std::uint64_t b = r.first_block; b < r.first_block + r.block_count; ++b) {
            kernels::codeword_at(gen, b << r.log2_block, cw.data());
            for (std::uint64_t i = 0;; ++i) {
                std::size_t wt = 0;
                for (word_t x : cw) wt += static_cast<std::size_t>(std::popcount(x));
                if (wt == w) local.push_back(BitVector::from_words(c.length(), cw));
                if (i + 1 == len) break;
                const word_t* row = gen.row(static_cast<std::size_t>(std::countr_zero(i + 1)));
                for (std::size_t j = 0; j < gen.stride; ++j) cw[j] ^= row[j];
            }
        }
        std::lock_guard lock(mu);
        out.insert(out.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

LinearCode permute(const LinearCode& c, const Perm& s) {
    if (s.degree() != c.length()) throw std::invalid_argument("permute: permutation degree differs from code length");
    BitMatrix m(0, c.length());
    for (const auto& r : c.generator().row_list()) m.append_row(s.apply(r));
    return LinearCode(m);
}

// ---------------------------------------------------------------------------
// Small-length equivalence by backtracking over coordinate images.

namespace {

constexpr std::size_t kMaxSmallWords = std::size_t{1} << kSmallEquivalenceMaxLength;

struct SmallCode {
    std::size_t n;
    std::vector<std::uint32_t> words;
    std::vector<std::vector<std::uint32_t>> column_invariant;  // per coordinate: weight histogram of words hitting it
};

SmallCode small_code(const LinearCode& c) {
    if (c.length() > kSmallEquivalenceMaxLength)
        throw BudgetExceeded("equivalence search supports length <= " + std::to_string(kSmallEquivalenceMaxLength) +
                             ", got " + std::to_string(c.length()));
    SmallCode sc{c.length(), {}, {}};
    const std::size_t k = c.dimension();
    std::vector<std::uint32_t> rows;
    for (const auto& r : c.generator().row_list()) rows.push_back(static_cast<std::uint32_t>(r.words()[0]));
    for (std::uint32_t m = 0; m < (1u << k); ++m) {
        std::uint32_t w = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (m >> i & 1u) w ^= rows[i];
        sc.words.push_back(w);
    }
    sc.column_invariant.assign(sc.n, std::vector<std::uint32_t>(sc.n + 1, 0));
    for (auto w : sc.words)
        for (std::size_t i = 0; i < sc.n; ++i)
            if (w >> i & 1u) ++sc.column_invariant[i][static_cast<std::size_t>(std::popcount(w))];
    return sc;
}

// Set of restrictions of the code to an ordered coordinate list.
std::bitset<kMaxSmallWords> restriction_set(const SmallCode& c, const std::vector<std::size_t>& coords) {
    std::bitset<kMaxSmallWords> seen;
    for (auto w : c.words) {
        std::size_t pat = 0;
        for (std::size_t j = 0; j < coords.size(); ++j)
            if (w >> coords[j] & 1u) pat |= std::size_t{1} << j;
        seen.set(pat);
    }
    return seen;
}

class EquivalenceSearch {
public:
    EquivalenceSearch(const SmallCode& a, const SmallCode& b) : a_(a), b_(b), used_(b.n, false) {}

    /// Extends `image` (images of coordinates 0..image.size()-1) to a full
    /// equivalence a -> b; returns true and leaves the result in `image`.
    bool extend(std::vector<std::size_t>& image) {
        const std::size_t t = image.size();
        if (t == a_.n) return true;
        for (std::size_t x = 0; x < b_.n; ++x) {
            if (used_[x] || a_.column_invariant[t] != b_.column_invariant[x]) continue;
            image.push_back(x);
            if (consistent(image)) {
                used_[x] = true;
                if (extend(image)) return true;
                used_[x] = false;
            }
            image.pop_back();
        }
        return false;
    }

    void mark_used(const std::vector<std::size_t>& image) {
        std::fill(used_.begin(), used_.end(), false);
        for (auto x : image) used_[x] = true;
    }

private:
    bool consistent(const std::vector<std::size_t>& image) const {
        std::vector<std::size_t> prefix(image.size());
        for (std::size_t i = 0; i < image.size(); ++i) prefix[i] = i;
        return restriction_set(a_, prefix) == restriction_set(b_, image);
    }

    const SmallCode& a_;
    const SmallCode& b_;
    std::vector<bool> used_;
};

Perm to_perm(const std::vector<std::size_t>& image) {
    std::vector<std::uint32_t> im(image.begin(), image.end());
    return Perm(std::move(im));
}

}  // namespace

std::optional<Perm> equivalent_small(const LinearCode& a, const LinearCode& b) {
    if (a.length() != b.length()) throw std::invalid_argument("equivalent_small: lengths differ");
    const SmallCode sa = small_code(a);
    const SmallCode sb = small_code(b);
    if (a.dimension() != b.dimension()) return std::nullopt;
    EquivalenceSearch search(sa, sb);
    std::vector<std::size_t> image;
    if (!search.extend(image)) return std::nullopt;
    Perm s = to_perm(image);
    if (permute(a, s) != b) throw std::logic_error("equivalent_small: backtracking produced a non-equivalence");
    return s;
}

std::uint64_t aut_order_small(const LinearCode& c) {
    const SmallCode sc = small_code(c);
    // |Aut| = product over t of the orbit size of t under the pointwise
    // stabilizer of 0..t-1.
    std::uint64_t order = 1;
    std::vector<std::size_t> base;
    for (std::size_t t = 0; t < sc.n; ++t) {
        std::uint64_t orbit = 0;
        for (std::size_t x = 0; x < sc.n; ++x) {
            if (std::find(base.begin(), base.end(), x) != base.end()) continue;
            std::vector<std::size_t> image = base;
            image.push_back(x);
            EquivalenceSearch search(sc, sc);
            search.mark_used(image);
            std::vector<std::size_t> prefix(image.size());
            for (std::size_t i = 0; i < image.size(); ++i) prefix[i] = i;
            if (sc.column_invariant[t] != sc.column_invariant[x] ||
                restriction_set(sc, prefix) != restriction_set(sc, image))
                continue;
            if (search.extend(image)) ++orbit;
        }
        order *= orbit;
        base.push_back(t);
    }
    return order;
}

// ---------------------------------------------------------------------------
// Text format.

LinearCode read_code(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') continue;
            line = line.substr(first, line.find_last_not_of(" \t") - first + 1);
            return true;
        }
        return false;
    };
    auto fail = [&](const std::string& msg) -> std::invalid_argument {
        return std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
    };

    if (!next_line()) throw std::invalid_argument("code file is empty: expected header 'n k'");
    std::size_t n = 0;
    std::size_t k = 0;
    {
        std::istringstream hdr(line);
        std::string extra;
        if (!(hdr >> n >> k) || (hdr >> extra)) throw fail("expected header 'n k', got '" + line + "'");
    }
    if (k > n) throw fail("dimension " + std::to_string(k) + " exceeds length " + std::to_string(n));

    BitMatrix m(0, n);
    for (std::size_t r = 0; r < k; ++r) {
        if (!next_line()) throw fail("expected " + std::to_string(k) + " generator rows, found " + std::to_string(r));
        if (line.size() != n)
            throw fail("row has " + std::to_string(line.size()) + " characters, expected " + std::to_string(n));
        try {
            m.append_row(BitVector::from_string(line));
        } catch (const std::invalid_argument& e) {
            throw fail(e.what());
        }
    }
    if (next_line()) throw fail("unexpected content after " + std::to_string(k) + " generator rows");
    LinearCode c(m);
    if (c.dimension() != k)
        throw std::invalid_argument("generator rows are dependent: rank " + std::to_string(c.dimension()) +
                                    " but header says k = " + std::to_string(k));
    return c;
}

LinearCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open code file '" + path + "'");
    try {
        return read_code(in);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_code(std::ostream& out, const LinearCode& c, const std::string& comment) {
    if (!comment.empty()) out << "# " << comment << '\n';
    out << c.length() << ' ' << c.dimension() << '\n';
    for (const auto& r : c.generator().row_list()) out << r.to_string() << '\n';
}

}  // namespace sdc
