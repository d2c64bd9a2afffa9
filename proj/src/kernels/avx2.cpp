// AVX2 variant: four aligned blocks are scanned in lockstep, one per 64-bit
// lane. Because the blocks are aligned, all lanes flip the same generator row
// at every step, so each row word is broadcast once and XORed into all lanes.
//
// This file is compiled with -mavx2 when the compiler supports it; callers
// must check isa_supported(Isa::avx2) before calling in.

#include "sdc/kernels.hpp"

#if defined(SDC_HAVE_AVX2)
#include <immintrin.h>

#include <algorithm>
#include <array>
#include <bit>
#endif

namespace sdc::kernels::avx2 {

#if defined(SDC_HAVE_AVX2)

bool compiled() { return true; }

namespace {

constexpr std::uint64_t kEarlyExitMask = 4095;

// Per-lane popcount of 64-bit words (nibble lookup, then byte sums per lane).
inline __m256i popcount_epi64(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_nibble = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_nibble);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_nibble);
    const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

template <std::size_t W>
struct Lanes {
    __m256i cw[W];

    void load(const PackedGenerator& g, std::uint64_t first_block, unsigned log2_block) {
        alignas(32) std::array<std::array<word_t, 4>, W> buf{};
        std::array<word_t, W> tmp{};
        for (int lane = 0; lane < 4; ++lane) {
            codeword_at(g, (first_block + static_cast<std::uint64_t>(lane)) << log2_block, tmp.data());
            for (std::size_t w = 0; w < W; ++w) buf[w][static_cast<std::size_t>(lane)] = tmp[w];
        }
        for (std::size_t w = 0; w < W; ++w)
            cw[w] = _mm256_load_si256(reinterpret_cast<const __m256i*>(buf[w].data()));
    }

    __m256i weights() const {
        __m256i acc = popcount_epi64(cw[0]);
        for (std::size_t w = 1; w < W; ++w) acc = _mm256_add_epi64(acc, popcount_epi64(cw[w]));
        return acc;
    }

    void flip(const word_t* row) {
        for (std::size_t w = 0; w < W; ++w)
            cw[w] = _mm256_xor_si256(cw[w], _mm256_set1_epi64x(static_cast<long long>(row[w])));
    }
};

inline std::size_t hmin_epi32(__m256i v) {
    alignas(32) std::array<std::uint64_t, 4> lanes;
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), v);
    return static_cast<std::size_t>(*std::min_element(lanes.begin(), lanes.end()));
}

template <std::size_t W>
std::size_t min_weight_w(const PackedGenerator& g, BlockRange r, std::size_t stop_below) {
    const std::uint64_t len = std::uint64_t{1} << r.log2_block;
    const std::uint64_t groups = r.block_count / 4;
    // Weights fit in 32 bits and the upper halves stay zero, so a signed
    // 32-bit min acts as an unsigned 64-bit min here.
    const __m256i none = _mm256_set1_epi64x(static_cast<long long>(g.n + 1));
    const __m256i zero = _mm256_setzero_si256();
    __m256i best = none;
    for (std::uint64_t grp = 0; grp < groups; ++grp) {
        Lanes<W> lanes;
        lanes.load(g, r.first_block + 4 * grp, r.log2_block);
        for (std::uint64_t i = 0;; ++i) {
            const __m256i wt = lanes.weights();
            const __m256i is_zero = _mm256_cmpeq_epi64(wt, zero);
            best = _mm256_min_epi32(best, _mm256_or_si256(wt, _mm256_and_si256(is_zero, none)));
            if ((i & kEarlyExitMask) == kEarlyExitMask && hmin_epi32(best) < stop_below) return hmin_epi32(best);
            if (i + 1 == len) break;
            lanes.flip(g.row(static_cast<std::size_t>(std::countr_zero(i + 1))));
        }
        if (hmin_epi32(best) < stop_below) return hmin_epi32(best);
    }
    std::size_t result = hmin_epi32(best);
    if (const std::uint64_t rest = r.block_count % 4; rest != 0 && result >= stop_below) {
        const BlockRange tail{r.first_block + 4 * groups, rest, r.log2_block};
        result = std::min(result, scalar::min_weight(g, tail, stop_below));
    }
    return result;
}

template <std::size_t W>
void histogram_w(const PackedGenerator& g, BlockRange r, std::span<std::uint64_t> hist) {
    const std::uint64_t len = std::uint64_t{1} << r.log2_block;
    const std::uint64_t groups = r.block_count / 4;
    alignas(32) std::array<std::uint64_t, 4> wt;
    for (std::uint64_t grp = 0; grp < groups; ++grp) {
        Lanes<W> lanes;
        lanes.load(g, r.first_block + 4 * grp, r.log2_block);
        for (std::uint64_t i = 0;; ++i) {
            _mm256_store_si256(reinterpret_cast<__m256i*>(wt.data()), lanes.weights());
            ++hist[wt[0]];
            ++hist[wt[1]];
            ++hist[wt[2]];
            ++hist[wt[3]];
            if (i + 1 == len) break;
            lanes.flip(g.row(static_cast<std::size_t>(std::countr_zero(i + 1))));
        }
    }
    if (const std::uint64_t rest = r.block_count % 4; rest != 0)
        scalar::histogram(g, {r.first_block + 4 * groups, rest, r.log2_block}, hist);
}

}  // namespace

std::size_t min_weight(const PackedGenerator& g, BlockRange r, std::size_t stop_below) {
    switch (g.stride) {
        case 1: return min_weight_w<1>(g, r, stop_below);
        case 2: return min_weight_w<2>(g, r, stop_below);
        default: return scalar::min_weight(g, r, stop_below);
    }
}

void histogram(const PackedGenerator& g, BlockRange r, std::span<std::uint64_t> hist) {
    switch (g.stride) {
        case 1: histogram_w<1>(g, r, hist); break;
        case 2: histogram_w<2>(g, r, hist); break;
        default: scalar::histogram(g, r, hist); break;
    }
}

#else

bool compiled() { return false; }
std::size_t min_weight(const PackedGenerator& g, BlockRange r, std::size_t stop_below) {
    return scalar::min_weight(g, r, stop_below);
}
void histogram(const PackedGenerator& g, BlockRange r, std::span<std::uint64_t> hist) {
    scalar::histogram(g, r, hist);
}

#endif

}  // namespace sdc::kernels::avx2
