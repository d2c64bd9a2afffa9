#include <algorithm>
#include <bit>

#include "sdc/kernels.hpp"

namespace sdc::kernels {

PackedGenerator::PackedGenerator(const BitMatrix& gen)
    : n(gen.cols()), k(gen.rows()), stride(words_for(gen.cols())), words(gen.rows() * words_for(gen.cols())) {
    for (std::size_t r = 0; r < k; ++r) {
        auto src = gen.row(r).words();
        std::copy(src.begin(), src.end(), words.begin() + static_cast<std::ptrdiff_t>(r * stride));
    }
}

void codeword_at(const PackedGenerator& g, std::uint64_t index, word_t* out) {
    std::fill_n(out, g.stride, word_t{0});
    std::uint64_t gray = index ^ (index >> 1);
    while (gray) {
        const auto r = static_cast<std::size_t>(std::countr_zero(gray));
        const word_t* row = g.row(r);
        for (std::size_t w = 0; w < g.stride; ++w) out[w] ^= row[w];
        gray &= gray - 1;
    }
}

namespace scalar {
namespace {

// Fixed-width scan; W == 0 selects the runtime-width loop.
template <std::size_t W, class Visit>
void scan(const PackedGenerator& g, BlockRange r, Visit&& visit) {
    const std::size_t width = W ? W : g.stride;
    std::vector<word_t> cw(width);
    const std::uint64_t len = std::uint64_t{1} << r.log2_block;
    for (std::uint64_t b = r.first_block; b < r.first_block + r.block_count; ++b) {
        codeword_at(g, b << r.log2_block, cw.data());
        for (std::uint64_t i = 0;; ++i) {
            std::size_t wt = 0;
            for (std::size_t w = 0; w < width; ++w) wt += static_cast<std::size_t>(std::popcount(cw[w]));
            if (!visit(wt)) return;
            if (i + 1 == len) break;
            const word_t* row = g.row(static_cast<std::size_t>(std::countr_zero(i + 1)));
            for (std::size_t w = 0; w < width; ++w) cw[w] ^= row[w];
        }
    }
}

template <class Visit>
void dispatch_width(const PackedGenerator& g, BlockRange r, Visit&& visit) {
    switch (g.stride) {
        case 1: scan<1>(g, r, visit); break;
        case 2: scan<2>(g, r, visit); break;
        default: scan<0>(g, r, visit); break;
    }
}

}  // namespace

std::size_t min_weight(const PackedGenerator& g, BlockRange r, std::size_t stop_below) {
    std::size_t best = g.n + 1;
    dispatch_width(g, r, [&](std::size_t wt) {
        if (wt != 0 && wt < best) best = wt;
        return best >= stop_below;
    });
    return best;
}

void histogram(const PackedGenerator& g, BlockRange r, std::span<std::uint64_t> hist) {
    dispatch_width(g, r, [&](std::size_t wt) {
        ++hist[wt];
        return true;
    });
}

}  // namespace scalar
}  // namespace sdc::kernels
