#pragma once
// Codeword enumeration kernels.
//
// Codewords are visited in Gray-code order of the message index: the codeword
// for index i is G * gray(i), and consecutive indices differ by one generator
// row (row ctz(i + 1)). The message space is cut into aligned blocks of
// 2^log2_block indices so that blocks can be scanned independently, one per
// SIMD lane or per thread.
//
// Every ISA variant must produce bit-identical results to the scalar
// reference; tests/kernels_test.cpp checks that on random generators.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "sdc/gf2.hpp"

namespace sdc::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);
/// Best ISA supported by this CPU, unless SDC_FORCE_ISA=scalar is set.
Isa best_isa();

/// Generator rows flattened into `stride` words each.
struct PackedGenerator {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t stride = 0;
    std::vector<word_t> words;

    explicit PackedGenerator(const BitMatrix& gen);
    const word_t* row(std::size_t r) const { return words.data() + r * stride; }
};

struct BlockRange {
    std::uint64_t first_block = 0;
    std::uint64_t block_count = 0;
    unsigned log2_block = 0;
};

/// Smallest weight among nonzero codewords in the range, or n + 1 if none.
/// May return as soon as a weight below `stop_below` has been seen.
using MinWeightFn = std::size_t (*)(const PackedGenerator&, BlockRange, std::size_t stop_below);
/// Adds the weight of every codeword in the range into hist[0..n].
using HistogramFn = void (*)(const PackedGenerator&, BlockRange, std::span<std::uint64_t> hist);

struct KernelTable {
    Isa isa;
    MinWeightFn min_weight;
    HistogramFn histogram;
};

const KernelTable& table(Isa isa);

namespace scalar {
std::size_t min_weight(const PackedGenerator& g, BlockRange r, std::size_t stop_below);
void histogram(const PackedGenerator& g, BlockRange r, std::span<std::uint64_t> hist);
}  // namespace scalar

namespace avx2 {
bool compiled();
std::size_t min_weight(const PackedGenerator& g, BlockRange r, std::size_t stop_below);
void histogram(const PackedGenerator& g, BlockRange r, std::span<std::uint64_t> hist);
}  // namespace avx2

/// Codeword G * gray(index) written into `out` (stride words).
void codeword_at(const PackedGenerator& g, std::uint64_t index, word_t* out);

}  // namespace sdc::kernels
