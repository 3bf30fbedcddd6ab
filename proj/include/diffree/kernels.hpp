#pragma once

#include <cstddef>
#include <cstdint>

namespace diffree::kern {

// Data-parallel inner-loop kernels behind the bitset search and the
// prime-field row elimination. Each operation has a scalar reference
// implementation and an AVX2 variant; the active table is selected once at
// startup from CPU capabilities. The two variants are bit-identical and
// equivalence-tested against each other.
struct Ops {
    const char* name;

    // dst[i] ^= src[i]
    void (*xor_words)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
    // dst[i] &= src[i]
    void (*and_words)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
    // dst[i] &= ~src[i]
    void (*andnot_words)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
    // popcount over the whole span
    std::uint64_t (*popcnt_words)(const std::uint64_t* a, std::size_t n);
    // popcount(a & b)
    std::uint64_t (*and_popcnt_words)(const std::uint64_t* a, const std::uint64_t* b,
                                      std::size_t n);
    // popcount(a & ~b)
    std::uint64_t (*andnot_popcnt_words)(const std::uint64_t* a, const std::uint64_t* b,
                                         std::size_t n);
    // y[i] = (y[i] + c * x[i]) mod p, for byte-packed residues.
    // Contract: p prime, p <= 13, c < p, all inputs already reduced mod p.
    void (*mod_axpy_u8)(std::uint8_t* y, const std::uint8_t* x, std::size_t n,
                        std::uint8_t c, std::uint8_t p);
};

// Scalar reference table (always available).
const Ops& scalar_ops() noexcept;

// AVX2 table, or nullptr when unsupported by the CPU or the build target.
const Ops* avx2_ops() noexcept;

// The runtime-selected table: AVX2 when available, scalar otherwise. The
// DIFFREE_KERNELS environment variable ("scalar" or "avx2") overrides the
// choice; an unavailable request falls back to scalar.
const Ops& active_ops() noexcept;

}  // namespace diffree::kern
