// AVX2 variants of the word/byte kernels. This translation unit is the only
// one compiled with -mavx2; callers reach it through the dispatch table, so
// the rest of the binary stays runnable on any x86-64.

#include "diffree/kernels.hpp"

#if defined(__AVX2__) && defined(__x86_64__)

#include <immintrin.h>

#include <bit>

namespace diffree::kern {

namespace {

void a_xor(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

void a_and(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(a, b));
    }
    for (; i < n; ++i) dst[i] &= src[i];
}

void a_andnot(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        // andnot computes (~b) & a
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_andnot_si256(b, a));
    }
    for (; i < n; ++i) dst[i] &= ~src[i];
}

// Byte-sliced popcount (nibble LUT + psadbw), 4 u64 partial sums per vector.
inline __m256i popcount256(__m256i v) {
    const __m256i lut =
        _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2,
                         2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    __m256i cnt =
        _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::uint64_t hsum_epi64(__m256i v) {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_add_epi64(lo, hi);
    return static_cast<std::uint64_t>(_mm_extract_epi64(s, 0)) +
           static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

std::uint64_t a_popcnt(const std::uint64_t* a, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, popcount256(v));
    }
    std::uint64_t c = hsum_epi64(acc);
    for (; i < n; ++i) c += static_cast<std::uint64_t>(std::popcount(a[i]));
    return c;
}

std::uint64_t a_and_popcnt(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount256(_mm256_and_si256(va, vb)));
    }
    std::uint64_t c = hsum_epi64(acc);
    for (; i < n; ++i) c += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return c;
}

std::uint64_t a_andnot_popcnt(const std::uint64_t* a, const std::uint64_t* b,
                              std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount256(_mm256_andnot_si256(vb, va)));
    }
    std::uint64_t c = hsum_epi64(acc);
    for (; i < n; ++i) c += static_cast<std::uint64_t>(std::popcount(a[i] & ~b[i]));
    return c;
}

// t mod p via multiply-high: floor(t/p) = mulhi(t, M) with M = 2^16/p + 1.
// Exact for every 16-bit t < 2^16 * (1 - (p-1)/p) / 1 ... in particular for
// all t <= 255 and p <= 13, which covers the kernel contract
// t = y + c*x <= (p-1) + (p-1)^2 <= 156.
inline __m256i mod_reduce_u16(__m256i t, __m256i vp, __m256i vm) {
    __m256i quot = _mm256_mulhi_epu16(t, vm);
    return _mm256_sub_epi16(t, _mm256_mullo_epi16(quot, vp));
}

void a_mod_axpy_u8(std::uint8_t* y, const std::uint8_t* x, std::size_t n, std::uint8_t c,
                   std::uint8_t p) {
    const __m256i zero = _mm256_setzero_si256();
    const __m256i vc = _mm256_set1_epi16(static_cast<short>(c));
    const __m256i vp = _mm256_set1_epi16(static_cast<short>(p));
    const __m256i vm =
        _mm256_set1_epi16(static_cast<short>(static_cast<std::uint16_t>(65536u / p + 1)));
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i ylo = _mm256_unpacklo_epi8(vy, zero);
        __m256i yhi = _mm256_unpackhi_epi8(vy, zero);
        __m256i xlo = _mm256_unpacklo_epi8(vx, zero);
        __m256i xhi = _mm256_unpackhi_epi8(vx, zero);
        __m256i tlo = _mm256_add_epi16(ylo, _mm256_mullo_epi16(vc, xlo));
        __m256i thi = _mm256_add_epi16(yhi, _mm256_mullo_epi16(vc, xhi));
        tlo = mod_reduce_u16(tlo, vp, vm);
        thi = mod_reduce_u16(thi, vp, vm);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i),
                            _mm256_packus_epi16(tlo, thi));
    }
    for (; i < n; ++i) y[i] = static_cast<std::uint8_t>((y[i] + c * x[i]) % p);
}

constexpr Ops kAvx2 = {
    "avx2", a_xor, a_and, a_andnot, a_popcnt, a_and_popcnt, a_andnot_popcnt, a_mod_axpy_u8,
};

}  // namespace

const Ops* avx2_ops() noexcept {
    return __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
}

}  // namespace diffree::kern

#else

namespace diffree::kern {
const Ops* avx2_ops() noexcept { return nullptr; }
}  // namespace diffree::kern

#endif
