#include "diffree/kernels.hpp"

#include <bit>
#include <cstdlib>
#include <cstring>

namespace diffree::kern {

namespace {

void s_xor(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void s_and(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}

void s_andnot(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= ~src[i];
}

std::uint64_t s_popcnt(const std::uint64_t* a, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::uint64_t>(std::popcount(a[i]));
    return c;
}

std::uint64_t s_and_popcnt(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        c += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return c;
}

std::uint64_t s_andnot_popcnt(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        c += static_cast<std::uint64_t>(std::popcount(a[i] & ~b[i]));
    return c;
}

void s_mod_axpy_u8(std::uint8_t* y, const std::uint8_t* x, std::size_t n, std::uint8_t c,
                   std::uint8_t p) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] = static_cast<std::uint8_t>((y[i] + c * x[i]) % p);
}

constexpr Ops kScalar = {
    "scalar", s_xor, s_and, s_andnot, s_popcnt, s_and_popcnt, s_andnot_popcnt, s_mod_axpy_u8,
};

const Ops* pick_active() {
    const Ops* avx2 = avx2_ops();
    if (const char* env = std::getenv("DIFFREE_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return &kScalar;
        if (std::strcmp(env, "avx2") == 0 && avx2) return avx2;
    }
    return avx2 ? avx2 : &kScalar;
}

}  // namespace

const Ops& scalar_ops() noexcept { return kScalar; }

const Ops& active_ops() noexcept {
    static const Ops* active = pick_active();
    return *active;
}

}  // namespace diffree::kern
