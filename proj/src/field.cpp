#include "diffree/field.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace diffree {

namespace {

// Dense little-endian polynomials over F_p, used only for modulus selection.
using PPoly = std::vector<std::uint32_t>;

void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int pdeg(const PPoly& f) { return static_cast<int>(f.size()) - 1; }

// f mod g for monic g, in place arithmetic over F_p.
PPoly pmod(PPoly f, const PPoly& g, std::uint32_t p) {
    const int dg = pdeg(g);
    while (pdeg(f) >= dg) {
        const std::uint32_t lead = f.back();
        const int shift = pdeg(f) - dg;
        if (lead != 0) {
            for (int j = 0; j <= dg; ++j) {
                std::uint64_t t = f[shift + j] + static_cast<std::uint64_t>(p - lead) * g[j] % p;
                f[shift + j] = static_cast<std::uint32_t>(t % p);
            }
        }
        f.pop_back();
        ptrim(f);
    }
    return f;
}

// Writes the base-p digits of enc into out[0..len).
void digits(std::uint64_t enc, std::uint32_t p, std::uint32_t len, std::uint32_t* out) {
    for (std::uint32_t i = 0; i < len; ++i) {
        out[i] = static_cast<std::uint32_t>(enc % p);
        enc /= p;
    }
}

bool is_irreducible(const PPoly& f, std::uint32_t p) {
    const int e = pdeg(f);
    if (e <= 0) return false;
    if (e == 1) return true;
    // A reducible polynomial of degree e has a monic factor of degree <= e/2.
    for (int d = 1; d <= e / 2; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        PPoly g(static_cast<std::size_t>(d) + 1, 0);
        g[d] = 1;
        for (std::uint64_t enc = 0; enc < count; ++enc) {
            digits(enc, p, static_cast<std::uint32_t>(d), g.data());
            if (pmod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t e) {
    if (e == 1) return {0, 1};
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    PPoly f(static_cast<std::size_t>(e) + 1, 0);
    f[e] = 1;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
        digits(enc, p, e, f.data());
        if (is_irreducible(f, p)) return f;
    }
    // Unreachable: irreducible polynomials of every degree exist over F_p.
    throw Error("Internal", "no irreducible modulus found");
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_same_field(const Field& a, const Field& b, const char* where) {
    if (a != b)
        throw ValidationError("FieldMismatch",
                              std::string("operands of '") + where +
                                  "' belong to different fields");
}

Field Field::make(std::uint32_t p, std::uint32_t e, std::uint64_t max_q) {
    if (!is_prime(p))
        throw ValidationError("NonPrimeCharacteristic",
                              "p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw ValidationError("OutOfRange", "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > max_q)
            throw ValidationError("SizeLimitExceeded",
                                  "p^e exceeds the configured field size limit " +
                                      std::to_string(max_q));
    }
    return Field(p, e, q, canonical_modulus(p, e));
}

Field Field::make(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus,
                  std::uint64_t max_q) {
    Field canonical = make(p, e, max_q);
    if (e == 1) return canonical;  // modulus is trivial for prime fields
    if (modulus.size() != static_cast<std::size_t>(e) + 1 || modulus.back() != 1)
        throw ValidationError("InvalidModulus", "modulus must be monic of degree e");
    for (auto& c : modulus) c %= p;
    if (!is_irreducible(modulus, p))
        throw ValidationError("InvalidModulus", "modulus is reducible over F_p");
    return Field(p, e, canonical.q(), std::move(modulus));
}

felt Field::add(felt a, felt b) const {
    if (p_ == 2) return a ^ b;
    if (e_ == 1) {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    felt r = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += static_cast<felt>(s * scale);
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

felt Field::neg(felt a) const {
    if (p_ == 2) return a;
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    felt r = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t c = a % p_;
        r += static_cast<felt>((c == 0 ? 0 : p_ - c) * scale);
        a /= p_;
        scale *= p_;
    }
    return r;
}

felt Field::sub(felt a, felt b) const { return add(a, neg(b)); }

felt Field::mul(felt a, felt b) const {
    if (e_ == 1)
        return static_cast<felt>(static_cast<std::uint64_t>(a) * b % p_);
    // Schoolbook product of coordinate vectors, then reduction by the monic
    // modulus. e <= 16 at the configured size limit, so stack buffers suffice.
    std::array<std::uint32_t, 32> prod{};
    std::array<std::uint32_t, 16> da{}, db{};
    digits(a, p_, e_, da.data());
    digits(b, p_, e_, db.data());
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    }
    for (std::uint32_t i = 2 * e_ - 2; i >= e_ && i < 32; --i) {
        const std::uint32_t lead = prod[i];
        if (lead != 0) {
            for (std::uint32_t j = 0; j < e_; ++j) {
                std::uint64_t t =
                    prod[i - e_ + j] + static_cast<std::uint64_t>(p_ - lead) * modulus_[j] % p_;
                prod[i - e_ + j] = static_cast<std::uint32_t>(t % p_);
            }
            prod[i] = 0;
        }
    }
    felt r = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += static_cast<felt>(prod[i] * scale);
        scale *= p_;
    }
    return r;
}

felt Field::pow(felt a, std::uint64_t k) const {
    felt r = 1, base = a;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

felt Field::inv(felt a) const {
    if (a == 0) throw ValidationError("DivisionByZero", "inverse of zero");
    return pow(a, q_ - 2);
}

felt Field::from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    return static_cast<felt>(m);
}

std::vector<std::uint32_t> Field::coords(felt a) const {
    std::vector<std::uint32_t> c(e_);
    digits(a, p_, e_, c.data());
    return c;
}

felt Field::from_coords(const std::vector<std::uint32_t>& c) const {
    if (c.size() != e_) throw ValidationError("OutOfRange", "coordinate tuple has wrong length");
    felt r = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (c[i] >= p_) throw ValidationError("OutOfRange", "coordinate not reduced mod p");
        r += static_cast<felt>(c[i] * scale);
        scale *= p_;
    }
    return r;
}

felt Field::decode(std::uint64_t i) const {
    if (i >= q_)
        throw ValidationError("OutOfRange",
                              "encoding " + std::to_string(i) + " not in [0, q)");
    return static_cast<felt>(i);
}

}  // namespace diffree
