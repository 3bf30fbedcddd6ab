#pragma once

#include <cstdint>
#include <vector>

#include "diffree/errors.hpp"

namespace diffree {

// Encoded field element: enc(a) = sum coeffs[i] * p^i over the coordinates of
// a in the basis 1, beta, ..., beta^(e-1). Always in [0, q).
using felt = std::uint32_t;

// A concrete finite field F_q, q = p^e, with a canonical modulus and exact
// arithmetic on integer-encoded elements. Immutable after construction.
//
// The modulus is deterministic: among all monic irreducible degree-e
// polynomials over F_p, the one whose coefficient tuple (c_0,...,c_{e-1})
// encodes to the smallest integer sum c_i * p^i. Irreducibility is checked by
// exhaustive trial division by all monic polynomials of degree <= e/2.
class Field {
public:
    static constexpr std::uint64_t kDefaultMaxQ = 1u << 16;

    // Builds F_{p^e} with the canonical modulus.
    static Field make(std::uint32_t p, std::uint32_t e,
                      std::uint64_t max_q = kDefaultMaxQ);

    // Builds F_{p^e} with a caller-supplied monic irreducible modulus
    // (little-endian, length e+1). Validated on entry.
    static Field make(std::uint32_t p, std::uint32_t e,
                      std::vector<std::uint32_t> modulus, std::uint64_t max_q);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t e() const noexcept { return e_; }
    std::uint64_t q() const noexcept { return q_; }
    bool prime_field() const noexcept { return e_ == 1; }

    // Little-endian coefficients, length e+1, monic. For e == 1 this is the
    // trivial modulus x, i.e. {0, 1}.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    felt zero() const noexcept { return 0; }
    felt one() const noexcept { return 1; }
    // The basis generator beta (for e == 1 there is none; returns 0).
    felt beta() const noexcept { return e_ > 1 ? p_ : 0; }

    felt add(felt a, felt b) const;
    felt sub(felt a, felt b) const;
    felt neg(felt a) const;
    felt mul(felt a, felt b) const;
    felt pow(felt a, std::uint64_t k) const;
    felt inv(felt a) const;  // throws DivisionByZero on 0

    // Reduces an arbitrary integer into the prime subfield.
    felt from_int(std::int64_t v) const;

    // Coordinates in the basis 1, beta, ..., beta^(e-1); inverse of encoding.
    std::vector<std::uint32_t> coords(felt a) const;
    felt from_coords(const std::vector<std::uint32_t>& c) const;

    // Checked decode of an integer encoding (throws OutOfRange).
    felt decode(std::uint64_t i) const;

    bool operator==(const Field& o) const noexcept {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Field& o) const noexcept { return !(*this == o); }

private:
    Field(std::uint32_t p, std::uint32_t e, std::uint64_t q,
          std::vector<std::uint32_t> modulus)
        : p_(p), e_(e), q_(q), modulus_(std::move(modulus)) {}

    std::uint32_t p_ = 2;
    std::uint32_t e_ = 1;
    std::uint64_t q_ = 2;
    std::vector<std::uint32_t> modulus_;
};

bool is_prime(std::uint64_t n) noexcept;

// Throws FieldMismatch unless both fields are identical; `where` names the
// operation for the error message.
void require_same_field(const Field& a, const Field& b, const char* where);

// Element wrapper with an owner check on every binary operation. The core
// algorithms work on raw encodings for speed; this type is the safe surface
// for callers that mix fields.
class FieldElement {
public:
    FieldElement(Field f, felt v) : field_(std::move(f)), value_(v) {}

    const Field& field() const noexcept { return field_; }
    felt value() const noexcept { return value_; }

    FieldElement operator+(const FieldElement& o) const {
        require_same_field(field_, o.field_, "add");
        return {field_, field_.add(value_, o.value_)};
    }
    FieldElement operator-(const FieldElement& o) const {
        require_same_field(field_, o.field_, "sub");
        return {field_, field_.sub(value_, o.value_)};
    }
    FieldElement operator*(const FieldElement& o) const {
        require_same_field(field_, o.field_, "mul");
        return {field_, field_.mul(value_, o.value_)};
    }
    FieldElement operator-() const { return {field_, field_.neg(value_)}; }
    FieldElement inverse() const { return {field_, field_.inv(value_)}; }

    bool operator==(const FieldElement& o) const {
        return field_ == o.field_ && value_ == o.value_;
    }

private:
    Field field_;
    felt value_;
};

}  // namespace diffree
