#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "diffree/errors.hpp"
#include "diffree/field.hpp"

namespace diffree {

// The ambient group F_q^n with points encoded as integers in [0, q^n):
// enc(b) = sum enc(b_i) * q^i. Componentwise group operations work directly
// on encodings.
class PointSpace {
public:
    PointSpace(Field f, std::size_t n, std::uint64_t max_size)
        : field_(std::move(f)), n_(n) {
        size_ = 1;
        for (std::size_t i = 0; i < n_; ++i) {
            if (size_ > max_size / field_.q())
                throw ValidationError("SizeLimitExceeded",
                                      "q^n exceeds the enumeration limit");
            size_ *= field_.q();
        }
    }

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return n_; }
    std::uint64_t size() const noexcept { return size_; }

    std::uint64_t encode(std::span<const felt> v) const {
        if (v.size() != n_)
            throw ValidationError("ArityMismatch", "point has wrong dimension");
        std::uint64_t r = 0, scale = 1;
        for (std::size_t i = 0; i < n_; ++i) {
            r += v[i] * scale;
            scale *= field_.q();
        }
        return r;
    }

    std::vector<felt> decode(std::uint64_t code) const {
        check(code);
        std::vector<felt> v(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            v[i] = static_cast<felt>(code % field_.q());
            code /= field_.q();
        }
        return v;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        return zip(a, b, [this](felt x, felt y) { return field_.add(x, y); });
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return zip(a, b, [this](felt x, felt y) { return field_.sub(x, y); });
    }

    std::uint64_t neg(std::uint64_t a) const {
        check(a);
        std::uint64_t r = 0, scale = 1;
        const std::uint64_t q = field_.q();
        for (std::size_t i = 0; i < n_; ++i) {
            r += static_cast<std::uint64_t>(field_.neg(static_cast<felt>(a % q))) * scale;
            a /= q;
            scale *= q;
        }
        return r;
    }

    void check(std::uint64_t code) const {
        if (code >= size_)
            throw ValidationError("ElementOutOfRange", "point encoding out of range");
    }

private:
    template <typename F>
    std::uint64_t zip(std::uint64_t a, std::uint64_t b, F op) const {
        check(a);
        check(b);
        std::uint64_t r = 0, scale = 1;
        const std::uint64_t q = field_.q();
        for (std::size_t i = 0; i < n_; ++i) {
            r += static_cast<std::uint64_t>(op(static_cast<felt>(a % q),
                                               static_cast<felt>(b % q))) *
                 scale;
            a /= q;
            b /= q;
            scale *= q;
        }
        return r;
    }

    Field field_;
    std::size_t n_;
    std::uint64_t size_;
};

}  // namespace diffree
