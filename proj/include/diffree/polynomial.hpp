#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diffree/field.hpp"

namespace diffree {

// Univariate polynomial over F_q, little-endian dense coefficients. The zero
// polynomial has an empty coefficient vector and reports degree -1.
class UniPoly {
public:
    UniPoly(Field f, std::vector<felt> coeffs);

    static UniPoly zero(const Field& f) { return UniPoly(f, {}); }
    static UniPoly constant(const Field& f, felt c) { return UniPoly(f, {c}); }
    static UniPoly monomial(const Field& f, felt c, std::size_t deg);

    const Field& field() const noexcept { return field_; }
    const std::vector<felt>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    felt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    felt constant_term() const { return coeff(0); }
    felt leading_coeff() const { return is_zero() ? 0 : coeffs_.back(); }

    felt eval(felt a) const;  // Horner

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(felt c) const;

    // Substitution: returns (*this)(h(x)).
    UniPoly compose(const UniPoly& h) const;

    bool operator==(const UniPoly& o) const {
        return field_ == o.field_ && coeffs_ == o.coeffs_;
    }

    // Comma-separated little-endian integer encodings, "0" for zero.
    std::string to_string() const;

private:
    Field field_;
    std::vector<felt> coeffs_;
};

// Graded lexicographic order on exponent tuples: lower total degree first,
// ties broken lexicographically. Total order, so term maps iterate
// deterministically.
struct GrlexLess {
    bool operator()(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) const;
};

// Weighted degree in exact 1/d units: a term with x-degree r and a-degree s
// has value d*r + s (i.e. deg* = r + s/d, scaled by d to stay integral).
struct WeightedDegree {
    long long units = 0;
    int d = 1;

    friend bool operator==(const WeightedDegree& a, const WeightedDegree& b);
    friend bool operator<=(const WeightedDegree& a, const WeightedDegree& b);
};

// Sparse multivariate polynomial over F_q with a fixed number of variables.
// Exponents are formal: they are never reduced modulo x^q - x, because the
// degree accounting downstream is about formal polynomials.
class MultiPoly {
public:
    using ExpVec = std::vector<std::uint32_t>;
    using TermMap = std::map<ExpVec, felt, GrlexLess>;

    MultiPoly(Field f, std::size_t nvars) : field_(std::move(f)), nvars_(nvars) {}

    static MultiPoly zero(const Field& f, std::size_t nvars) { return {f, nvars}; }
    static MultiPoly constant(const Field& f, std::size_t nvars, felt c);
    static MultiPoly variable(const Field& f, std::size_t nvars, std::size_t i);

    const Field& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const ExpVec& exps, felt c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(felt c) const;
    MultiPoly negated() const;
    MultiPoly pow(unsigned k) const;

    felt eval(std::span<const felt> point) const;

    // Max total degree; -1 for the zero polynomial.
    int total_degree() const;
    // Max degree in a single variable.
    std::uint32_t max_var_degree() const;

    // Weighted degree with the first `a_count` variables weighted 1/d and the
    // rest weighted 1. Empty for the zero polynomial.
    std::optional<WeightedDegree> weighted_degree(std::size_t a_count, int d) const;

    // Reinterprets this polynomial in a wider variable set, mapping variable
    // i to variable i + offset.
    MultiPoly widened(std::size_t new_nvars, std::size_t offset = 0) const;

    bool operator==(const MultiPoly& o) const {
        return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
    }

private:
    void require_compatible(const MultiPoly& o, const char* where) const;

    Field field_;
    std::size_t nvars_;
    TermMap terms_;
};

// Sum of x^k over all x in F_q, computed exhaustively with the convention
// 0^0 = 1. Zero for 0 <= k < q-1 and whenever (q-1) does not divide k > 0;
// equals -1 when k > 0 and (q-1) | k.
felt power_sum(const Field& f, std::uint64_t k);

}  // namespace diffree
