#include "diffree/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace diffree {

UniPoly::UniPoly(Field f, std::vector<felt> coeffs)
    : field_(std::move(f)), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::monomial(const Field& f, felt c, std::size_t deg) {
    std::vector<felt> v(deg + 1, 0);
    v[deg] = c;
    return UniPoly(f, std::move(v));
}

felt UniPoly::eval(felt a) const {
    felt r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        r = field_.add(field_.mul(r, a), coeffs_[i]);
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    require_same_field(field_, o.field_, "uni add");
    std::vector<felt> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = field_.add(coeff(i), o.coeff(i));
    return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    require_same_field(field_, o.field_, "uni sub");
    std::vector<felt> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = field_.sub(coeff(i), o.coeff(i));
    return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    require_same_field(field_, o.field_, "uni mul");
    if (is_zero() || o.is_zero()) return zero(field_);
    std::vector<felt> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] = field_.add(r[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
    }
    return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::scaled(felt c) const {
    std::vector<felt> r(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = field_.mul(coeffs_[i], c);
    return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::compose(const UniPoly& h) const {
    require_same_field(field_, h.field_, "compose");
    UniPoly r = zero(field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        r = r * h + constant(field_, coeffs_[i]);
    return r;
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i];
    }
    return os.str();
}

bool GrlexLess::operator()(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b) const {
    const std::uint64_t ta = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    const std::uint64_t tb = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (ta != tb) return ta < tb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool operator==(const WeightedDegree& a, const WeightedDegree& b) {
    if (a.d != b.d)
        throw ValidationError("ScaleMismatch", "weighted degrees use different d");
    return a.units == b.units;
}

bool operator<=(const WeightedDegree& a, const WeightedDegree& b) {
    if (a.d != b.d)
        throw ValidationError("ScaleMismatch", "weighted degrees use different d");
    return a.units <= b.units;
}

MultiPoly MultiPoly::constant(const Field& f, std::size_t nvars, felt c) {
    MultiPoly r(f, nvars);
    r.add_term(ExpVec(nvars, 0), c);
    return r;
}

MultiPoly MultiPoly::variable(const Field& f, std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw ValidationError("ArityMismatch", "variable index out of range");
    MultiPoly r(f, nvars);
    ExpVec e(nvars, 0);
    e[i] = 1;
    r.add_term(e, 1);
    return r;
}

void MultiPoly::require_compatible(const MultiPoly& o, const char* where) const {
    require_same_field(field_, o.field_, where);
    if (nvars_ != o.nvars_)
        throw ValidationError("ArityMismatch",
                              std::string("operands of '") + where +
                                  "' have different variable counts");
}

void MultiPoly::add_term(const ExpVec& exps, felt c) {
    if (exps.size() != nvars_)
        throw ValidationError("ArityMismatch", "exponent tuple has wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second = field_.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    require_compatible(o, "multi add");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    require_compatible(o, "multi sub");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, field_.neg(c));
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_compatible(o, "multi mul");
    MultiPoly r(field_, nvars_);
    ExpVec e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, field_.mul(ca, cb));
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(felt c) const {
    MultiPoly r(field_, nvars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.add_term(e, field_.mul(v, c));
    return r;
}

MultiPoly MultiPoly::negated() const {
    MultiPoly r(field_, nvars_);
    for (const auto& [e, v] : terms_) r.add_term(e, field_.neg(v));
    return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly r = constant(field_, nvars_, 1);
    MultiPoly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        if (k >>= 1) base = base * base;
    }
    return r;
}

felt MultiPoly::eval(std::span<const felt> point) const {
    if (point.size() != nvars_)
        throw ValidationError("ArityMismatch", "evaluation point has wrong length");
    felt acc = 0;
    for (const auto& [e, c] : terms_) {
        felt t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i] != 0) t = field_.mul(t, field_.pow(point[i], e[i]));
        acc = field_.add(acc, t);
    }
    return acc;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // grlex order puts the highest total degree last
    const auto& e = terms_.rbegin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

std::uint32_t MultiPoly::max_var_degree() const {
    std::uint32_t m = 0;
    for (const auto& [e, c] : terms_)
        for (auto x : e) m = std::max(m, x);
    return m;
}

std::optional<WeightedDegree> MultiPoly::weighted_degree(std::size_t a_count, int d) const {
    if (a_count > nvars_)
        throw ValidationError("ArityMismatch", "a-variable count exceeds variable count");
    if (d < 1) throw ValidationError("OutOfRange", "weighted degree scale must be >= 1");
    if (terms_.empty()) return std::nullopt;
    long long best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long long a_part = 0, x_part = 0;
        for (std::size_t i = 0; i < nvars_; ++i)
            (i < a_count ? a_part : x_part) += e[i];
        const long long units = static_cast<long long>(d) * x_part + a_part;
        if (first || units > best) best = units;
        first = false;
    }
    return WeightedDegree{best, d};
}

MultiPoly MultiPoly::widened(std::size_t new_nvars, std::size_t offset) const {
    if (offset + nvars_ > new_nvars)
        throw ValidationError("ArityMismatch", "widened variable range does not fit");
    MultiPoly r(field_, new_nvars);
    ExpVec e(new_nvars, 0);
    for (const auto& [old_e, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        std::copy(old_e.begin(), old_e.end(), e.begin() + static_cast<std::ptrdiff_t>(offset));
        r.add_term(e, c);
    }
    return r;
}

felt power_sum(const Field& f, std::uint64_t k) {
    felt acc = 0;
    for (felt x = 0; x < f.q(); ++x) acc = f.add(acc, f.pow(x, k));
    return acc;
}

}  // namespace diffree
