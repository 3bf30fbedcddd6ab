#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <sstream>
#include <string>

namespace diffree {

// Exact rational numbers for degree accounting. Degree bounds of the form
// (q-1)(n - m/d) + deg(mu)/d must be compared exactly against integer degrees
// and monomial weights, so no floating point is allowed on these paths.
using Rat = boost::rational<long long>;

inline std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

inline double rat_to_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace diffree
