#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace spinobstruct {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// No floating point is used in any of the algebra kernels.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rat& r) { return r.str(); }
inline std::string to_string(const Int& n) { return n.str(); }

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

} // namespace spinobstruct
