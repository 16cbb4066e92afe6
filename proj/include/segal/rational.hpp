#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace segal {

// Exact arbitrary-precision rationals. Everything that divides by an
// automorphism-group order or normalizes a convolution goes through this type;
// no floating point anywhere in the library.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) { return r.str(); }

} // namespace segal
