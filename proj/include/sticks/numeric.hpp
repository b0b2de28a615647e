#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sticks {

// Exact arithmetic used throughout. BigRat is kept canonical (lowest terms,
// positive denominator) by the backend after every operation.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

} // namespace sticks
