#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace dropperm {

// Exact integer type for all counts and polynomial coefficients.
// Coefficients of A^(k) exceed 64 bits well below n = 40.
using Int = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Int& v) { return v.str(); }

} // namespace dropperm
