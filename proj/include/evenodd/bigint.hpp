#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace evenodd {

// Exact signed integer used for every count, coefficient and formula value.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

// (-1)^e for any integer exponent.
inline int sign_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace evenodd
