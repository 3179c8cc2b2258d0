#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fds {

// Exact distances. Signed so that negative remaining distances can be kept
// for diagnostics; input lengths are checked to be >= 0 where they enter.
using Length = boost::multiprecision::cpp_rational;

// Accepts [-]digits[.digits]. No exponents, no locale.
Length parse_length(std::string_view s);

// Canonical decimal text. Throws if the value has no finite decimal expansion.
std::string to_decimal(const Length& x);

inline Length half(const Length& x) { return x / 2; }

}  // namespace fds
