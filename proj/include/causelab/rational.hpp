#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace causelab {

/// Responsibility degrees are exact: 1/3 must compare equal to 1/3.
/// Compare against Rational(n), never a bare integer: the mixed-type
/// operators of Boost 1.74 recurse forever under C++20.
using Rational = boost::rational<std::int64_t>;

/// "0", "1", "1/2", ...
std::string to_string(const Rational& value);

/// Inverse of to_string. Throws ParseError on malformed text.
Rational parse_rational(std::string_view text);

} // namespace causelab
