#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace lkcds {

using Rational = boost::rational<std::int64_t>;

/// Accepts "7", "13/6" or a decimal such as "2.25" (converted exactly).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::int64_t floor_of(const Rational& q);
std::int64_t ceil_of(const Rational& q);

}  // namespace lkcds
