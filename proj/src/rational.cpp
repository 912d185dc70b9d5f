#include "lkcds/rational.hpp"

#include <charconv>

#include "lkcds/errors.hpp"

namespace lkcds {

namespace {

std::int64_t digits_to_int(std::string_view s, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("not a rational number: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto den = digits_to_int(text.substr(slash + 1), text);
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return Rational(digits_to_int(text.substr(0, slash), text), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 12) throw DomainError("too many decimals in '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::string_view whole = text.substr(0, dot);
    const bool negative = !whole.empty() && whole.front() == '-';
    if (negative) whole.remove_prefix(1);
    const std::int64_t int_part = whole.empty() ? 0 : digits_to_int(whole, text);
    const std::int64_t frac_part = frac.empty() ? 0 : digits_to_int(frac, text);
    Rational q(int_part * scale + frac_part, scale);
    return negative ? -q : q;
  }
  return Rational(digits_to_int(text, text));
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::int64_t floor_of(const Rational& q) {
  std::int64_t f = q.numerator() / q.denominator();
  if (q.numerator() % q.denominator() != 0 && q.numerator() < 0) --f;
  return f;
}

std::int64_t ceil_of(const Rational& q) {
  std::int64_t f = floor_of(q);
  return Rational(f) == q ? f : f + 1;
}

}  // namespace lkcds
