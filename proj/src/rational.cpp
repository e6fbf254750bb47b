#include "eispole/rational.hpp"

#include <charconv>
#include <string>

#include "eispole/error.hpp"

namespace eispole {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last)
    throw ArgumentError("not a rational number: '" + std::string(whole) + "'");
  return value;
}

} // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  std::int64_t den = 1;
  if (slash != std::string_view::npos) den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw ArgumentError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_latex(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  const std::string sign = q < 0 ? "-" : "";
  return sign + "\\frac{" + std::to_string(q.numerator() < 0 ? -q.numerator() : q.numerator()) +
         "}{" + std::to_string(q.denominator()) + "}";
}

} // namespace eispole
