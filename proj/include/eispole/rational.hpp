#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace eispole {

using Rational = boost::rational<std::int64_t>;

// Compare against Rational(n), never a bare integer: with C++20 rewritten
// comparisons boost's mixed operator== recurses into itself.

/// Reduced "p/q" with q > 0; integers are written without a denominator.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" and "-p/q"; throws ArgumentError on anything else
/// or on q == 0.
Rational parse_rational(std::string_view text);

/// LaTeX "\frac{p}{q}" (or a plain integer).
std::string to_latex(const Rational& q);

} // namespace eispole
