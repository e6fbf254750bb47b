#pragma once

#include <map>
#include <string>
#include <vector>

#include "eispole/multiset.hpp"
#include "eispole/rational.hpp"
#include "eispole/sl2decomp.hpp"

namespace eispole {

/// Level j -> sl2 decomposition of r_j.
using LevelDecomposition = std::map<int, SL2Decomposition>;

struct PoleContribution {
  int j;
  int l;
  int mult;

  friend bool operator==(const PoleContribution&, const PoleContribution&) = default;
};

/// Zeros of p(s) = prod (j s - 1 - l/2)^{m_l(j)}, keyed by location.
struct PolePolynomial {
  std::map<Rational, int> zeros;
  std::map<Rational, std::vector<PoleContribution>> provenance;

  int total_order() const;
  Multiset<Rational> as_multiset() const;
};

PolePolynomial pole_polynomial(const LevelDecomposition& dec);

/// Zeros -l/(2j) of the companion numerator factors (j s + l/2).
Multiset<Rational> numerator_zeros(const LevelDecomposition& dec);

struct PoleEntry {
  Rational location;
  int order;

  friend bool operator==(const PoleEntry&, const PoleEntry&) = default;
};

/// Poles sorted by descending location, each divided by `rescale`.
/// Throws ArgumentError for rescale <= 0.
std::vector<PoleEntry> pole_table(const PolePolynomial& pp, const Rational& rescale = Rational(1));

/// "mu" for simple poles and "(mu; m)" otherwise, comma separated.
std::string format_poles_text(const std::vector<PoleEntry>& table);
std::string format_poles_latex(const std::vector<PoleEntry>& table);

} // namespace eispole
