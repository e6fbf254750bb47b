#include "eispole/polemap.hpp"

#include "eispole/error.hpp"

namespace eispole {

int PolePolynomial::total_order() const {
  int total = 0;
  for (const auto& [s, m] : zeros) total += m;
  return total;
}

Multiset<Rational> PolePolynomial::as_multiset() const {
  Multiset<Rational> out;
  for (const auto& [s, m] : zeros) out.insert(s, static_cast<std::size_t>(m));
  return out;
}

PolePolynomial pole_polynomial(const LevelDecomposition& dec) {
  PolePolynomial pp;
  for (const auto& [j, d] : dec) {
    for (const auto& [l, m] : d.mults) {
      const Rational s(l + 2, 2 * j);
      pp.zeros[s] += m;
      pp.provenance[s].push_back({j, l, m});
    }
  }
  return pp;
}

Multiset<Rational> numerator_zeros(const LevelDecomposition& dec) {
  Multiset<Rational> out;
  for (const auto& [j, d] : dec)
    for (const auto& [l, m] : d.mults) out.insert(Rational(-l, 2 * j), static_cast<std::size_t>(m));
  return out;
}

std::vector<PoleEntry> pole_table(const PolePolynomial& pp, const Rational& rescale) {
  if (rescale <= 0) throw ArgumentError("rescale factor must be positive, got " + to_string(rescale));
  std::vector<PoleEntry> out;
  out.reserve(pp.zeros.size());
  for (auto it = pp.zeros.rbegin(); it != pp.zeros.rend(); ++it)
    out.push_back({it->first / rescale, it->second});
  return out;
}

std::string format_poles_text(const std::vector<PoleEntry>& table) {
  std::string out;
  for (const auto& e : table) {
    if (!out.empty()) out += ", ";
    if (e.order == 1)
      out += to_string(e.location);
    else
      out += "(" + to_string(e.location) + "; " + std::to_string(e.order) + ")";
  }
  return out;
}

std::string format_poles_latex(const std::vector<PoleEntry>& table) {
  std::string out = "s=";
  bool first = true;
  for (const auto& e : table) {
    if (!first) out += ",";
    first = false;
    if (e.order == 1)
      out += to_latex(e.location);
    else
      out += "\\left(" + to_latex(e.location) + ";" + std::to_string(e.order) + "\\right)";
  }
  return out;
}

} // namespace eispole
