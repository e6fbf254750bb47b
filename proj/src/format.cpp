#include "eispole/format.hpp"

namespace eispole {

Json rationals_to_json(const Multiset<Rational>& values) {
  Json out = Json::array();
  for (const auto& q : values.expand()) out.push_back(to_string(q));
  return out;
}

Json poles_to_json(const std::vector<PoleEntry>& table) {
  Json out = Json::array();
  for (const auto& e : table) out.push_back({{"s", to_string(e.location)}, {"order", e.order}});
  return out;
}

Json root_system_to_json(const RootSystem& rs) {
  Json roots = Json::array();
  Json coroots = Json::array();
  for (const auto& rp : rs.positive_roots()) {
    roots.push_back(rp.root.coeffs);
    coroots.push_back(rp.coroot.coeffs);
  }
  return {{"type", to_string(rs.kind())}, {"roots", std::move(roots)}, {"coroots", std::move(coroots)}};
}

Json graded_eigenvalues_to_json(const GradedEigenvalues& g) {
  Json levels = Json::object();
  for (const auto& [j, weights] : g.levels) levels[std::to_string(j)] = weights.expand();
  return {{"levels", std::move(levels)}};
}

Json decomposition_to_json(const SL2Decomposition& dec) {
  Json sl2 = Json::array();
  for (auto m = dec.mults.rbegin(); m != dec.mults.rend(); ++m) sl2.push_back({{"l", m->first}, {"mult", m->second}});
  return {{"sl2", std::move(sl2)}};
}

Json case_to_json(const CaseResult& result, const Rational& rescale) {
  Json levels = Json::array();
  for (const auto& [j, weights] : result.analysis.eigenvalues.levels) {
    const auto it = result.analysis.decomposition.find(j);
    Json sl2 = it == result.analysis.decomposition.end() ? Json::array() : decomposition_to_json(it->second)["sl2"];
    levels.push_back({{"j", j},
                      {"dim", weights.size()},
                      {"eigenvalues", weights.expand()},
                      {"sl2", std::move(sl2)}});
  }
  Json out = {{"type", to_string(result.kind)},
              {"rank", result.kind.rank},
              {"node", result.node},
              {"levels", std::move(levels)},
              {"poles", poles_to_json(pole_table(result.analysis.poles, rescale))}};
  if (rescale != Rational(1)) out["rescale"] = to_string(rescale);
  if (result.oracle) {
    const auto& o = *result.oracle;
    out["oracle"] = {{"match", o.match},
                     {"denominator", rationals_to_json(o.denominator_roots)},
                     {"p_zeros", rationals_to_json(o.p_zeros)},
                     {"numerator", rationals_to_json(o.numerator_roots)},
                     {"numerator_zeros", rationals_to_json(o.numerator_zeros)}};
    if (!o.error.empty()) out["oracle"]["error"] = o.error;
  }
  return out;
}

Json weyl_sweep_to_json(const WeylSweepReport& r) {
  return {{"group", to_string(r.kind)},
          {"order", r.group_order},
          {"length_mismatches", r.length_mismatches},
          {"cocycle_tested", r.cocycle_tested},
          {"cocycle_failures", r.cocycle_failures},
          {"admissible", r.admissible},
          {"ok", r.cancellation_ok}};
}

std::string format_decomposition(const SL2Decomposition& dec) {
  std::string out;
  for (const auto& [l, m] : dec.mults) {
    if (!out.empty()) out += " + ";
    out += "V" + std::to_string(l);
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out.empty() ? "0" : out;
}

std::string format_case_text(const CaseResult& result, const Rational& rescale) {
  std::string out = to_string(result.kind) + " P" + std::to_string(result.node) + ": ";
  bool first = true;
  for (const auto& [j, dec] : result.analysis.decomposition) {
    if (!first) out += ", ";
    first = false;
    out += "r" + std::to_string(j) + " = " + format_decomposition(dec);
  }
  out += "; poles: " + format_poles_text(pole_table(result.analysis.poles, rescale));
  if (result.oracle) out += result.oracle->match ? " [oracle: match]" : " [oracle: MISMATCH]";
  return out;
}

std::string format_case_latex(const CaseResult& result, const Rational& rescale) {
  std::string out = "$" + std::string(1, family_letter(result.kind.family)) + "_{" +
                    std::to_string(result.kind.rank) + "}$, $P_{" + std::to_string(result.node) + "}$: ";
  for (const auto& [j, dec] : result.analysis.decomposition) {
    out += "$r_{" + std::to_string(j) + "}\\simeq ";
    bool first = true;
    for (const auto& [l, m] : dec.mults) {
      if (!first) out += "\\oplus ";
      first = false;
      out += "V_{" + std::to_string(l) + "}";
      if (m > 1) out += "^{\\oplus" + std::to_string(m) + "}";
    }
    out += "$; ";
  }
  out += "$" + format_poles_latex(pole_table(result.analysis.poles, rescale)) + "$";
  return out;
}

} // namespace eispole
