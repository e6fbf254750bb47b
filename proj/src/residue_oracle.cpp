#include "eispole/residue_oracle.hpp"

#include <cstddef>
#include <string>

#include "eispole/error.hpp"

namespace eispole {

namespace {

// Constants are matched by value, non-constant forms by their zero.
struct Locus {
  bool constant;
  Rational value;

  friend bool operator<(const Locus& x, const Locus& y) {
    if (x.constant != y.constant) return x.constant < y.constant;
    return x.value < y.value;
  }
};

Locus locus(const AffineForm& f) { return f.is_constant() ? Locus{true, f.a} : Locus{false, f.root()}; }

Multiset<Rational> roots_of(const std::vector<AffineForm>& forms) {
  Multiset<Rational> out;
  for (const auto& f : forms)
    if (!f.is_constant()) out.insert(f.root());
  return out;
}

} // namespace

Multiset<Rational> FactorLists::numerator_roots() const { return roots_of(numerator); }
Multiset<Rational> FactorLists::denominator_roots() const { return roots_of(denominator); }

FactorLists raw_residue_function(const ParabolicData& pd) {
  FactorLists fl;
  const auto roots = pd.root_system().positive_roots();
  for (const auto& rp : roots) {
    const AffineForm f = affine_form(pd, rp.coroot);
    fl.numerator.push_back(f);
    const bool levi_simple = rp.height == 1 && pd.level(rp.coroot) == 0;
    if (!levi_simple) fl.denominator.push_back(f.shifted(-1));
  }
  return fl;
}

FactorLists reduce(const FactorLists& fl) {
  Multiset<Locus> pending;
  for (const auto& f : fl.denominator) pending.insert(locus(f));

  FactorLists out;
  Multiset<Locus> cancelled;
  for (const auto& f : fl.numerator) {
    const Locus l = locus(f);
    if (pending.erase_one(l))
      cancelled.insert(l);
    else
      out.numerator.push_back(f);
  }
  for (const auto& f : fl.denominator) {
    if (!cancelled.erase_one(locus(f))) out.denominator.push_back(f);
  }

  int sign = 1;
  auto account = [&sign](const AffineForm& f) {
    if (!f.is_constant()) return;
    if (f.a == Rational(0)) throw DegenerateConfigurationError("constant factor vanishes identically");
    if (f.a < 0) sign = -sign;
  };
  for (const auto& f : out.numerator) account(f);
  for (const auto& f : out.denominator) account(f);
  out.leading_constant_sign_ok = fl.leading_constant_sign_ok && sign > 0;
  return out;
}

PoleAnalysis analyze(const ParabolicData& pd) {
  PoleAnalysis out;
  out.eigenvalues = graded_eigenvalues(pd);
  for (const auto& [j, weights] : out.eigenvalues.levels) out.decomposition[j] = decompose(weights);
  out.poles = pole_polynomial(out.decomposition);
  return out;
}

CrossCheckReport cross_check(const ParabolicData& pd) {
  CrossCheckReport report;
  try {
    const PoleAnalysis analysis = analyze(pd);
    report.p_zeros = analysis.poles.as_multiset();
    report.numerator_zeros = numerator_zeros(analysis.decomposition);
  } catch (const Error& e) {
    report.error = std::string("sl2 pipeline: ") + e.what();
  }
  try {
    const FactorLists reduced = reduce(raw_residue_function(pd));
    report.denominator_roots = reduced.denominator_roots();
    report.numerator_roots = reduced.numerator_roots();
  } catch (const Error& e) {
    report.error += (report.error.empty() ? "" : "; ") + std::string("residue pipeline: ") + e.what();
  }
  if (!report.error.empty()) return report;

  report.match = report.p_zeros == report.denominator_roots &&
                 report.numerator_zeros == report.numerator_roots;
  return report;
}

} // namespace eispole
