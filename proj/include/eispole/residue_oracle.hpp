#pragma once

#include <string>
#include <vector>

#include "eispole/multiset.hpp"
#include "eispole/parabolic.hpp"
#include "eispole/polemap.hpp"

namespace eispole {

/// F(s) as numerator and denominator lists of affine factors.
struct FactorLists {
  std::vector<AffineForm> numerator;
  std::vector<AffineForm> denominator;
  bool leading_constant_sign_ok = true;

  Multiset<Rational> numerator_roots() const;
  Multiset<Rational> denominator_roots() const;
};

/// Numerator: <rho_B^P + s varpi, c> over every positive coroot.
/// Denominator: the same minus 1, skipping the Levi simple coroots.
FactorLists raw_residue_function(const ParabolicData& pd);

/// Cancels factors one-for-one by zero locus. Throws
/// DegenerateConfigurationError if a surviving constant is zero.
FactorLists reduce(const FactorLists& fl);

struct CrossCheckReport {
  bool match = false;
  /// sl2 side.
  Multiset<Rational> p_zeros;
  Multiset<Rational> numerator_zeros;
  /// Residue-function side, after reduction.
  Multiset<Rational> denominator_roots;
  Multiset<Rational> numerator_roots;
  /// Set when either pipeline raised instead of producing a result.
  std::string error;
};

CrossCheckReport cross_check(const ParabolicData& pd);

/// Grading, decomposition and p(s) for one parabolic.
struct PoleAnalysis {
  GradedEigenvalues eigenvalues;
  LevelDecomposition decomposition;
  PolePolynomial poles;
};

PoleAnalysis analyze(const ParabolicData& pd);

} // namespace eispole
