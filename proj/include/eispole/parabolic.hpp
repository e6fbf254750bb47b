#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "eispole/multiset.hpp"
#include "eispole/rational.hpp"
#include "eispole/rootsys.hpp"

namespace eispole {

/// Levi/nilradical split for the maximal parabolic obtained by removing
/// one simple node beta. Nodes are 1-based at this interface.
class ParabolicData {
public:
  ParabolicData(std::shared_ptr<const RootSystem> rs, int node);

  const RootSystem& root_system() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
  int node() const { return node_; }
  /// 0-based index of beta.
  int beta() const { return node_ - 1; }
  /// 0-based indices of the Levi simple roots.
  const std::vector<int>& theta() const { return theta_; }
  bool in_theta(int i) const { return i != beta(); }

  /// Indices into root_system().positive_roots().
  const std::vector<std::size_t>& levi_positive() const { return levi_; }
  const std::vector<std::size_t>& nilradical() const { return nilradical_; }

  /// Sum of the positive Levi roots, in the simple-root basis.
  const std::vector<int>& two_rho_levi() const { return two_rho_levi_; }

  /// <2 rho_B^P, c>; always an integer.
  int eigenvalue(const Coroot& c) const;
  /// beta^vee coefficient of c (0 on Levi coroots).
  int level(const Coroot& c) const { return c.coeffs[static_cast<std::size_t>(beta())]; }

private:
  std::shared_ptr<const RootSystem> rs_;
  int node_;
  std::vector<int> theta_;
  std::vector<std::size_t> levi_;
  std::vector<std::size_t> nilradical_;
  std::vector<int> two_rho_levi_;
};

/// Throws ArgumentError unless 1 <= node <= rank.
ParabolicData parabolic_data(std::shared_ptr<const RootSystem> rs, int node);
ParabolicData parabolic_data(const RootSystem& rs, int node);

/// Grading level j of a nilradical coroot: its beta^vee coefficient.
/// Throws ArgumentError when c is not a nilradical coroot.
int coroot_level(const ParabolicData& pd, const Coroot& c);

/// j -> multiset of principal-sl2 H-eigenvalues on the level-j coroot spaces.
struct GradedEigenvalues {
  std::map<int, Multiset<int>> levels;

  std::size_t total_dimension() const;
};

GradedEigenvalues graded_eigenvalues(const ParabolicData& pd);

/// a + j*s with exact rational a and non-negative integer slope j.
struct AffineForm {
  Rational a;
  int j = 0;

  bool is_constant() const { return j == 0; }
  /// Zero of a + j s; requires j > 0.
  Rational root() const { return -a / j; }
  AffineForm shifted(const Rational& by) const { return {a + by, j}; }

  friend auto operator<=>(const AffineForm& x, const AffineForm& y) {
    if (x.j != y.j) return x.j <=> y.j;
    if (x.a == y.a) return std::strong_ordering::equal;
    return x.a < y.a ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// <rho_B^P + s varpi, c> as an affine form in s, for any positive coroot.
AffineForm affine_form(const ParabolicData& pd, const Coroot& c);

} // namespace eispole
