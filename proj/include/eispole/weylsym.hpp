#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "eispole/parabolic.hpp"
#include "eispole/rootsys.hpp"

namespace eispole {

/// Default enumeration cap: |W(E6)|.
inline constexpr std::size_t kDefaultWeylCap = 51840;

/// Weyl group element acting on root coordinates (simple-root basis).
class WeylElement {
public:
  WeylElement(int rank, std::vector<int> matrix, std::vector<int> word);

  static WeylElement identity(int rank);
  /// s_j for the 0-based simple index j.
  static WeylElement simple_reflection(const RootSystem& rs, int j);

  int rank() const { return rank_; }
  const std::vector<int>& matrix() const { return matrix_; }
  /// A reduced word in 0-based simple indices; w = s_{word[0]} s_{word[1]} ...
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }

  std::vector<int> apply(std::span<const int> v) const;
  /// Product this * other; the word is the concatenation (not reduced in general).
  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse(const RootSystem& rs) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }

private:
  int rank_;
  std::vector<int> matrix_;
  std::vector<int> word_;
};

/// Product of the Kostant residual values, i.e. the product of the degrees.
std::uint64_t weyl_order_from_degrees(const RootSystem& rs);

/// Breadth-first closure under right multiplication by simple reflections.
/// Elements come out in order of non-decreasing length. Throws SizeError
/// when |W| exceeds cap.
std::vector<WeylElement> generate_weyl(const RootSystem& rs, std::size_t cap = kDefaultWeylCap);

/// Indices into rs.positive_roots() of the roots sent negative by w.
std::vector<std::size_t> inversion_set(const WeylElement& w, const RootSystem& rs);

struct CocycleResult {
  bool holds = true;
  /// Lengths do not add, so the identity was not tested.
  bool skipped = false;
};

/// Inv(w1 w2) = Inv(w2) + w2^{-1} Inv(w1) whenever l(w1 w2) = l(w1) + l(w2).
CocycleResult cocycle_check(const WeylElement& w1, const WeylElement& w2, const RootSystem& rs);

/// True iff w sends every Levi simple root to a negative root.
bool residue_admissible(const WeylElement& w, const ParabolicData& pd);

struct CancellationReport {
  bool ok = false;
  /// Surviving denominator arguments that depend on s.
  std::vector<AffineForm> surviving_denominators;
  /// Surviving constant denominator arguments.
  std::vector<AffineForm> surviving_constants;
  std::vector<AffineForm> surviving_numerators;
};

/// Throws ArgumentError unless residue_admissible(w, pd).
CancellationReport cancellation_check(const WeylElement& w, const ParabolicData& pd);

struct WeylSweepReport {
  RootSystemKind kind;
  std::size_t group_order = 0;
  std::size_t length_mismatches = 0;
  std::size_t cocycle_tested = 0;
  std::size_t cocycle_failures = 0;
  std::size_t admissible = 0;
  std::size_t cancellation_ok = 0;

  bool passed() const {
    return length_mismatches == 0 && cocycle_failures == 0 && admissible == cancellation_ok;
  }
};

/// Full symbolic suite over W(rs) and every maximal parabolic.
WeylSweepReport weyl_sweep(std::shared_ptr<const RootSystem> rs, std::size_t cap = kDefaultWeylCap);

} // namespace eispole
