#pragma once

#include <cstddef>
#include <map>

#include "eispole/multiset.hpp"

namespace eispole {

/// Multiplicities of the irreducible sl2-modules V_l (dim l + 1).
struct SL2Decomposition {
  std::map<int, int> mults;

  std::size_t dimension() const;
  std::size_t summands() const;
  /// Weight multiset of the represented module.
  Multiset<int> weights() const;

  friend bool operator==(const SL2Decomposition&, const SL2Decomposition&) = default;
};

/// Strips highest weights: m_l = count(l) - count(l + 2).
/// Throws NotARepresentationError if the weights are not symmetric, have
/// mixed parity, or give a negative multiplicity.
SL2Decomposition decompose(const Multiset<int>& weights);

} // namespace eispole
