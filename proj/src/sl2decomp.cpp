#include "eispole/sl2decomp.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "eispole/error.hpp"

namespace eispole {

std::size_t SL2Decomposition::dimension() const {
  std::size_t d = 0;
  for (const auto& [l, m] : mults) d += static_cast<std::size_t>((l + 1) * m);
  return d;
}

std::size_t SL2Decomposition::summands() const {
  std::size_t total = 0;
  for (const auto& [l, m] : mults) total += static_cast<std::size_t>(m);
  return total;
}

Multiset<int> SL2Decomposition::weights() const {
  Multiset<int> out;
  for (const auto& [l, m] : mults)
    for (int w = -l; w <= l; w += 2) out.insert(w, static_cast<std::size_t>(m));
  return out;
}

SL2Decomposition decompose(const Multiset<int>& weights) {
  SL2Decomposition out;
  if (weights.empty()) return out;

  const int parity = std::abs(weights.begin()->first) % 2;
  int top = 0;
  for (const auto& [w, n] : weights) {
    if (std::abs(w) % 2 != parity)
      throw NotARepresentationError("weights of mixed parity");
    if (weights.count(-w) != n)
      throw NotARepresentationError("weight multiset is not symmetric at " + std::to_string(w));
    top = std::max(top, w);
  }
  for (int l = parity; l <= top; l += 2) {
    const auto here = static_cast<long>(weights.count(l));
    const auto above = static_cast<long>(weights.count(l + 2));
    if (here < above)
      throw NotARepresentationError("weight multiplicities are not unimodal at " + std::to_string(l));
    if (here > above) out.mults[l] = static_cast<int>(here - above);
  }
  return out;
}

} // namespace eispole
