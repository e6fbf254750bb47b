#include "eispole/weylsym.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>
#include <utility>

#include "eispole/error.hpp"
#include "eispole/multiset.hpp"

namespace eispole {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e37)) * 1099511628211ull;
    return h;
  }
};

bool is_negative(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x <= 0; });
}

} // namespace

WeylElement::WeylElement(int rank, std::vector<int> matrix, std::vector<int> word)
    : rank_(rank), matrix_(std::move(matrix)), word_(std::move(word)) {}

WeylElement WeylElement::identity(int rank) {
  std::vector<int> m(static_cast<std::size_t>(rank * rank), 0);
  for (int i = 0; i < rank; ++i) m[static_cast<std::size_t>(i * rank + i)] = 1;
  return WeylElement(rank, std::move(m), {});
}

WeylElement WeylElement::simple_reflection(const RootSystem& rs, int j) {
  const int n = rs.rank();
  WeylElement s = identity(n);
  for (int i = 0; i < n; ++i) s.matrix_[static_cast<std::size_t>(j * n + i)] -= rs.pairing()(i, j);
  s.word_ = {j};
  return s;
}

std::vector<int> WeylElement::apply(std::span<const int> v) const {
  std::vector<int> out(static_cast<std::size_t>(rank_), 0);
  for (int i = 0; i < rank_; ++i) {
    int acc = 0;
    for (int k = 0; k < rank_; ++k) acc += matrix_[static_cast<std::size_t>(i * rank_ + k)] * v[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  const int n = rank_;
  std::vector<int> m(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int a = matrix_[static_cast<std::size_t>(i * n + k)];
      if (a == 0) continue;
      for (int j = 0; j < n; ++j)
        m[static_cast<std::size_t>(i * n + j)] += a * other.matrix_[static_cast<std::size_t>(k * n + j)];
    }
  std::vector<int> word = word_;
  word.insert(word.end(), other.word_.begin(), other.word_.end());
  return WeylElement(n, std::move(m), std::move(word));
}

WeylElement WeylElement::inverse(const RootSystem& rs) const {
  WeylElement out = identity(rank_);
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) out = out * simple_reflection(rs, *it);
  return out;
}

std::uint64_t weyl_order_from_degrees(const RootSystem& rs) {
  std::uint64_t order = 1;
  for (const auto& [d, n] : kostant_multisets(rs).residual)
    for (std::size_t k = 0; k < n; ++k) order *= static_cast<std::uint64_t>(boost::rational_cast<std::int64_t>(d));
  return order;
}

std::vector<WeylElement> generate_weyl(const RootSystem& rs, std::size_t cap) {
  const std::uint64_t estimate = weyl_order_from_degrees(rs);
  if (estimate > cap)
    throw SizeError("|W(" + to_string(rs.kind()) + ")| = " + std::to_string(estimate) +
                    " exceeds the cap " + std::to_string(cap));

  const int n = rs.rank();
  std::vector<WeylElement> simple;
  for (int j = 0; j < n; ++j) simple.push_back(WeylElement::simple_reflection(rs, j));

  std::vector<WeylElement> elements{WeylElement::identity(n)};
  std::unordered_map<std::vector<int>, std::size_t, VectorHash> seen;
  seen.emplace(elements.front().matrix(), 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (int j = 0; j < n; ++j) {
      WeylElement next = elements[head] * simple[static_cast<std::size_t>(j)];
      if (seen.count(next.matrix())) continue;
      if (elements.size() >= cap)
        throw SizeError("Weyl group enumeration for " + to_string(rs.kind()) + " exceeded the cap " +
                        std::to_string(cap) + " (estimated |W| = " + std::to_string(estimate) + ")");
      seen.emplace(next.matrix(), elements.size());
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

std::vector<std::size_t> inversion_set(const WeylElement& w, const RootSystem& rs) {
  std::vector<std::size_t> out;
  const auto roots = rs.positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (is_negative(w.apply(roots[k].root.coeffs))) out.push_back(k);
  return out;
}

CocycleResult cocycle_check(const WeylElement& w1, const WeylElement& w2, const RootSystem& rs) {
  const WeylElement product = w1 * w2;
  const auto inv1 = inversion_set(w1, rs);
  const auto inv2 = inversion_set(w2, rs);
  const auto inv12 = inversion_set(product, rs);
  if (inv12.size() != inv1.size() + inv2.size()) return {true, true};

  const auto roots = rs.positive_roots();
  const WeylElement w2_inv = w2.inverse(rs);
  Multiset<std::vector<int>> lhs;
  Multiset<std::vector<int>> rhs;
  for (std::size_t k : inv12) lhs.insert(roots[k].root.coeffs);
  for (std::size_t k : inv2) rhs.insert(roots[k].root.coeffs);
  for (std::size_t k : inv1) rhs.insert(w2_inv.apply(roots[k].root.coeffs));
  return {lhs == rhs, false};
}

bool residue_admissible(const WeylElement& w, const ParabolicData& pd) {
  const int n = pd.root_system().rank();
  for (int theta : pd.theta()) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(theta)] = 1;
    if (!is_negative(w.apply(e))) return false;
  }
  return true;
}

CancellationReport cancellation_check(const WeylElement& w, const ParabolicData& pd) {
  if (!residue_admissible(w, pd))
    throw ArgumentError("Weyl element does not send the Levi simple roots to negative roots");
  const RootSystem& rs = pd.root_system();
  const auto roots = rs.positive_roots();

  Multiset<AffineForm> numer;
  Multiset<AffineForm> denom;
  std::size_t residue_factors = 0;
  for (std::size_t k : inversion_set(w, rs)) {
    const AffineForm f = affine_form(pd, roots[k].coroot);
    numer.insert(f);
    denom.insert(f.shifted(1));
    if (roots[k].height == 1 && pd.level(roots[k].coroot) == 0) ++residue_factors;
  }
  for (std::size_t t = 0; t < residue_factors; ++t)
    if (!numer.erase_one(AffineForm{Rational(1), 0}))
      throw InternalConsistencyError("missing residue factor for a Levi simple coroot");

  CancellationReport report;
  Multiset<AffineForm> leftover_denom = denom;
  for (const auto& [f, count] : numer) {
    std::size_t left = count;
    while (left > 0 && leftover_denom.erase_one(f)) --left;
    for (std::size_t t = 0; t < left; ++t) report.surviving_numerators.push_back(f);
  }
  report.ok = true;
  for (const auto& f : leftover_denom.expand()) {
    if (f.a < 1) report.ok = false;
    (f.is_constant() ? report.surviving_constants : report.surviving_denominators).push_back(f);
  }
  return report;
}

WeylSweepReport weyl_sweep(std::shared_ptr<const RootSystem> rs, std::size_t cap) {
  WeylSweepReport report;
  report.kind = rs->kind();
  const auto elements = generate_weyl(*rs, cap);
  report.group_order = elements.size();

  std::vector<WeylElement> simple;
  for (int j = 0; j < rs->rank(); ++j) simple.push_back(WeylElement::simple_reflection(*rs, j));

  for (const auto& w : elements) {
    if (static_cast<std::size_t>(w.length()) != inversion_set(w, *rs).size()) ++report.length_mismatches;
    for (const auto& s : simple) {
      for (const auto& result : {cocycle_check(w, s, *rs), cocycle_check(s, w, *rs)}) {
        if (result.skipped) continue;
        ++report.cocycle_tested;
        if (!result.holds) ++report.cocycle_failures;
      }
    }
  }

  for (int node = 1; node <= rs->rank(); ++node) {
    const ParabolicData pd(rs, node);
    for (const auto& w : elements) {
      if (!residue_admissible(w, pd)) continue;
      ++report.admissible;
      if (cancellation_check(w, pd).ok) ++report.cancellation_ok;
    }
  }
  return report;
}

} // namespace eispole
