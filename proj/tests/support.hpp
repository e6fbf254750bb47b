#pragma once

// Independent reference computations and random generators used across the
// unit tests. None of this calls into the library's own algorithms except to
// read the pairing matrix.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iterator>
#include <map>
#include <ostream>
#include <memory>
#include <random>
#include <set>
#include <vector>

#include "eispole/multiset.hpp"
#include "eispole/rootsys.hpp"

namespace eispole {
// gtest value printer, so parameterized test names read "A5" rather than bytes.
inline void PrintTo(const RootSystemKind& k, std::ostream* os) { *os << to_string(k); }
} // namespace eispole

namespace testsupport {

using eispole::Family;
using eispole::RootSystemKind;

inline std::shared_ptr<const eispole::RootSystem> make_system(RootSystemKind k) {
  return std::make_shared<const eispole::RootSystem>(eispole::build_root_system(k));
}

inline std::shared_ptr<const eispole::RootSystem> make_system(const char* name) {
  return make_system(eispole::parse_kind(name));
}

inline std::size_t classical_positive_count(RootSystemKind k) {
  const auto n = static_cast<std::size_t>(k.rank);
  switch (k.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Textbook orders.
inline std::uint64_t known_weyl_order(RootSystemKind k) {
  const int n = k.rank;
  switch (k.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

// Positive roots by the root-string algorithm: building up by height, beta +
// alpha_i is a root iff p - <beta, alpha_i^vee> > 0, where p is the length of
// the alpha_i-string below beta. Entirely separate from reflection closure.
inline std::set<std::vector<int>> roots_by_strings(const eispole::PairingMatrix& c) {
  const int n = c.rank();
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    layer.push_back(e);
    roots.insert(e);
  }
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        int p = 0;
        auto down = beta;
        while (true) {
          down[static_cast<std::size_t>(i)] -= 1;
          if (!roots.contains(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int k = 0; k < n; ++k) pairing += beta[static_cast<std::size_t>(k)] * c(k, i);
        if (p - pairing > 0) {
          auto up = beta;
          up[static_cast<std::size_t>(i)] += 1;
          if (!roots.contains(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    roots.insert(next.begin(), next.end());
  }
  return roots;
}

// |W| as the size of the orbit of rho (a regular weight) in fundamental-weight
// coordinates. s_i(lambda) = lambda - lambda_i alpha_i, alpha_i = row i of C.
inline std::size_t weyl_orbit_of_rho(const eispole::PairingMatrix& c) {
  const int n = c.rank();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue{std::vector<int>(static_cast<std::size_t>(n), 1)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto lambda = queue[head];
    for (int i = 0; i < n; ++i) {
      auto next = lambda;
      const int li = lambda[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j) next[static_cast<std::size_t>(j)] -= li * c(i, j);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen.size();
}

// sl2 decomposition by repeatedly peeling off the string of the top weight.
inline std::map<int, int> peel_strings(eispole::Multiset<int> weights) {
  std::map<int, int> out;
  while (!weights.empty()) {
    const int top = std::prev(weights.end())->first;
    for (int w = top; w >= -top; w -= 2)
      if (!weights.erase_one(w)) return {};
    ++out[top];
  }
  return out;
}

inline eispole::Multiset<int> expand_decomposition(const std::map<int, int>& mults) {
  eispole::Multiset<int> out;
  for (const auto& [l, m] : mults)
    for (int w = l; w >= -l; w -= 2) out.insert(w, static_cast<std::size_t>(m));
  return out;
}

// Fixed seed so failures reproduce; override with EISPOLE_SEED if needed.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen = [] {
    const char* env = std::getenv("EISPOLE_SEED");
    return std::mt19937_64(env ? std::strtoull(env, nullptr, 10) : 20240611ULL);
  }();
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// Random sl2-module: up to `summands` copies of V_l with l of one parity.
inline std::map<int, int> random_decomposition(int max_l = 12, int summands = 6) {
  std::map<int, int> out;
  const int parity = uniform(0, 1);
  const int count = uniform(1, summands);
  for (int k = 0; k < count; ++k) ++out[parity + 2 * uniform(0, max_l / 2)];
  return out;
}

} // namespace testsupport
