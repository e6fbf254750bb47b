#include "eispole/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <utility>

#include "eispole/error.hpp"

namespace eispole {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  return '?';
}

bool is_admissible(RootSystemKind kind) {
  const int n = kind.rank;
  switch (kind.family) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 2;
    case Family::C: return n >= 2;
    case Family::D: return n >= 3;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

std::string to_string(RootSystemKind kind) {
  return std::string(1, family_letter(kind.family)) + std::to_string(kind.rank);
}

void validate(RootSystemKind kind, int max_rank) {
  if (!is_admissible(kind))
    throw ConfigurationError("inadmissible root system kind " + to_string(kind));
  if (kind.rank > max_rank)
    throw ConfigurationError(to_string(kind) + " exceeds the rank cap " + std::to_string(max_rank));
}

RootSystemKind parse_kind(std::string_view text) {
  if (text.size() < 2)
    throw ConfigurationError("expected a type such as E8, got '" + std::string(text) + "'");
  Family family;
  switch (std::toupper(static_cast<unsigned char>(text.front()))) {
    case 'A': family = Family::A; break;
    case 'B': family = Family::B; break;
    case 'C': family = Family::C; break;
    case 'D': family = Family::D; break;
    case 'E': family = Family::E; break;
    case 'F': family = Family::F; break;
    case 'G': family = Family::G; break;
    default:
      throw ConfigurationError("unknown family in '" + std::string(text) + "'");
  }
  int rank = 0;
  for (char ch : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) || rank > 1000)
      throw ConfigurationError("bad rank in '" + std::string(text) + "'");
    rank = rank * 10 + (ch - '0');
  }
  RootSystemKind kind{family, rank};
  if (!is_admissible(kind))
    throw ConfigurationError("inadmissible root system kind " + to_string(kind));
  return kind;
}

std::vector<RootSystemKind> all_kinds(int max_rank) {
  std::vector<RootSystemKind> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int n = 1; n <= max_rank; ++n)
      if (is_admissible({f, n})) out.push_back({f, n});
  return out;
}

// ---------------------------------------------------------------------------
// PairingMatrix

PairingMatrix::PairingMatrix(int rank, std::vector<int> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (rank_ < 1 || entries_.size() != static_cast<std::size_t>(rank_ * rank_))
    throw ConfigurationError("pairing matrix has the wrong shape");
  for (int i = 0; i < rank_; ++i) {
    if ((*this)(i, i) != 2) throw ConfigurationError("pairing matrix diagonal must be 2");
    for (int j = 0; j < rank_; ++j) {
      if (i == j) continue;
      if ((*this)(i, j) > 0) throw ConfigurationError("positive off-diagonal pairing entry");
      if (((*this)(i, j) == 0) != ((*this)(j, i) == 0))
        throw ConfigurationError("pairing matrix zero pattern is not symmetric");
    }
  }
}

PairingMatrix PairingMatrix::cartan(RootSystemKind kind) {
  validate(kind, kind.rank);
  const int n = kind.rank;
  std::vector<int> c(static_cast<std::size_t>(n * n), 0);
  auto at = [&](int i, int j) -> int& { return c[static_cast<std::size_t>(i * n + j)]; };
  for (int i = 0; i < n; ++i) at(i, i) = 2;
  auto link = [&](int i, int j) { at(i, j) = at(j, i) = -1; };

  switch (kind.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      // alpha_n short
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      at(n - 2, n - 1) = -2;
      break;
    case Family::C:
      // alpha_n long
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      at(n - 1, n - 2) = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      // 1-3-4-5-6-7-8 with 2 on 4
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      link(0, 1);
      link(1, 2);
      link(2, 3);
      at(1, 2) = -2;
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long
      at(0, 1) = -1;
      at(1, 0) = -3;
      break;
  }
  return PairingMatrix(n, std::move(c));
}

PairingMatrix PairingMatrix::transposed() const {
  std::vector<int> t(entries_.size());
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) t[static_cast<std::size_t>(j * rank_ + i)] = (*this)(i, j);
  return PairingMatrix(rank_, std::move(t));
}

PairingMatrix PairingMatrix::relabeled(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(rank_))
    throw ArgumentError("relabel permutation has the wrong length");
  std::vector<int> out(entries_.size());
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      out[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] * rank_ +
                                   perm[static_cast<std::size_t>(j)])] = (*this)(i, j);
  return PairingMatrix(rank_, std::move(out));
}

// ---------------------------------------------------------------------------
// Weights and heights

Rational Weight::pair(const Coroot& c) const {
  Rational total = 0;
  for (std::size_t i = 0; i < coords.size() && i < c.coeffs.size(); ++i)
    total += coords[i] * c.coeffs[i];
  return total;
}

int height(const Root& r) { return std::accumulate(r.coeffs.begin(), r.coeffs.end(), 0); }
int height(const Coroot& c) { return std::accumulate(c.coeffs.begin(), c.coeffs.end(), 0); }

// ---------------------------------------------------------------------------
// RootSystem

namespace {

constexpr std::size_t kMaxRoots = 4096;

bool non_negative_nonzero(const std::vector<int>& v) {
  bool any = false;
  for (int x : v) {
    if (x < 0) return false;
    any = any || x != 0;
  }
  return any;
}

std::vector<int> unit(int n, int i) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

} // namespace

RootSystem::RootSystem(RootSystemKind kind, PairingMatrix pairing)
    : kind_(kind), pairing_(std::move(pairing)) {
  const int n = pairing_.rank();
  if (n != kind.rank) throw ConfigurationError("pairing rank does not match the kind");

  std::map<std::vector<int>, std::vector<int>> seen;
  std::deque<std::pair<std::vector<int>, std::vector<int>>> queue;
  for (int i = 0; i < n; ++i) {
    seen.emplace(unit(n, i), unit(n, i));
    queue.emplace_back(unit(n, i), unit(n, i));
  }
  while (!queue.empty()) {
    auto [v, c] = std::move(queue.front());
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      auto rv = reflect_root(v, j);
      if (!non_negative_nonzero(rv) || seen.count(rv)) continue;
      auto rc = reflect_coroot(c, j);
      if (!non_negative_nonzero(rc))
        throw ConfigurationError("root and coroot closure disagree in sign");
      seen.emplace(rv, rc);
      if (seen.size() > kMaxRoots)
        throw ConfigurationError("pairing matrix is not of finite type");
      queue.emplace_back(std::move(rv), std::move(rc));
    }
  }

  roots_.reserve(seen.size());
  for (auto& [v, c] : seen) {
    RootPair rp{Root{v}, Coroot{c}, 0};
    rp.height = height(rp.root);
    roots_.push_back(std::move(rp));
  }
  std::stable_sort(roots_.begin(), roots_.end(), [](const RootPair& a, const RootPair& b) {
    return a.height != b.height ? a.height < b.height : a.root > b.root;
  });

  simple_.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    const auto& rp = roots_[k];
    if (pair(rp.root, rp.coroot) != 2)
      throw InternalConsistencyError("root/coroot pairing differs from 2");
    if (rp.height == 1) {
      const auto i = std::find(rp.root.coeffs.begin(), rp.root.coeffs.end(), 1) - rp.root.coeffs.begin();
      simple_[static_cast<std::size_t>(i)] = k;
    }
  }
}

int RootSystem::pair(std::span<const int> v, std::span<const int> c) const {
  const int n = rank();
  int total = 0;
  for (int i = 0; i < n; ++i) {
    if (v[static_cast<std::size_t>(i)] == 0) continue;
    int row = 0;
    for (int j = 0; j < n; ++j) row += pairing_(i, j) * c[static_cast<std::size_t>(j)];
    total += v[static_cast<std::size_t>(i)] * row;
  }
  return total;
}

std::vector<int> RootSystem::reflect_root(std::span<const int> v, int j) const {
  std::vector<int> out(v.begin(), v.end());
  int k = 0;
  for (int i = 0; i < rank(); ++i) k += v[static_cast<std::size_t>(i)] * pairing_(i, j);
  out[static_cast<std::size_t>(j)] -= k;
  return out;
}

std::vector<int> RootSystem::reflect_coroot(std::span<const int> c, int j) const {
  std::vector<int> out(c.begin(), c.end());
  int k = 0;
  for (int i = 0; i < rank(); ++i) k += pairing_(j, i) * c[static_cast<std::size_t>(i)];
  out[static_cast<std::size_t>(j)] -= k;
  return out;
}

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (roots_[k].root == r) return k;
  return std::nullopt;
}

std::optional<std::size_t> RootSystem::index_of(const Coroot& c) const {
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (roots_[k].coroot == c) return k;
  return std::nullopt;
}

int RootSystem::max_height() const { return roots_.empty() ? 0 : roots_.back().height; }

RootSystem build_root_system(RootSystemKind kind, int max_rank) {
  validate(kind, max_rank);
  return RootSystem(kind, PairingMatrix::cartan(kind));
}

// ---------------------------------------------------------------------------
// Duality, rho, Kostant

DualSystem dual(const RootSystem& rs) {
  const RootSystemKind kind = rs.kind();
  const int n = kind.rank;
  RootSystemKind standard = kind;
  std::vector<int> relabel(static_cast<std::size_t>(n));
  std::iota(relabel.begin(), relabel.end(), 0);
  switch (kind.family) {
    case Family::B: standard.family = Family::C; break;
    case Family::C: standard.family = Family::B; break;
    case Family::F:
    case Family::G:
      std::reverse(relabel.begin(), relabel.end());
      break;
    default: break;
  }
  return DualSystem{RootSystem(standard, rs.pairing().transposed()), standard, std::move(relabel)};
}

Weight rho(const RootSystem& rs) {
  return Weight{std::vector<Rational>(static_cast<std::size_t>(rs.rank()), Rational(1))};
}

KostantMultisets kostant_multisets(const RootSystem& rs) {
  const Weight r = rho(rs);
  KostantMultisets out;
  for (const auto& rp : rs.positive_roots()) {
    const Rational value = r.pair(rp.coroot);
    out.lhs.insert(value + 1);
    if (rp.height > 1) out.rhs_roots.insert(value);
  }
  auto residual = out.lhs.minus(out.rhs_roots);
  if (!residual)
    throw InternalConsistencyError("Kostant multiset difference is infeasible for " +
                                   to_string(rs.kind()));
  out.residual = std::move(*residual);
  return out;
}

} // namespace eispole
