#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eispole/multiset.hpp"
#include "eispole/rational.hpp"

namespace eispole {

inline constexpr int kDefaultMaxRank = 8;

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

struct RootSystemKind {
  Family family;
  int rank;

  friend auto operator<=>(const RootSystemKind&, const RootSystemKind&) = default;
};

bool is_admissible(RootSystemKind kind);

/// Throws ConfigurationError for inadmissible kinds or rank > max_rank.
void validate(RootSystemKind kind, int max_rank = kDefaultMaxRank);

/// Parses "E8", "b3", ... . Throws ConfigurationError.
RootSystemKind parse_kind(std::string_view text);
std::string to_string(RootSystemKind kind);

/// Every admissible kind of rank <= max_rank, ordered by family then rank.
std::vector<RootSystemKind> all_kinds(int max_rank = kDefaultMaxRank);

/// C[i][j] = <alpha_i, alpha_j^vee>, stored row-major. Indices are 0-based.
class PairingMatrix {
public:
  PairingMatrix(int rank, std::vector<int> entries);

  /// Bourbaki numbering for all families.
  static PairingMatrix cartan(RootSystemKind kind);

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * rank_ + j)]; }
  PairingMatrix transposed() const;
  /// Matrix with rows and columns renumbered: result(perm[i], perm[j]) = (*this)(i, j).
  PairingMatrix relabeled(std::span<const int> perm) const;

  friend bool operator==(const PairingMatrix&, const PairingMatrix&) = default;

private:
  int rank_;
  std::vector<int> entries_;
};

/// Positive root as coefficients over the simple roots.
struct Root {
  std::vector<int> coeffs;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// Positive coroot as coefficients over the simple coroots.
struct Coroot {
  std::vector<int> coeffs;
  friend auto operator<=>(const Coroot&, const Coroot&) = default;
};

/// Rational weight in the fundamental-weight basis.
struct Weight {
  std::vector<Rational> coords;

  Rational pair(const Coroot& c) const;
};

struct RootPair {
  Root root;
  Coroot coroot;
  int height = 0;
};

int height(const Root& r);
int height(const Coroot& c);

class RootSystem {
public:
  /// Generates the positive system by reflection closure. Throws
  /// ConfigurationError if the pairing is not of finite type.
  RootSystem(RootSystemKind kind, PairingMatrix pairing);

  RootSystemKind kind() const { return kind_; }
  int rank() const { return pairing_.rank(); }
  const PairingMatrix& pairing() const { return pairing_; }
  std::span<const RootPair> positive_roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }

  /// <v, c> for root-lattice v and coroot-lattice c.
  int pair(std::span<const int> root_coeffs, std::span<const int> coroot_coeffs) const;
  int pair(const Root& r, const Coroot& c) const { return pair(r.coeffs, c.coeffs); }

  /// s_j on the root side.
  std::vector<int> reflect_root(std::span<const int> v, int j) const;
  /// s_j on the coroot side.
  std::vector<int> reflect_coroot(std::span<const int> c, int j) const;

  std::optional<std::size_t> index_of(const Root& r) const;
  std::optional<std::size_t> index_of(const Coroot& c) const;

  /// Index of the simple root alpha_i (0-based i) in positive_roots().
  std::size_t simple_index(int i) const { return simple_[static_cast<std::size_t>(i)]; }

  int max_height() const;

private:
  RootSystemKind kind_;
  PairingMatrix pairing_;
  std::vector<RootPair> roots_;
  std::vector<std::size_t> simple_;
};

RootSystem build_root_system(RootSystemKind kind, int max_rank = kDefaultMaxRank);

struct DualSystem {
  /// Root system of the transposed pairing, with its own node order.
  RootSystem system;
  /// The Bourbaki-standard kind the dual is isomorphic to.
  RootSystemKind standard_kind;
  /// relabel[i] is the Bourbaki node (0-based) of node i of `system`.
  std::vector<int> relabel;
};

DualSystem dual(const RootSystem& rs);

/// rho_B as the all-ones vector in the fundamental-weight basis.
Weight rho(const RootSystem& rs);

struct KostantMultisets {
  Multiset<Rational> lhs;
  Multiset<Rational> rhs_roots;
  Multiset<Rational> residual;
};

/// Throws InternalConsistencyError if rhs_roots is not contained in lhs.
KostantMultisets kostant_multisets(const RootSystem& rs);

} // namespace eispole
