#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "eispole/parabolic.hpp"
#include "eispole/residue_oracle.hpp"
#include "eispole/rootsys.hpp"

namespace eispole {

struct CaseResult {
  RootSystemKind kind;
  int node = 0;
  /// Number of nilradical roots.
  std::size_t nilradical_dim = 0;
  PoleAnalysis analysis;
  std::optional<CrossCheckReport> oracle;
};

/// Runs grading -> decomposition -> p(s), and the residue cross-check when
/// verify is set. Throws ArgumentError for a bad node.
CaseResult compute_case(std::shared_ptr<const RootSystem> rs, int node, bool verify);

using CaseRequest = std::pair<RootSystemKind, int>;

/// Fans the requests out over worker threads; results keep request order.
/// Exceptions from any worker are rethrown.
std::vector<CaseResult> compute_cases(const std::vector<CaseRequest>& requests, bool verify,
                                      int max_rank = kDefaultMaxRank);

/// Every (kind, node) with rank <= max_rank.
std::vector<CaseRequest> all_maximal_parabolics(int max_rank = kDefaultMaxRank);

} // namespace eispole
