#include "eispole/pipeline.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>

namespace eispole {

CaseResult compute_case(std::shared_ptr<const RootSystem> rs, int node, bool verify) {
  const ParabolicData pd(rs, node);
  CaseResult out;
  out.kind = rs->kind();
  out.node = node;
  out.nilradical_dim = pd.nilradical().size();
  out.analysis = analyze(pd);
  if (verify) out.oracle = cross_check(pd);
  return out;
}

std::vector<CaseResult> compute_cases(const std::vector<CaseRequest>& requests, bool verify,
                                      int max_rank) {
  // Root systems are immutable once built, so workers share them.
  std::map<RootSystemKind, std::shared_ptr<const RootSystem>> systems;
  for (const auto& [kind, node] : requests)
    if (!systems.count(kind))
      systems.emplace(kind, std::make_shared<const RootSystem>(build_root_system(kind, max_rank)));

  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(requests.size(), 1));
  std::vector<std::future<std::vector<std::pair<std::size_t, CaseResult>>>> futures;
  for (std::size_t w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w] {
      std::vector<std::pair<std::size_t, CaseResult>> local;
      for (std::size_t i = w; i < requests.size(); i += workers)
        local.emplace_back(i, compute_case(systems.at(requests[i].first), requests[i].second, verify));
      return local;
    }));
  }

  std::vector<std::optional<CaseResult>> slots(requests.size());
  for (auto& f : futures)
    for (auto& [i, r] : f.get()) slots[i] = std::move(r);
  std::vector<CaseResult> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<CaseRequest> all_maximal_parabolics(int max_rank) {
  std::vector<CaseRequest> out;
  for (const auto& kind : all_kinds(max_rank))
    for (int node = 1; node <= kind.rank; ++node) out.emplace_back(kind, node);
  return out;
}

} // namespace eispole
