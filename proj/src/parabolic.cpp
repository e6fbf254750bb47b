#include "eispole/parabolic.hpp"

#include <string>
#include <utility>

#include "eispole/error.hpp"

namespace eispole {

ParabolicData::ParabolicData(std::shared_ptr<const RootSystem> rs, int node)
    : rs_(std::move(rs)), node_(node) {
  const int n = rs_->rank();
  if (node < 1 || node > n)
    throw ArgumentError("node " + std::to_string(node) + " out of range 1.." + std::to_string(n) +
                        " for " + to_string(rs_->kind()));
  for (int i = 0; i < n; ++i)
    if (i != beta()) theta_.push_back(i);

  two_rho_levi_.assign(static_cast<std::size_t>(n), 0);
  const auto roots = rs_->positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (roots[k].root.coeffs[static_cast<std::size_t>(beta())] == 0) {
      levi_.push_back(k);
      for (int i = 0; i < n; ++i)
        two_rho_levi_[static_cast<std::size_t>(i)] += roots[k].root.coeffs[static_cast<std::size_t>(i)];
    } else {
      nilradical_.push_back(k);
    }
  }
}

int ParabolicData::eigenvalue(const Coroot& c) const { return rs_->pair(two_rho_levi_, c.coeffs); }

ParabolicData parabolic_data(std::shared_ptr<const RootSystem> rs, int node) {
  return ParabolicData(std::move(rs), node);
}

ParabolicData parabolic_data(const RootSystem& rs, int node) {
  return ParabolicData(std::make_shared<const RootSystem>(rs), node);
}

int coroot_level(const ParabolicData& pd, const Coroot& c) {
  const auto& rs = pd.root_system();
  const auto idx = rs.index_of(c);
  if (!idx || c.coeffs.size() != static_cast<std::size_t>(rs.rank()))
    throw ArgumentError("not a positive coroot of " + to_string(rs.kind()));
  const int j = pd.level(c);
  if (j == 0) throw ArgumentError("coroot lies in the Levi, not the nilradical");
  return j;
}

std::size_t GradedEigenvalues::total_dimension() const {
  std::size_t total = 0;
  for (const auto& [j, weights] : levels) total += weights.size();
  return total;
}

GradedEigenvalues graded_eigenvalues(const ParabolicData& pd) {
  GradedEigenvalues out;
  const auto roots = pd.root_system().positive_roots();
  for (std::size_t k : pd.nilradical()) {
    const Coroot& c = roots[k].coroot;
    out.levels[pd.level(c)].insert(pd.eigenvalue(c));
  }
  return out;
}

AffineForm affine_form(const ParabolicData& pd, const Coroot& c) {
  return AffineForm{Rational(pd.eigenvalue(c), 2), pd.level(c)};
}

} // namespace eispole
