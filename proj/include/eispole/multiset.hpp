#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <vector>

namespace eispole {

/// Finite multiset with ordered keys; entries with count zero are never stored.
template <typename T>
class Multiset {
public:
  using map_type = std::map<T, std::size_t>;
  using const_iterator = typename map_type::const_iterator;

  Multiset() = default;
  Multiset(std::initializer_list<T> items) {
    for (const auto& x : items) insert(x);
  }
  template <typename Range>
  static Multiset from_range(const Range& items) {
    Multiset m;
    for (const auto& x : items) m.insert(x);
    return m;
  }

  void insert(const T& x, std::size_t times = 1) {
    if (times == 0) return;
    counts_[x] += times;
    size_ += times;
  }

  /// Removes one copy; returns false if x was absent.
  bool erase_one(const T& x) {
    auto it = counts_.find(x);
    if (it == counts_.end()) return false;
    if (--it->second == 0) counts_.erase(it);
    --size_;
    return true;
  }

  std::size_t count(const T& x) const {
    auto it = counts_.find(x);
    return it == counts_.end() ? 0 : it->second;
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::size_t distinct() const { return counts_.size(); }

  const_iterator begin() const { return counts_.begin(); }
  const_iterator end() const { return counts_.end(); }

  bool is_subset_of(const Multiset& other) const {
    for (const auto& [x, n] : counts_)
      if (other.count(x) < n) return false;
    return true;
  }

  /// this minus other, or nullopt when other is not contained in this.
  std::optional<Multiset> minus(const Multiset& other) const {
    if (!other.is_subset_of(*this)) return std::nullopt;
    Multiset out;
    for (const auto& [x, n] : counts_) out.insert(x, n - other.count(x));
    return out;
  }

  Multiset& operator+=(const Multiset& other) {
    for (const auto& [x, n] : other.counts_) insert(x, n);
    return *this;
  }

  /// Elements in ascending order, repeated by multiplicity.
  std::vector<T> expand() const {
    std::vector<T> out;
    out.reserve(size_);
    for (const auto& [x, n] : counts_) out.insert(out.end(), n, x);
    return out;
  }

  friend bool operator==(const Multiset& a, const Multiset& b) {
    return a.counts_ == b.counts_;
  }

private:
  map_type counts_;
  std::size_t size_ = 0;
};

} // namespace eispole
