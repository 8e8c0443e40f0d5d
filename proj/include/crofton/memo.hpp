#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace crofton {

/// Thread-safe memo table. Values are computed outside the lock, so two
/// threads may race to compute the same key; the first insert wins and both
/// results are identical because the computations are pure.
template <class Key, class Value>
class MemoTable {
 public:
  std::optional<Value> find(const Key& k) const {
    std::shared_lock lock(mu_);
    auto it = table_.find(k);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  Value insert(const Key& k, Value v) {
    std::unique_lock lock(mu_);
    return table_.try_emplace(k, std::move(v)).first->second;
  }

  template <class Fn>
  Value get_or_compute(const Key& k, Fn&& compute) {
    if (auto hit = find(k)) return *std::move(hit);
    return insert(k, compute());
  }

  void clear() {
    std::unique_lock lock(mu_);
    table_.clear();
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<Key, Value> table_;
};

}  // namespace crofton
