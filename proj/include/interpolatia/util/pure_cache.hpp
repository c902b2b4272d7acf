#pragma once

#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace interpolatia::util {

/// Memo table for a pure function: concurrent lookups, serialized inserts.
/// A racing duplicate computation is harmless since both results are equal.
template <class Key, class Value, class Hash = std::hash<Key>>
class PureCache {
 public:
  template <class F>
  Value get_or_compute(const Key& key, F&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    Value v = compute();
    std::unique_lock lock(mutex_);
    return map_.try_emplace(key, std::move(v)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value, Hash> map_;
};

}  // namespace interpolatia::util
