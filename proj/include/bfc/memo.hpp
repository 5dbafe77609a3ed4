#pragma once

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace bfc {

/// Thread-safe memo table. Values are returned by copy, so callers never
/// observe a shared mutable object.
template <class Key, class Value, class Hash = std::hash<Key>>
class MemoCache {
 public:
  template <class Compute>
  Value get_or_compute(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<Key, Value, Hash> table_;
};

inline void hash_combine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace bfc
