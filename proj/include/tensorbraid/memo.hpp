#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace tensorbraid {

// Thread-safe memo table.  Values are computed outside the lock; a racing
// duplicate computation is discarded in favour of the first insertion.
template <class Key, class Value>
class Memo {
 public:
  template <class Compute>
  Value get(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace tensorbraid
