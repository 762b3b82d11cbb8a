#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace gl2n {

/// Upper bound on entries per memo table. Initialised from the
/// GL2N_MEMO_LIMIT environment variable (default 2^20); 0 disables memoisation.
std::size_t memo_limit();
void set_memo_limit(std::size_t limit);

/// Drops every memo table registered with clear_all_memos().
void clear_all_memos();

namespace detail {
void register_memo_clearer(void (*clear)());
}

/// Thread-safe read-mostly cache. Lookups take a shared lock; inserts are
/// skipped once the table reaches memo_limit(). Values must be cheap to copy
/// (callers store shared_ptr<const T>).
template <class Key, class Value, class Hash = std::hash<Key>>
class MemoCache {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const Key& key, const Value& value) {
    const std::size_t limit = memo_limit();
    std::unique_lock lock(mutex_);
    if (table_.size() >= limit) return;
    table_.emplace(key, value);
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value, Hash> table_;
};

}  // namespace gl2n
