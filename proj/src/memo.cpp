#include "gl2n/memo.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <string>
#include <vector>

namespace gl2n {

namespace {

constexpr std::size_t kDefaultMemoLimit = std::size_t{1} << 20;

std::size_t limit_from_env() {
  const char* raw = std::getenv("GL2N_MEMO_LIMIT");
  if (raw == nullptr || *raw == '\0') return kDefaultMemoLimit;
  try {
    return static_cast<std::size_t>(std::stoull(raw));
  } catch (const std::exception&) {
    return kDefaultMemoLimit;
  }
}

std::atomic<std::size_t>& limit_slot() {
  static std::atomic<std::size_t> limit{limit_from_env()};
  return limit;
}

std::mutex& clearers_mutex() {
  static std::mutex m;
  return m;
}

std::vector<void (*)()>& clearers() {
  static std::vector<void (*)()> fns;
  return fns;
}

}  // namespace

std::size_t memo_limit() { return limit_slot().load(std::memory_order_relaxed); }

void set_memo_limit(std::size_t limit) { limit_slot().store(limit, std::memory_order_relaxed); }

void clear_all_memos() {
  std::lock_guard lock(clearers_mutex());
  for (auto fn : clearers()) fn();
}

namespace detail {
void register_memo_clearer(void (*clear)()) {
  std::lock_guard lock(clearers_mutex());
  clearers().push_back(clear);
}
}  // namespace detail

}  // namespace gl2n
