#include "latticekit/errors.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

namespace latticekit {

namespace {
std::atomic<bool> g_warnings_enabled{true};
std::mutex g_log_mutex;
}  // namespace

void log_warning(const std::string& message) {
  if (!g_warnings_enabled.load(std::memory_order_relaxed)) return;
  std::lock_guard lock(g_log_mutex);
  std::cerr << "latticekit: warning: " << message << '\n';
}

void set_warnings_enabled(bool enabled) {
  g_warnings_enabled.store(enabled, std::memory_order_relaxed);
}

}  // namespace latticekit
