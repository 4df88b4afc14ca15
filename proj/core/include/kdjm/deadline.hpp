#pragma once

#include <chrono>
#include <stdexcept>

namespace kdjm {

class TimeoutExpired : public std::runtime_error {
 public:
  TimeoutExpired() : std::runtime_error("deadline expired") {}
};

/// Installs a wall-clock deadline for the current thread. Long-running
/// algorithms call poll_deadline() at coarse checkpoints and unwind with
/// TimeoutExpired once it has passed. Scopes nest; the innermost wins.
class ScopedDeadline {
 public:
  using Clock = std::chrono::steady_clock;

  explicit ScopedDeadline(Clock::time_point at);
  explicit ScopedDeadline(Clock::duration budget) : ScopedDeadline(Clock::now() + budget) {}
  ~ScopedDeadline();

  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

 private:
  bool had_previous_;
  Clock::time_point previous_;
};

namespace detail {
void check_deadline_now();
extern thread_local bool deadline_active;
extern thread_local unsigned deadline_countdown;
}  // namespace detail

/// Cheap when no deadline is installed; reads the clock every 64 calls.
inline void poll_deadline() {
  if (!detail::deadline_active) return;
  if (--detail::deadline_countdown != 0) return;
  detail::check_deadline_now();
}

}  // namespace kdjm
