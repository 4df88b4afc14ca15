#include "kdjm/deadline.hpp"

namespace kdjm {

namespace detail {
thread_local bool deadline_active = false;
thread_local unsigned deadline_countdown = 1;
namespace {
thread_local ScopedDeadline::Clock::time_point deadline_at{};
constexpr unsigned kPollStride = 64;
}  // namespace

void check_deadline_now() {
  deadline_countdown = kPollStride;
  if (ScopedDeadline::Clock::now() >= deadline_at) throw TimeoutExpired();
}
}  // namespace detail

ScopedDeadline::ScopedDeadline(Clock::time_point at)
    : had_previous_(detail::deadline_active), previous_(detail::deadline_at) {
  detail::deadline_active = true;
  detail::deadline_at = at;
  detail::deadline_countdown = 1;
}

ScopedDeadline::~ScopedDeadline() {
  detail::deadline_active = had_previous_;
  detail::deadline_at = previous_;
  detail::deadline_countdown = 1;
}

}  // namespace kdjm
