#pragma once

#include <chrono>
#include <limits>

namespace scg {

/// Wall-clock deadline polled cooperatively at solver loop boundaries.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;

  static Deadline after(double seconds) {
    Deadline d;
    if (seconds < std::numeric_limits<double>::infinity() && seconds >= 0) {
      d.limited_ = true;
      d.end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(seconds));
    }
    return d;
  }

  static Deadline never() { return {}; }

  bool limited() const { return limited_; }
  bool expired() const { return limited_ && Clock::now() >= end_; }

 private:
  bool limited_ = false;
  Clock::time_point end_{};
};

/// Milliseconds elapsed since construction.
class Stopwatch {
 public:
  Stopwatch() : start_(Deadline::Clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Deadline::Clock::now() - start_).count();
  }

 private:
  Deadline::Clock::time_point start_;
};

}  // namespace scg
