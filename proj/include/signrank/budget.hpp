#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

namespace signrank {

/// Wall-clock cap for exponential searches. A default-constructed budget never expires.
class Budget {
 public:
  using Clock = std::chrono::steady_clock;

  Budget() = default;

  static Budget unlimited() { return {}; }
  static Budget milliseconds(std::int64_t ms) {
    Budget b;
    if (ms > 0) b.deadline_ = Clock::now() + std::chrono::milliseconds(ms);
    return b;
  }

  bool limited() const { return deadline_.has_value(); }
  bool expired() const { return deadline_ && Clock::now() >= *deadline_; }

 private:
  std::optional<Clock::time_point> deadline_;
};

enum class SearchStatus {
  Found,
  Exhausted,       // the finite search space holds no solution
  BudgetExceeded,  // inconclusive
};

inline std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

template <typename T>
struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<T> value;

  bool found() const { return status == SearchStatus::Found; }
  explicit operator bool() const { return found(); }
};

}  // namespace signrank
