#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace froblab {

/// Thrown when an enumeration would exceed the configured budget.
/// Carries how many candidate objects the call would have had to visit.
class BudgetError : public std::runtime_error {
  public:
    BudgetError(const std::string& op, std::uint64_t required, std::uint64_t allowed);
    std::uint64_t required() const { return required_; }
    std::uint64_t allowed() const { return allowed_; }

  private:
    std::uint64_t required_;
    std::uint64_t allowed_;
};

/// Malformed input: ring/group/weight/poset specs, bad tables, violated preconditions.
class SpecError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Internal consistency failure. If one of these fires, the library has a bug;
/// callers must not attempt to recover.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Default enumeration budget: FROBLAB_BUDGET from the environment, else 2^26.
std::uint64_t default_budget();
void set_default_budget(std::uint64_t b);

/// Throws BudgetError when `required` exceeds `budget` (0 means default).
void check_budget(const char* op, std::uint64_t required, std::uint64_t budget = 0);

}  // namespace froblab
