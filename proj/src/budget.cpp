#include "froblab/budget.hpp"

#include <atomic>
#include <cstdlib>

namespace froblab {

namespace {

std::uint64_t initial_budget() {
    if (const char* env = std::getenv("FROBLAB_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return std::uint64_t{1} << 26;
}

std::atomic<std::uint64_t>& budget_slot() {
    static std::atomic<std::uint64_t> slot{initial_budget()};
    return slot;
}

}  // namespace

BudgetError::BudgetError(const std::string& op, std::uint64_t required, std::uint64_t allowed)
    : std::runtime_error("budget exceeded in " + op + ": requires " + std::to_string(required) +
                         " candidates, budget " + std::to_string(allowed)),
      required_(required),
      allowed_(allowed) {}

std::uint64_t default_budget() { return budget_slot().load(); }

void set_default_budget(std::uint64_t b) { budget_slot().store(b); }

void check_budget(const char* op, std::uint64_t required, std::uint64_t budget) {
    const std::uint64_t allowed = budget == 0 ? default_budget() : budget;
    if (required > allowed) throw BudgetError(op, required, allowed);
}

}  // namespace froblab
