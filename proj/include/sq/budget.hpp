#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "sq/errors.hpp"

namespace sq {

/// Wall-clock guard for the enumeration oracles.  A default-constructed
/// budget never fires; a bounded one throws BudgetExceeded once the deadline
/// has passed.  Enumerators call check() at loop heads, so overruns are
/// detected within one inner-loop iteration.
class Budget {
public:
    Budget() = default;

    static Budget unlimited() { return Budget{}; }

    static Budget wall_clock_ms(std::int64_t ms) {
        Budget b;
        b.deadline_ = clock::now() + std::chrono::milliseconds(ms);
        return b;
    }

    void check(const char* where) const {
        if (deadline_ && clock::now() > *deadline_)
            fail(ErrorKind::BudgetExceeded, std::string("wall clock budget exhausted in ") + where);
    }

private:
    using clock = std::chrono::steady_clock;
    std::optional<clock::time_point> deadline_;
};

} // namespace sq
