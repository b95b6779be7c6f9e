#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gtop {

/// A search or enumeration hit its node budget before finishing.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error("budget exceeded: " + what) {}
};

/// Input text did not parse under the declared file format.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its precondition (bad parameters,
/// non-subobject, non-stable subobject, mismatched groups, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t default_budget = 10'000'000;

/// Node counter shared by a backtracking search. Exceeding the limit throws;
/// results are never silently truncated.
class Budget {
public:
    explicit Budget(std::uint64_t limit = default_budget, std::string what = "search")
        : limit_(limit), what_(std::move(what))
    {
        if (limit_ == 0)
            throw PreconditionError("budget must be positive");
    }

    void tick(std::uint64_t n = 1)
    {
        used_ += n;
        if (used_ > limit_)
            throw BudgetExceeded(what_ + " (limit " + std::to_string(limit_) + ")");
    }

    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
    std::string what_;
};

} // namespace gtop
