#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace remlab {

using Vertex = std::uint32_t;

/// Hard cap on host graph order (desk scale).
inline constexpr std::size_t kMaxVertices = 4096;

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: out-of-range vertex, duplicate edge, bad parameter.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// An operation's stated precondition does not hold for this input.
class PreconditionFailed : public Error {
  public:
    using Error::Error;
};

/// A node-expansion budget (or a size budget) ran out before the answer was known.
class BudgetExceeded : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

/// A self-check failed. Indicates a bug, never a legitimate input.
class InternalError : public Error {
  public:
    using Error::Error;
};

/// Node-expansion budget. Counting is deterministic: budgets measure work, not time.
class Budget {
  public:
    static constexpr std::uint64_t kDefaultLimit = 1'000'000'000ULL;

    Budget() : limit_(default_limit()) {}
    explicit Budget(std::uint64_t limit) : limit_(limit) {}

    /// Limit from REMOVAL_LAB_BUDGET when set and parseable, else kDefaultLimit.
    static std::uint64_t default_limit();

    bool charge(std::uint64_t nodes = 1) noexcept
    {
        used_ += nodes;
        return used_ <= limit_;
    }
    /// charge() that throws BudgetExceeded with the given context.
    void spend(std::uint64_t nodes, std::string_view what)
    {
        if (!charge(nodes))
            throw BudgetExceeded(std::string(what) + ": node budget of " + std::to_string(limit_) + " exhausted");
    }
    bool exhausted() const noexcept { return used_ > limit_; }
    std::uint64_t used() const noexcept { return used_; }
    std::uint64_t limit() const noexcept { return limit_; }

  private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

} // namespace remlab
