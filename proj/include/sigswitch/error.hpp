#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sigswitch {

/// Malformed graph6 text, bad family spec and similar input problems.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation refused to run because an input exceeded a size bound.
/// `guard()` names the bound so front ends can report it verbatim.
class GuardError : public std::runtime_error {
 public:
  GuardError(std::string guard, std::uint64_t limit, std::uint64_t actual)
      : std::runtime_error(guard + " exceeded: " + std::to_string(actual) + " > limit " +
                           std::to_string(limit)),
        guard_(std::move(guard)),
        limit_(limit),
        actual_(actual) {}

  const std::string& guard() const noexcept { return guard_; }
  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t actual() const noexcept { return actual_; }

 private:
  std::string guard_;
  std::uint64_t limit_;
  std::uint64_t actual_;
};

}  // namespace sigswitch
