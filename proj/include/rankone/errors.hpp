#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "rankone/bigint.hpp"

namespace rankone {

// Raised when a word or row would exceed the materialization cap.
// Carries the exact length that would have been required.
class CapacityError : public std::runtime_error {
public:
    CapacityError(BigInt required, uint64_t cap)
        : std::runtime_error("materialization cap " + std::to_string(cap) +
                             " exceeded; required " + required.str()),
          required_(std::move(required)), cap_(cap) {}

    const BigInt& required() const { return required_; }
    uint64_t cap() const { return cap_; }

private:
    BigInt required_;
    uint64_t cap_;
};

// Per-length factor counts still changed at the safety recheck depth.
class StabilizationError : public std::runtime_error {
public:
    explicit StabilizationError(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation's structural precondition failed on a concrete stage/index.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(const std::string& msg, int64_t stage = -1, int64_t index = -1)
        : std::runtime_error(msg), stage_(stage), index_(index) {}

    int64_t stage() const { return stage_; }
    int64_t index() const { return index_; }

private:
    int64_t stage_;
    int64_t index_;
};

// A right-special word matched none of the three suffix families.
class ClassificationError : public std::runtime_error {
public:
    explicit ClassificationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rankone
