#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permstats {

// Malformed input: duplicate digits, bad pattern length, unparseable text.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A word over {U,D} that is not a Dyck word. index() is the first offending step (0-based).
class InvalidDyck : public InvalidInput {
public:
    InvalidDyck(const std::string& what, std::size_t index)
        : InvalidInput(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// A map was handed an input outside its domain (e.g. psi on a 321-containing permutation).
class PreconditionError : public std::invalid_argument {
public:
    PreconditionError(const std::string& what, std::string violated)
        : std::invalid_argument(what), violated_(std::move(violated)) {}
    const std::string& violated_pattern() const noexcept { return violated_; }

private:
    std::string violated_;
};

class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The requested (method, statistic, basis) combination has no implementation.
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ArithmeticOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

} // namespace permstats
