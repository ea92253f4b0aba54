#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cinf {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (bad symbol, bad number, ...).
class ParseError : public Error {
public:
    using Error::Error;
};

/// The derivative was requested on a word containing 111 or 222.
class NotDifferentiable : public Error {
public:
    using Error::Error;
};

/// The derivative chain of a word hits a non-differentiable level.
///
/// `level()` is the index j of the first chain level D^j(w) that contains a
/// tripled letter; the word is (j)-differentiable but not (j+1)-differentiable.
class NotCInfinity : public Error {
public:
    NotCInfinity(const std::string& word, std::size_t level)
        : Error("not C-infinity: " + word + " (level " + std::to_string(level) +
                " is not differentiable)"),
          level_(level) {}

    std::size_t level() const noexcept { return level_; }

private:
    std::size_t level_;
};

class RootOfEmpty : public Error {
public:
    RootOfEmpty() : Error("the empty word has no root") {}
};

class NotMinimalForbidden : public Error {
public:
    using Error::Error;
};

/// Two independent characterizations of the same fact disagreed.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

/// A frontier pair (or single frontier) that no C-infinity word realizes.
class Inconsistent : public Error {
public:
    Inconsistent(const std::string& what, std::size_t level)
        : Error("inconsistent vertical representation at level " + std::to_string(level) +
                ": " + what),
          level_(level) {}

    std::size_t level() const noexcept { return level_; }

private:
    std::size_t level_;
};

/// The gap search ran past its length budget.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(std::size_t max_total)
        : Error("gap search exceeded max total length " + std::to_string(max_total)),
          max_total_(max_total) {}

    std::size_t max_total() const noexcept { return max_total_; }

private:
    std::size_t max_total_;
};

}  // namespace cinf
