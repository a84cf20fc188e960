#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcoal {

/// Base class of every recoverable error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bad caller input: out-of-range vertex, bad family parameter, malformed file.
class InputError : public Error {
  public:
    using Error::Error;
};

/// graph6 / edge-list decoding failure. `offset` is the byte position in the record.
class ParseError : public InputError {
  public:
    ParseError(const std::string & what, std::size_t offset) :
        InputError(what + " (at byte " + std::to_string(offset) + ")"), _offset(offset)
    {
    }

    auto offset() const -> std::size_t { return _offset; }

  private:
    std::size_t _offset;
};

/// The graph has an isolated vertex, so no double dominating set exists.
class NoDdsError : public Error {
  public:
    using Error::Error;
};

/// A solver refused the instance (order above the limit) or ran out of node budget.
class ResourceLimitError : public Error {
  public:
    using Error::Error;
};

/// A closed-form evaluator was asked about parameters outside its proven range.
class NotApplicableError : public Error {
  public:
    using Error::Error;
};

/// An internal invariant or a documented precondition was broken.
class ContractError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace dcoal
