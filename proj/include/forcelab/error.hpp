#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace forcelab {

enum class Code {
  NonMonotoneF,
  BadLevelOrder,
  FTooSmall,
  MissingPredecessor,
  AmbiguousPredecessor,
  LimitSplit,
  IndexOutOfRange,
  NonemptyLimitLabel,
  CapExceeded,
  Incompatible,
  NonRectangular,
  FreeCells,
  NotAnExtension,
  StructureMismatch,
  NoWitness,
  NotInDomain,
  BlockExhausted,
  Precondition,
  Overlap,
  NotComparable,
  NotTilde,
  NotBelowRbar,
  PoolExhausted,
  DomainMismatch,
  ConfigError,
  ParseError,
};

std::string_view code_name(Code c);

struct Error {
  Code code;
  std::string detail;
};

using Errors = std::vector<Error>;

std::string describe(const Error& e);
std::string describe(const Errors& es);

class Failure : public std::runtime_error {
 public:
  explicit Failure(Error e) : std::runtime_error(describe(e)), error_(std::move(e)) {}
  const Error& error() const noexcept { return error_; }

 private:
  Error error_;
};

// Either a value or a single error.
template <class T>
class Outcome {
 public:
  Outcome(T v) : v_(std::move(v)) {}
  Outcome(Error e) : v_(std::move(e)) {}

  bool ok() const noexcept { return v_.index() == 0; }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const& {
    if (!ok()) throw Failure(std::get<1>(v_));
    return std::get<0>(v_);
  }
  T& value() & {
    if (!ok()) throw Failure(std::get<1>(v_));
    return std::get<0>(v_);
  }
  T&& value() && {
    if (!ok()) throw Failure(std::get<1>(v_));
    return std::get<0>(std::move(v_));
  }
  const Error& error() const { return std::get<1>(v_); }
  const T* operator->() const { return &value(); }
  const T& operator*() const { return value(); }

 private:
  std::variant<T, Error> v_;
};

inline Error make_error(Code c, std::string detail = {}) { return Error{c, std::move(detail)}; }

}  // namespace forcelab
