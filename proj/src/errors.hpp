#pragma once

#include <stdexcept>
#include <string>

namespace tracecode {

enum class Errc {
  NotPrime = 1,
  NotIrreducible,
  Overflow,
  DivisionByZero,
  ZeroArgument,
  UnsupportedM,
  BudgetExceeded,
  BadArgument,
  Io,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace tracecode
