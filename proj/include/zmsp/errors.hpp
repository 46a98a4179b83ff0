#pragma once

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace zmsp {

/// A caller violated an operation's precondition (bad shape, order mismatch,
/// non-prime argument, ...). Maps to CLI exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured state/monomial budget or a factorial guard would be exceeded.
/// Maps to CLI exit code 3.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An evaluation that must be a rational integer produced a non-integer
/// cyclotomic value. Never expected; maps to CLI exit code 1.
class IntegralityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proven statement failed on a concrete instance (exit code 1).
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zmsp

// Internal invariant; a failure is a bug in this library.
#define ZMSP_CHECK(cond, msg)                                              \
  do {                                                                     \
    if (!(cond)) {                                                         \
      std::fprintf(stderr, "%s:%d: internal check failed: %s (%s)\n",      \
                   __FILE__, __LINE__, #cond, std::string(msg).c_str());   \
      std::abort();                                                        \
    }                                                                      \
  } while (0)
