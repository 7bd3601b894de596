#ifndef FFYB_ERROR_HPP
#define FFYB_ERROR_HPP

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffyb {

// Arbitrary-precision integer used for every count and group order.
using BigInt = boost::multiprecision::cpp_int;

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad encodings, mismatched dimensions, violated preconditions.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

class SingularMatrix : public Error {
public:
  using Error::Error;
};

// An enumeration would exceed the configured budget.
class BudgetExceeded : public Error {
public:
  BudgetExceeded(const std::string& what, BigInt required, BigInt budget)
      : Error(what + ": requires " + required.str() + " > budget " + budget.str()),
        required_(std::move(required)),
        budget_(std::move(budget)) {}

  const BigInt& required() const { return required_; }
  const BigInt& budget() const { return budget_; }

private:
  BigInt required_;
  BigInt budget_;
};

// A consistency check that can only fail through a bug in this library.
class InternalError : public Error {
public:
  using Error::Error;
};

namespace detail {

[[noreturn]] inline void throw_internal(const std::string& what) {
  throw InternalError("internal inconsistency: " + what);
}

// Exact quotient; throws InternalError when the remainder is nonzero.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* where) {
  if (den == 0) throw_internal(std::string(where) + ": division by zero");
  BigInt quo, rem;
  boost::multiprecision::divide_qr(num, den, quo, rem);
  if (rem != 0)
    throw_internal(std::string(where) + ": inexact division " + num.str() + " / " + den.str());
  return quo;
}

}  // namespace detail
}  // namespace ffyb

#endif  // FFYB_ERROR_HPP
