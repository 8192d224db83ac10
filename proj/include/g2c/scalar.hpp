#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace g2c {

using Rational = mpq_class;

/// Base class for all errors raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed numbers, out-of-range indices, failed validation gates.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A theorem-level identity was contradicted by computed data. Always a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Absolute zero threshold for the float backend. Initialised from the
/// G2C_TOLERANCE environment variable, default 1e-9.
double tolerance();
void set_tolerance(double tau);

/// Parses "p/q" or "p" into a canonical rational. Throws ValidationError.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(double x);

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
  static bool is_zero(const Rational& x, double /*scale*/ = 1.0) { return sgn(x) == 0; }
  static Rational from_rational(const Rational& q) { return q; }
  static double to_double(const Rational& q) { return q.get_d(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static bool is_zero(double x, double scale = 1.0) { return std::abs(x) <= tolerance() * scale; }
  static double from_rational(const Rational& q) { return q.get_d(); }
  static double to_double(double x) { return x; }
};

template <class S>
concept Scalar = requires { ScalarTraits<S>::exact; };

template <Scalar S>
bool is_zero(const S& x, double scale = 1.0) {
  return ScalarTraits<S>::is_zero(x, scale);
}

template <Scalar S>
bool near(const S& a, const S& b, double scale = 1.0) {
  S d = a - b;
  return is_zero(d, scale);
}

template <Scalar S>
S from_rational(const Rational& q) {
  return ScalarTraits<S>::from_rational(q);
}

template <Scalar S>
S from_int(long v) {
  return S(v);
}

}  // namespace g2c
