#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace decalg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Arithmetic between an exact-rational and a complex-float value.
struct ScalarMismatch : Error {
  using Error::Error;
};
/// An enumeration or closure hit its configured size cap.
struct CapExceeded : Error {
  using Error::Error;
};
/// Malformed or out-of-contract input (unknown label, shape mismatch, ...).
struct InvalidArgument : Error {
  using Error::Error;
};
/// An object failed its structural validation (non-group table, bad rep, ...).
struct InvalidObject : Error {
  using Error::Error;
};

/// A scalar is either an exact rational (kept in lowest terms with positive
/// denominator) or a complex double.  The two variants never mix silently:
/// arithmetic across variants throws ScalarMismatch.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(int n) : v_(Rational(n)) {}
  Scalar(long long n) : v_(Rational(n)) {}
  Scalar(const Int& n) : v_(Rational(n)) {}
  Scalar(const Rational& q) : v_(q) {}
  explicit Scalar(Complex z) : v_(z) {}
  explicit Scalar(double x) : v_(Complex(x, 0.0)) {}

  static Scalar ratio(const Int& num, const Int& den);

  bool exact() const { return std::holds_alternative<Rational>(v_); }

  const Rational& rat() const;
  /// Widening view: exact values convert, complex values pass through.
  Complex to_complex() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  bool is_zero(double eps) const;
  bool is_one(double eps) const;
  /// |x - nearest integer| <= eps; exact values must be integers exactly.
  bool is_integral(double eps) const;

  Scalar conj() const;
  double abs_double() const;

  std::string str() const;
  static Scalar parse(const std::string& s);

 private:
  std::variant<Rational, Complex> v_;

  static void check_same(const Scalar& a, const Scalar& b);
};

using Vector = std::vector<Scalar>;

Vector vec_add(const Vector& a, const Vector& b);
Vector vec_sub(const Vector& a, const Vector& b);
Vector vec_scale(const Scalar& c, const Vector& v);
/// Standard bilinear dot product (no conjugation).
Scalar vec_dot(const Vector& a, const Vector& b);
bool vec_is_zero(const Vector& v, double eps);
Vector vec_zero(std::size_t n, bool exact);

}  // namespace decalg
