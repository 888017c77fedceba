#include "decalg/scalar.hpp"

#include <cmath>
#include <sstream>

namespace decalg {

Scalar Scalar::ratio(const Int& num, const Int& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  Rational q(num);
  q /= Rational(den);
  return Scalar(q);
}

const Rational& Scalar::rat() const {
  if (!exact()) throw ScalarMismatch("expected exact rational, got complex float");
  return std::get<Rational>(v_);
}

Complex Scalar::to_complex() const {
  if (exact()) return Complex(static_cast<double>(std::get<Rational>(v_)), 0.0);
  return std::get<Complex>(v_);
}

void Scalar::check_same(const Scalar& a, const Scalar& b) {
  if (a.exact() != b.exact())
    throw ScalarMismatch("mixed exact/float scalar arithmetic");
}

Scalar Scalar::operator-() const {
  if (exact()) return Scalar(Rational(-std::get<Rational>(v_)));
  return Scalar(-std::get<Complex>(v_));
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(*this, o);
  if (exact()) return Scalar(Rational(std::get<Rational>(v_) + std::get<Rational>(o.v_)));
  return Scalar(std::get<Complex>(v_) + std::get<Complex>(o.v_));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(*this, o);
  if (exact()) return Scalar(Rational(std::get<Rational>(v_) - std::get<Rational>(o.v_)));
  return Scalar(std::get<Complex>(v_) - std::get<Complex>(o.v_));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(*this, o);
  if (exact()) return Scalar(Rational(std::get<Rational>(v_) * std::get<Rational>(o.v_)));
  return Scalar(std::get<Complex>(v_) * std::get<Complex>(o.v_));
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(*this, o);
  if (exact()) {
    if (std::get<Rational>(o.v_) == 0) throw InvalidArgument("division by zero");
    return Scalar(Rational(std::get<Rational>(v_) / std::get<Rational>(o.v_)));
  }
  return Scalar(std::get<Complex>(v_) / std::get<Complex>(o.v_));
}

bool Scalar::operator==(const Scalar& o) const {
  if (exact() != o.exact()) return false;
  if (exact()) return std::get<Rational>(v_) == std::get<Rational>(o.v_);
  return std::get<Complex>(v_) == std::get<Complex>(o.v_);
}

bool Scalar::is_zero(double eps) const {
  if (exact()) return std::get<Rational>(v_) == 0;
  return std::abs(std::get<Complex>(v_)) < eps;
}

bool Scalar::is_one(double eps) const {
  if (exact()) return std::get<Rational>(v_) == 1;
  return std::abs(std::get<Complex>(v_) - Complex(1, 0)) < eps;
}

bool Scalar::is_integral(double eps) const {
  if (exact()) return denominator(std::get<Rational>(v_)) == 1;
  Complex z = std::get<Complex>(v_);
  return std::abs(z.imag()) < eps && std::abs(z.real() - std::round(z.real())) < eps;
}

Scalar Scalar::conj() const {
  if (exact()) return *this;
  return Scalar(std::conj(std::get<Complex>(v_)));
}

double Scalar::abs_double() const {
  if (exact()) return std::abs(static_cast<double>(std::get<Rational>(v_)));
  return std::abs(std::get<Complex>(v_));
}

std::string Scalar::str() const {
  if (exact()) {
    const Rational& q = std::get<Rational>(v_);
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
  }
  Complex z = std::get<Complex>(v_);
  std::ostringstream os;
  os.precision(17);
  if (z.imag() == 0.0)
    os << z.real();
  else
    os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
  return os.str();
}

Scalar Scalar::parse(const std::string& s) {
  if (s.empty()) throw InvalidArgument("empty scalar literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
          s.find('E') != std::string::npos) {
        return Scalar(Complex(std::stod(s), 0.0));
      }
      return Scalar(Rational(Int(s)));
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return Scalar::ratio(num, den);
  } catch (const std::exception&) {
    throw InvalidArgument("bad scalar literal: " + s);
  }
}

Vector vec_add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InvalidArgument("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector vec_sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InvalidArgument("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector vec_scale(const Scalar& c, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Scalar vec_dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InvalidArgument("vector length mismatch");
  if (a.empty()) return Scalar(0);
  Scalar s = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool vec_is_zero(const Vector& v, double eps) {
  for (const auto& x : v)
    if (!x.is_zero(eps)) return false;
  return true;
}

Vector vec_zero(std::size_t n, bool exact) {
  return Vector(n, exact ? Scalar(0) : Scalar(Complex(0, 0)));
}

}  // namespace decalg
