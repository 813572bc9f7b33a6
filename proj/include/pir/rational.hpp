#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "pir/errors.hpp"

namespace pir {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational in canonical form: denominator > 0,
/// gcd(|num|, den) = 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DivideByZero("rational with zero denominator");
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw DivideByZero("rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  Rational pow(unsigned e) const {
    Rational acc(1);
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
  }

  Rational inverse() const {
    if (num_ == 0) throw DivideByZero("inverse of zero rational");
    return Rational(den_, num_);
  }

  double to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_, den_;
};

}  // namespace pir
