#pragma once

#include "suslink/integer.hpp"

#include <compare>
#include <iosfwd>
#include <string>

namespace suslink {

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer n, Integer d);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return suslink::sign(num_); }
  Rational abs() const { return Rational(suslink::abs(num_), den_, raw_tag{}); }
  Integer floor() const { return floor_div(num_, den_); }

  Rational operator-() const { return Rational(-num_, den_, raw_tag{}); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;
  static Rational parse(const std::string& text);

 private:
  struct raw_tag {};
  Rational(Integer n, Integer d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}
  void reduce();

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace suslink
