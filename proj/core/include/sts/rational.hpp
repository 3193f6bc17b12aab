#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace sts {

// Exact rational on int64 with eager gcd normalization. Intermediates go
// through 128-bit arithmetic and overflow of the reduced result throws;
// plenty for the divisor sums and orbit formulas handled here.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  std::int64_t as_integer() const {
    if (!is_integer()) throw std::domain_error("rational is not an integer");
    return num_;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  using i128 = __int128;

  static Rational make(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
      throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void assign(std::int64_t num, std::int64_t den) {
    *this = make(num, den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace sts
