#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace acmsplit {

using Integer = boost::multiprecision::cpp_int;

namespace detail {
inline std::strong_ordering compare(const Integer& a, const Integer& b) {
  const int c = a.compare(b);
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}
}  // namespace detail

/// Dimension of a vector space. Never negative.
class Count {
 public:
  Count() = default;
  /// Throws std::domain_error if `v` is negative.
  explicit Count(Integer v);
  Count(std::int64_t v) : Count(Integer(v)) {}  // NOLINT: literals read naturally in tables

  const Integer& value() const noexcept { return value_; }
  std::string str() const { return value_.str(); }

  friend Count operator+(const Count& a, const Count& b) { return Count(a.value_ + b.value_); }
  Count& operator+=(const Count& o) {
    value_ += o.value_;
    return *this;
  }

  friend bool operator==(const Count&, const Count&) = default;
  friend std::strong_ordering operator<=>(const Count& a, const Count& b) {
    return detail::compare(a.value_, b.value_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Count& c) { return os << c.value_; }

 private:
  Integer value_{0};
};

/// An Euler characteristic. Any sign.
class EulerNumber {
 public:
  EulerNumber() = default;
  explicit EulerNumber(Integer v) : value_(std::move(v)) {}
  EulerNumber(std::int64_t v) : value_(v) {}  // NOLINT
  EulerNumber(const Count& c) : value_(c.value()) {}  // NOLINT: every count is a valid χ

  const Integer& value() const noexcept { return value_; }
  std::string str() const { return value_.str(); }

  friend EulerNumber operator+(const EulerNumber& a, const EulerNumber& b) {
    return EulerNumber(a.value_ + b.value_);
  }
  friend EulerNumber operator-(const EulerNumber& a, const EulerNumber& b) {
    return EulerNumber(a.value_ - b.value_);
  }
  friend EulerNumber operator-(const EulerNumber& a) { return EulerNumber(-a.value_); }
  EulerNumber& operator+=(const EulerNumber& o) {
    value_ += o.value_;
    return *this;
  }
  EulerNumber& operator-=(const EulerNumber& o) {
    value_ -= o.value_;
    return *this;
  }

  friend bool operator==(const EulerNumber&, const EulerNumber&) = default;
  friend std::strong_ordering operator<=>(const EulerNumber& a, const EulerNumber& b) {
    return detail::compare(a.value_, b.value_);
  }
  friend std::ostream& operator<<(std::ostream& os, const EulerNumber& e) { return os << e.value_; }

 private:
  Integer value_{0};
};

// Two binomial conventions. They agree for a >= k >= 0 and must not be
// swapped for one another: h^0 counts truncate, Euler characteristics do not.

/// a(a-1)...(a-k+1)/k! when a >= k, otherwise 0. Equals the number of
/// monomials of degree a-k in k+1 variables.
Count binom_trunc(std::int64_t a, std::int64_t k);

/// Generalized binomial a(a-1)...(a-k+1)/k!, valid for every integer a.
EulerNumber binom_poly(std::int64_t a, std::int64_t k);

}  // namespace acmsplit
