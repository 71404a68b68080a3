#include "acmsplit/combinatorics.hpp"

#include <stdexcept>

namespace acmsplit {

Count::Count(Integer v) : value_(std::move(v)) {
  if (value_ < 0) {
    throw std::domain_error("negative dimension count: " + value_.str());
  }
}

namespace {

// Falling factorial divided by k!. The running quotient stays integral at
// every step because prod_{j<i}(a-j)/i! is itself a binomial.
Integer falling_over_factorial(std::int64_t a, std::int64_t k) {
  if (k < 0) {
    throw std::domain_error("binomial with negative k");
  }
  Integer acc = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    acc *= Integer(a - i);
    acc /= Integer(i + 1);
  }
  return acc;
}

}  // namespace

Count binom_trunc(std::int64_t a, std::int64_t k) {
  if (k < 0) {
    throw std::domain_error("binomial with negative k");
  }
  if (a < k) {
    return Count{};
  }
  return Count(falling_over_factorial(a, k));
}

EulerNumber binom_poly(std::int64_t a, std::int64_t k) {
  return EulerNumber(falling_over_factorial(a, k));
}

}  // namespace acmsplit
