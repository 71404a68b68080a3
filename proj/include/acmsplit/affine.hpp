#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>

namespace acmsplit {

using Binding = std::map<std::string, std::int64_t>;

/// c + sum_k a_k * v_k over named integer parameters. Zero coefficients are
/// never stored, so two equal expressions compare equal structurally.
class AffineExpr {
 public:
  AffineExpr() = default;
  AffineExpr(std::int64_t constant) : constant_(constant) {}  // NOLINT

  static AffineExpr variable(const std::string& name, std::int64_t coeff = 1);

  /// Accepts forms like "3", "x", "x-2", "2+3*x", "b - c - 2", "-x".
  /// Throws ParseError.
  static AffineExpr parse(std::string_view text);

  std::int64_t constant() const noexcept { return constant_; }
  const std::map<std::string, std::int64_t>& coefficients() const noexcept { return coeffs_; }
  std::int64_t coefficient(const std::string& name) const;
  bool is_constant() const noexcept { return coeffs_.empty(); }
  std::set<std::string> variables() const;

  /// Throws UnresolvedParameter when a variable is missing from `values`.
  std::int64_t evaluate(const Binding& values) const;
  AffineExpr substitute(const std::string& name, const AffineExpr& value) const;

  /// Canonical text: variable terms in name order, then the constant.
  std::string str() const;

  AffineExpr& operator+=(const AffineExpr& o);
  AffineExpr& operator-=(const AffineExpr& o);
  AffineExpr& operator*=(std::int64_t k);
  friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) { return a += b; }
  friend AffineExpr operator-(AffineExpr a, const AffineExpr& b) { return a -= b; }
  friend AffineExpr operator*(std::int64_t k, AffineExpr a) { return a *= k; }
  friend AffineExpr operator-(AffineExpr a) { return a *= -1; }
  friend bool operator==(const AffineExpr&, const AffineExpr&) = default;

 private:
  void add_term(const std::string& name, std::int64_t coeff);

  std::int64_t constant_ = 0;
  std::map<std::string, std::int64_t> coeffs_;
};

}  // namespace acmsplit
