#include "acmsplit/affine.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "acmsplit/errors.hpp"

namespace acmsplit {

AffineExpr AffineExpr::variable(const std::string& name, std::int64_t coeff) {
  AffineExpr e;
  e.add_term(name, coeff);
  return e;
}

void AffineExpr::add_term(const std::string& name, std::int64_t coeff) {
  auto& slot = coeffs_[name];
  slot += coeff;
  if (slot == 0) coeffs_.erase(name);
}

std::int64_t AffineExpr::coefficient(const std::string& name) const {
  auto it = coeffs_.find(name);
  return it == coeffs_.end() ? 0 : it->second;
}

std::set<std::string> AffineExpr::variables() const {
  std::set<std::string> out;
  for (const auto& [name, _] : coeffs_) out.insert(name);
  return out;
}

std::int64_t AffineExpr::evaluate(const Binding& values) const {
  std::int64_t v = constant_;
  for (const auto& [name, coeff] : coeffs_) {
    auto it = values.find(name);
    if (it == values.end()) {
      throw UnresolvedParameter("no value supplied for parameter '" + name + "'");
    }
    v += coeff * it->second;
  }
  return v;
}

AffineExpr AffineExpr::substitute(const std::string& name, const AffineExpr& value) const {
  const std::int64_t k = coefficient(name);
  if (k == 0) return *this;
  AffineExpr out = *this;
  out.coeffs_.erase(name);
  return out + k * value;
}

std::string AffineExpr::str() const {
  std::string out;
  for (const auto& [name, coeff] : coeffs_) {
    if (coeff < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    const std::int64_t mag = std::llabs(coeff);
    if (mag != 1) out += std::to_string(mag) + "*";
    out += name;
  }
  if (constant_ != 0 || out.empty()) {
    if (constant_ >= 0 && !out.empty()) out += "+";
    out += std::to_string(constant_);
  }
  return out;
}

AffineExpr& AffineExpr::operator+=(const AffineExpr& o) {
  constant_ += o.constant_;
  for (const auto& [name, coeff] : o.coeffs_) add_term(name, coeff);
  return *this;
}

AffineExpr& AffineExpr::operator-=(const AffineExpr& o) { return *this += -1 * o; }

AffineExpr& AffineExpr::operator*=(std::int64_t k) {
  constant_ *= k;
  if (k == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [_, coeff] : coeffs_) coeff *= k;
  return *this;
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  AffineExpr run() {
    AffineExpr acc;
    skip_ws();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      acc += sign * term();
      skip_ws();
      first = false;
    }
    return acc;
  }

 private:
  AffineExpr term() {
    if (at_end()) fail("dangling sign");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::int64_t n = integer();
      skip_ws();
      if (!at_end() && peek() == '*') {
        get();
        skip_ws();
        return AffineExpr::variable(identifier(), n);
      }
      return AffineExpr(n);
    }
    return AffineExpr::variable(identifier());
  }

  std::int64_t integer() {
    std::int64_t value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{}) fail("bad integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  std::string identifier() {
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      fail("expected a parameter name");
    }
    std::string name;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      name += get();
    }
    return name;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("affine expression \"" + std::string(text_) + "\": " + what + " at offset " +
                     std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AffineExpr AffineExpr::parse(std::string_view text) { return ExprParser(text).run(); }

}  // namespace acmsplit
