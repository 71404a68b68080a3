#include "acmsplit/euler.hpp"

#include <stdexcept>
#include <string>

#include "acmsplit/errors.hpp"

namespace acmsplit {

int stability_index(const BundleNumerics& bn) { return 2 * bn.b - bn.c1; }

std::int64_t sectional_genus(int r, int c1, std::int64_t c2) {
  const std::int64_t twice = c2 * (c1 + r - 5);
  if (twice % 2 != 0) {
    throw ArithmeticError("c2 (c1 + r - 5) = " + std::to_string(twice) +
                          " is odd: no integral sectional genus for (r, c1, c2) = (" +
                          std::to_string(r) + ", " + std::to_string(c1) + ", " +
                          std::to_string(c2) + ")");
  }
  return 1 + twice / 2;
}

std::int64_t sectional_genus(const BundleNumerics& bn) {
  return sectional_genus(bn.ctx.degree(), bn.c1, bn.c2);
}

std::int64_t pfaffian_c2(int r) {
  if (r < 1) throw std::invalid_argument("pfaffian_c2 needs r >= 1");
  const std::int64_t rr = r;
  return rr * (rr - 1) * (2 * rr - 1) / 6;
}

std::vector<int> c1_candidate_range(int r) {
  if (r < 3) throw std::invalid_argument("c1_candidate_range needs r >= 3");
  std::vector<int> out;
  for (int c1 = 4 - r; c1 < r; ++c1) out.push_back(c1);
  return out;
}

int duality_partner(const HypersurfaceContext& ctx, int c1, int n) {
  return -c1 - n + ctx.degree() - 6;
}

EulerNumber chi_bundle_pinned(const HypersurfaceContext& ctx, int c1, int n) {
  const int nu = duality_partner(ctx, c1, n);
  if (n + c1 > 0 || nu + c1 > 0) {
    throw std::domain_error("twist n=" + std::to_string(n) + " (partner " + std::to_string(nu) +
                            ") is not pinned by ACM data for c1=" + std::to_string(c1));
  }
  // h^0(E(k)) = h^0(O_X(k)) once k + c1 <= 0, since I_S(k + c1) has no sections.
  return EulerNumber(h0_hyp(ctx, n)) + EulerNumber(h0_hyp(ctx, nu));
}

namespace {

// χ(O_S(n + c1)) from  0 -> O_X(n) -> E(n) -> I_S(n + c1) -> 0.
EulerNumber chi_surface(const HypersurfaceContext& ctx, int c1, int n) {
  return chi_hyp(ctx, n) + chi_hyp(ctx, n + c1) - chi_bundle_pinned(ctx, c1, n);
}

}  // namespace

std::int64_t solve_c2_boundary(const HypersurfaceContext& ctx, int c1) {
  const int r = ctx.degree();
  if (c1 != 3 - r && c1 != 4 - r) {
    throw std::invalid_argument("solve_c2_boundary: c1=" + std::to_string(c1) +
                                " is not a boundary value (3 - r or 4 - r)");
  }
  const int n0 = -c1;
  const Integer chi0 = chi_surface(ctx, c1, n0).value();
  const Integer chi_minus = chi_surface(ctx, c1, n0 - 1).value();
  const int e = c1 + r - 6;
  // 2g - 2 = 2 (χ(O_S(-1)) - χ(O_S)) = c2 (1 + e)
  const Integer numerator = 2 * (chi_minus - chi0);
  const Integer denominator = 1 + e;
  if (denominator == 0 || numerator % denominator != 0) {
    throw ArithmeticError("boundary c2 is not integral for r=" + std::to_string(r) +
                          ", c1=" + std::to_string(c1));
  }
  const Integer c2 = numerator / denominator;
  if (c2 <= 0) {
    throw ArithmeticError("boundary c2 is not positive for r=" + std::to_string(r) +
                          ", c1=" + std::to_string(c1));
  }
  return static_cast<std::int64_t>(c2);
}

}  // namespace acmsplit
