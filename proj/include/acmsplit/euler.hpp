#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "acmsplit/combinatorics.hpp"
#include "acmsplit/proj_cohomology.hpp"

namespace acmsplit {

/// Numerical data (c1, c2, b) of a rank-2 bundle on X_r.
struct BundleNumerics {
  int c1 = 0;
  std::int64_t c2 = 1;
  int b = 0;
  HypersurfaceContext ctx{3};

  bool normalized() const noexcept { return b == 0; }
};

/// 2b - c1; negative means stable, zero strictly semistable, positive unstable.
int stability_index(const BundleNumerics& bn);

/// g from 2g - 2 = c2 (c1 + r - 5). Throws ArithmeticError on odd right-hand side.
std::int64_t sectional_genus(int r, int c1, std::int64_t c2);
std::int64_t sectional_genus(const BundleNumerics& bn);

/// c2 of the pfaffian pair: r(r-1)(2r-1)/6.
std::int64_t pfaffian_c2(int r);

/// { c1 : 3 - r < c1 < r }, ascending.
std::vector<int> c1_candidate_range(int r);

/// Duality partner twist ν = -c1 - n + r - 6: h^4(E(n)) = h^0(E(ν)).
int duality_partner(const HypersurfaceContext& ctx, int c1, int n);

/// χ(E(n)) for a normalized ACM bundle at a twist where both h^0(E(n)) and
/// h^4(E(n)) reduce to sections of O_X, i.e. n + c1 <= 0 and ν + c1 <= 0.
/// Throws std::domain_error when the twist is not pinned.
EulerNumber chi_bundle_pinned(const HypersurfaceContext& ctx, int c1, int n);

/// c2 for the boundary values c1 ∈ {3 - r, 4 - r}. χ(O_S) is eliminated
/// between the two pinned twists n0 = -c1 and n0 - 1, which yields
/// ΔP(0) = 1 - g and hence c2 through the sectional genus formula.
std::int64_t solve_c2_boundary(const HypersurfaceContext& ctx, int c1);

}  // namespace acmsplit
