#pragma once

#include <cstdint>

#include "acmsplit/combinatorics.hpp"

namespace acmsplit {

/// A smooth hypersurface X_r of degree r in P^5.
class HypersurfaceContext {
 public:
  static constexpr int kAmbientDim = 5;

  /// Throws std::invalid_argument unless r >= 1.
  explicit HypersurfaceContext(int degree);

  int degree() const noexcept { return degree_; }
  int ambient_dim() const noexcept { return kAmbientDim; }
  /// omega_X = O_X(r - 6)
  int canonical_twist() const noexcept { return degree_ - 6; }
  /// dim P(r), the projective space of degree-r forms on P^5.
  Count moduli_dim() const;

 private:
  int degree_;
};

// Line bundles O(k) on P^N.
Count h0_pn(int N, std::int64_t k);
Count hi_pn(int N, std::int64_t k, int i);
EulerNumber chi_pn(int N, std::int64_t k);

// O_X(n) on X_r, read off 0 -> O_P(n - r) -> O_P(n) -> O_X(n) -> 0.
Count h0_hyp(const HypersurfaceContext& ctx, std::int64_t n);
EulerNumber chi_hyp(const HypersurfaceContext& ctx, std::int64_t n);

Count moduli_dim(const HypersurfaceContext& ctx);

}  // namespace acmsplit
