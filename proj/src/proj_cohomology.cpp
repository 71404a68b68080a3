#include "acmsplit/proj_cohomology.hpp"

#include <stdexcept>
#include <string>

namespace acmsplit {

HypersurfaceContext::HypersurfaceContext(int degree) : degree_(degree) {
  if (degree < 1) {
    throw std::invalid_argument("hypersurface degree must be >= 1, got " + std::to_string(degree));
  }
}

Count HypersurfaceContext::moduli_dim() const {
  return Count(binom_trunc(degree_ + kAmbientDim, kAmbientDim).value() - 1);
}

namespace {

void require_projective_dim(int N) {
  if (N < 1) {
    throw std::invalid_argument("projective dimension must be >= 1");
  }
}

}  // namespace

Count h0_pn(int N, std::int64_t k) {
  require_projective_dim(N);
  return binom_trunc(k + N, N);
}

Count hi_pn(int N, std::int64_t k, int i) {
  require_projective_dim(N);
  if (i < 0 || i > N) {
    throw std::invalid_argument("cohomological degree out of range");
  }
  if (i == 0) return h0_pn(N, k);
  if (i == N) return binom_trunc(-k - 1, N);
  return Count{};
}

EulerNumber chi_pn(int N, std::int64_t k) {
  require_projective_dim(N);
  return binom_poly(k + N, N);
}

Count h0_hyp(const HypersurfaceContext& ctx, std::int64_t n) {
  // H^1(O_P(n - r)) = 0, so restriction of sections is onto.
  const int N = ctx.ambient_dim();
  return Count(h0_pn(N, n).value() - h0_pn(N, n - ctx.degree()).value());
}

EulerNumber chi_hyp(const HypersurfaceContext& ctx, std::int64_t n) {
  const int N = ctx.ambient_dim();
  return chi_pn(N, n) - chi_pn(N, n - ctx.degree());
}

Count moduli_dim(const HypersurfaceContext& ctx) { return ctx.moduli_dim(); }

}  // namespace acmsplit
