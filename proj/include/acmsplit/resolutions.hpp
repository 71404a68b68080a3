#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "acmsplit/affine.hpp"
#include "acmsplit/combinatorics.hpp"

namespace acmsplit {

/// Value of the (single) multiplicity parameter of a resolution, if any.
using ParameterValue = std::optional<std::int64_t>;

/// Inclusive integer range of parameter values.
struct ParameterGrid {
  std::int64_t lo = 0;
  std::int64_t hi = 5;

  std::vector<std::int64_t> values() const;
  friend bool operator==(const ParameterGrid&, const ParameterGrid&) = default;
};

struct TwistEntry {
  int twist = 0;
  AffineExpr multiplicity;
  friend bool operator==(const TwistEntry&, const TwistEntry&) = default;
};

/// A sum of line bundles  ⊕ O(-twist)^multiplicity  with affine multiplicities.
struct TwistVector {
  std::vector<TwistEntry> entries;

  AffineExpr rank() const;
  /// Σ twist · multiplicity
  AffineExpr twist_sum() const;
  std::set<std::string> parameters() const;
  /// Explicit twist list, ascending. Throws ValidationError on a negative multiplicity.
  std::vector<int> expand(const Binding& values) const;

  friend bool operator==(const TwistVector&, const TwistVector&) = default;
};

/// The three free modules of  0 -> O(-socle) -> ⊕O(-m_j) -> ⊕O(-n_i) -> I_S -> 0
/// after binding every parameter.
struct ExpandedResolution {
  std::vector<int> generators;  // n_i, ascending
  std::vector<int> syzygies;    // m_j, ascending
  int socle_twist = 0;
};

/// Self-dual length-3 resolution of the ideal of a codimension-3
/// arithmetically Gorenstein subscheme of P^5, with canonical class e·H
/// and socle twist e + 6.
class GorensteinResolution {
 public:
  GorensteinResolution(TwistVector generators, TwistVector syzygies, int socle_twist);

  /// Koszul resolution of a complete intersection of type (a, b, c).
  static GorensteinResolution complete_intersection(int a, int b, int c);

  const TwistVector& generators() const noexcept { return generators_; }
  const TwistVector& syzygies() const noexcept { return syzygies_; }
  int socle_twist() const noexcept { return socle_twist_; }
  int subcanonical_e() const noexcept { return socle_twist_ - 6; }

  std::set<std::string> parameters() const;
  bool is_parametric() const { return !parameters().empty(); }

  GorensteinResolution substitute(const std::string& name, const AffineExpr& value) const;

  /// Binds the single parameter (if any) to `x`. Throws UnresolvedParameter
  /// when a parametric resolution gets no value or has more than one
  /// parameter, ValidationError on negative multiplicities.
  ExpandedResolution expand(ParameterValue x) const;
  ExpandedResolution expand(const Binding& values) const;

  friend bool operator==(const GorensteinResolution&, const GorensteinResolution&) = default;

 private:
  TwistVector generators_;
  TwistVector syzygies_;
  int socle_twist_;
};

enum class InvariantKind {
  UnresolvedParameter,
  NegativeMultiplicity,
  EmptyRank,
  RankBalance,
  DegreeBalance,
  SelfDuality,
};

const char* to_string(InvariantKind kind);

struct Violation {
  InvariantKind kind;
  ParameterValue at;  // grid point, empty for non-parametric resolutions
  std::string detail;
};

/// Checks rank balance, degree balance and self-duality at every grid point
/// (once, if the resolution has no parameter). Never throws.
std::vector<Violation> validate(const GorensteinResolution& res, const ParameterGrid& grid = {});

/// Human-readable one-line summary of a violation list.
std::string describe(const std::vector<Violation>& violations);

/// Validates at the single point `x` and expands. Throws UnresolvedParameter
/// or ValidationError.
ExpandedResolution expand_validated(const GorensteinResolution& res, ParameterValue x);

/// h^0(I_S(t)). Exact, since every term of the resolution is a sum of line
/// bundles on P^5 with no intermediate cohomology.
Count h0_ideal(const GorensteinResolution& res, std::int64_t t, ParameterValue x = {});

/// h^0(O_S(t)) = h^0(O_P5(t)) - h^0(I_S(t)) for t >= 0, and 0 for t < 0.
Count h0_structure(const GorensteinResolution& res, std::int64_t t, ParameterValue x = {});

/// Hilbert polynomial P(t) = χ(O_S(t)).
EulerNumber chi_structure_poly(const GorensteinResolution& res, std::int64_t t,
                               ParameterValue x = {});

struct SurfaceInvariants {
  std::int64_t degree = 0;
  std::int64_t sectional_genus = 0;
  std::int64_t chi_structure = 0;  // χ(O_S)
  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

/// Degree and sectional genus from finite differences of the Hilbert
/// polynomial: d = Δ²P, g = 1 - ΔP(0). Throws ArithmeticError when P is not
/// a polynomial of degree exactly 2.
SurfaceInvariants surface_invariants(const GorensteinResolution& res, ParameterValue x = {});

}  // namespace acmsplit
