#include "acmsplit/resolutions.hpp"

#include <algorithm>
#include <sstream>

#include "acmsplit/errors.hpp"
#include "acmsplit/proj_cohomology.hpp"

namespace acmsplit {

namespace {
constexpr int kAmbient = HypersurfaceContext::kAmbientDim;
}

std::vector<std::int64_t> ParameterGrid::values() const {
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

AffineExpr TwistVector::rank() const {
  AffineExpr r;
  for (const auto& e : entries) r += e.multiplicity;
  return r;
}

AffineExpr TwistVector::twist_sum() const {
  AffineExpr s;
  for (const auto& e : entries) s += e.twist * e.multiplicity;
  return s;
}

std::set<std::string> TwistVector::parameters() const {
  std::set<std::string> out;
  for (const auto& e : entries) out.merge(e.multiplicity.variables());
  return out;
}

std::vector<int> TwistVector::expand(const Binding& values) const {
  std::vector<int> out;
  for (const auto& e : entries) {
    const std::int64_t mult = e.multiplicity.evaluate(values);
    if (mult < 0) {
      throw ValidationError("multiplicity " + e.multiplicity.str() + " of twist " +
                            std::to_string(e.twist) + " evaluates to " + std::to_string(mult));
    }
    out.insert(out.end(), static_cast<std::size_t>(mult), e.twist);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GorensteinResolution::GorensteinResolution(TwistVector generators, TwistVector syzygies,
                                           int socle_twist)
    : generators_(std::move(generators)),
      syzygies_(std::move(syzygies)),
      socle_twist_(socle_twist) {}

GorensteinResolution GorensteinResolution::complete_intersection(int a, int b, int c) {
  TwistVector gens{{{a, 1}, {b, 1}, {c, 1}}};
  TwistVector syz{{{b + c, 1}, {a + c, 1}, {a + b, 1}}};
  return {gens, syz, a + b + c};
}

std::set<std::string> GorensteinResolution::parameters() const {
  auto out = generators_.parameters();
  out.merge(syzygies_.parameters());
  return out;
}

GorensteinResolution GorensteinResolution::substitute(const std::string& name,
                                                      const AffineExpr& value) const {
  auto subst = [&](TwistVector tv) {
    for (auto& e : tv.entries) e.multiplicity = e.multiplicity.substitute(name, value);
    return tv;
  };
  return {subst(generators_), subst(syzygies_), socle_twist_};
}

ExpandedResolution GorensteinResolution::expand(const Binding& values) const {
  return {generators_.expand(values), syzygies_.expand(values), socle_twist_};
}

ExpandedResolution GorensteinResolution::expand(ParameterValue x) const {
  const auto params = parameters();
  if (params.empty()) return expand(Binding{});
  if (params.size() > 1) {
    throw UnresolvedParameter("resolution has " + std::to_string(params.size()) +
                              " parameters; eliminate all but one before evaluating");
  }
  if (!x) {
    throw UnresolvedParameter("parametric resolution evaluated without a value for '" +
                              *params.begin() + "'");
  }
  return expand(Binding{{*params.begin(), *x}});
}

const char* to_string(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::UnresolvedParameter: return "unresolved-parameter";
    case InvariantKind::NegativeMultiplicity: return "negative-multiplicity";
    case InvariantKind::EmptyRank: return "empty-rank";
    case InvariantKind::RankBalance: return "rank-balance";
    case InvariantKind::DegreeBalance: return "degree-balance";
    case InvariantKind::SelfDuality: return "self-duality";
  }
  return "unknown";
}

namespace {

void validate_point(const GorensteinResolution& res, ParameterValue x,
                    std::vector<Violation>& out) {
  auto report = [&](InvariantKind kind, std::string detail) {
    out.push_back({kind, x, std::move(detail)});
  };
  ExpandedResolution ex;
  try {
    ex = res.expand(x);
  } catch (const UnresolvedParameter& e) {
    report(InvariantKind::UnresolvedParameter, e.what());
    return;
  } catch (const ValidationError& e) {
    report(InvariantKind::NegativeMultiplicity, e.what());
    return;
  }

  if (ex.generators.empty()) report(InvariantKind::EmptyRank, "no generators");
  if (ex.generators.size() != ex.syzygies.size()) {
    report(InvariantKind::RankBalance, "rank " + std::to_string(ex.generators.size()) + " vs " +
                                           std::to_string(ex.syzygies.size()));
  }

  std::int64_t balance = ex.socle_twist;
  for (int n : ex.generators) balance += n;
  for (int m : ex.syzygies) balance -= m;
  if (balance != 0) {
    report(InvariantKind::DegreeBalance,
           "sum(n) - sum(m) + socle = " + std::to_string(balance));
  }

  std::vector<int> dual;
  for (int n : ex.generators) dual.push_back(ex.socle_twist - n);
  std::sort(dual.begin(), dual.end());
  if (dual != ex.syzygies) report(InvariantKind::SelfDuality, "{socle - n_i} != {m_j}");
}

}  // namespace

ExpandedResolution expand_validated(const GorensteinResolution& res, ParameterValue x) {
  std::vector<Violation> v;
  validate_point(res, res.is_parametric() ? x : ParameterValue{}, v);
  if (!v.empty()) {
    if (v.front().kind == InvariantKind::UnresolvedParameter) {
      throw UnresolvedParameter(v.front().detail);
    }
    throw ValidationError(describe(v));
  }
  return res.expand(x);
}

std::vector<Violation> validate(const GorensteinResolution& res, const ParameterGrid& grid) {
  std::vector<Violation> out;
  if (!res.is_parametric()) {
    validate_point(res, {}, out);
    return out;
  }
  if (grid.lo > grid.hi) {
    out.push_back({InvariantKind::UnresolvedParameter, {}, "empty parameter grid"});
    return out;
  }
  for (std::int64_t x : grid.values()) validate_point(res, x, out);
  return out;
}

std::string describe(const std::vector<Violation>& violations) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : violations) {
    if (!first) os << "; ";
    first = false;
    os << to_string(v.kind);
    if (v.at) os << " at x=" << *v.at;
    os << ": " << v.detail;
  }
  return os.str();
}

Count h0_ideal(const GorensteinResolution& res, std::int64_t t, ParameterValue x) {
  const auto ex = expand_validated(res, x);
  Integer h = h0_pn(kAmbient, t - ex.socle_twist).value();
  for (int n : ex.generators) h += h0_pn(kAmbient, t - n).value();
  for (int m : ex.syzygies) h -= h0_pn(kAmbient, t - m).value();
  return Count(std::move(h));
}

Count h0_structure(const GorensteinResolution& res, std::int64_t t, ParameterValue x) {
  if (t < 0) {
    expand_validated(res, x);
    return Count{};
  }
  return Count(h0_pn(kAmbient, t).value() - h0_ideal(res, t, x).value());
}

EulerNumber chi_structure_poly(const GorensteinResolution& res, std::int64_t t,
                               ParameterValue x) {
  const auto ex = expand_validated(res, x);
  EulerNumber ideal = chi_pn(kAmbient, t - ex.socle_twist);
  for (int n : ex.generators) ideal += chi_pn(kAmbient, t - n);
  for (int m : ex.syzygies) ideal -= chi_pn(kAmbient, t - m);
  return chi_pn(kAmbient, t) - ideal;
}

SurfaceInvariants surface_invariants(const GorensteinResolution& res, ParameterValue x) {
  // P has degree <= 5, so Δ³P vanishing at three consecutive points forces
  // Δ³P ≡ 0.
  std::vector<Integer> p;
  for (std::int64_t t = -1; t <= 5; ++t) p.push_back(chi_structure_poly(res, t, x).value());
  auto at = [&](std::int64_t t) -> const Integer& { return p[static_cast<std::size_t>(t + 1)]; };
  for (std::int64_t t = 3; t <= 5; ++t) {
    const Integer d3 = at(t) - 3 * at(t - 1) + 3 * at(t - 2) - at(t - 3);
    if (d3 != 0) {
      throw ArithmeticError("Hilbert polynomial has degree > 2; not a surface resolution");
    }
  }
  const Integer d = at(2) - 2 * at(1) + at(0);
  if (d <= 0) {
    throw ArithmeticError("Hilbert polynomial has degree < 2; resolution does not define a surface");
  }
  const Integer g = 1 - (at(0) - at(-1));
  return {static_cast<std::int64_t>(d), static_cast<std::int64_t>(g),
          static_cast<std::int64_t>(at(0))};
}

}  // namespace acmsplit
