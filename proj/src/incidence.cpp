#include "acmsplit/incidence.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

#include "acmsplit/errors.hpp"
#include "acmsplit/euler.hpp"
#include "acmsplit/normal_bundle.hpp"
#include "acmsplit/proj_cohomology.hpp"

namespace acmsplit {

namespace {

constexpr std::array<std::pair<Fallback, std::string_view>, 3> kFallbackNames{{
    {Fallback::PlaneExclusion, "plane-exclusion"},
    {Fallback::PfaffianExclusion, "pfaffian-exclusion"},
    {Fallback::ThreefoldReduction, "threefold-reduction"},
}};

constexpr std::array<std::pair<Verdict, std::string_view>, 7> kVerdictNames{{
    {Verdict::SplitsByRange, "SplitsByRange"},
    {Verdict::ExcludedPlane, "ExcludedPlane"},
    {Verdict::ExcludedPfaffian, "ExcludedPfaffian"},
    {Verdict::ExcludedByDimensionCount, "ExcludedByDimensionCount"},
    {Verdict::InconclusiveCount, "InconclusiveCount"},
    {Verdict::ReducedToThreefold, "ReducedToThreefold"},
    {Verdict::ArithmeticallyImpossible, "ArithmeticallyImpossible"},
}};

std::string fallback_explanation(Fallback f) {
  switch (f) {
    case Fallback::PlaneExclusion:
      return "fallback: plane-exclusion (a general hypersurface of degree >= 3 contains no "
             "planes, so a degree-2 surface on it is reduced and a complete intersection of "
             "type (1,1,2))";
    case Fallback::PfaffianExclusion:
      return "fallback: pfaffian-exclusion (a general hypersurface of degree >= 3 is not "
             "pfaffian)";
    case Fallback::ThreefoldReduction:
      return "fallback: threefold-reduction (restriction to a general hyperplane section)";
  }
  return {};
}

std::string case_label(const CaseRecord& c) {
  return "case r=" + std::to_string(c.r) + " (c1, c2) = (" + std::to_string(c.c1) + ", " +
         std::to_string(c.c2) + ")";
}

}  // namespace

std::string_view to_string(Fallback f) {
  for (const auto& [k, name] : kFallbackNames) {
    if (k == f) return name;
  }
  return "unknown";
}

std::optional<Fallback> parse_fallback(std::string_view text) {
  for (const auto& [k, name] : kFallbackNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

std::string_view to_string(Verdict v) {
  for (const auto& [k, name] : kVerdictNames) {
    if (k == v) return name;
  }
  return "unknown";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  for (const auto& [k, name] : kVerdictNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

bool is_conclusive(Verdict v) { return v != Verdict::InconclusiveCount; }

LinearRelation::LinearRelation(AffineExpr form) {
  std::int64_t g = std::llabs(form.constant());
  for (const auto& [_, coeff] : form.coefficients()) g = std::gcd(g, std::llabs(coeff));
  if (!form.is_constant()) {
    AffineExpr normalized(form.constant() / g);
    for (const auto& [name, coeff] : form.coefficients()) {
      normalized += AffineExpr::variable(name, coeff / g);
    }
    if (normalized.coefficients().begin()->second < 0) normalized *= -1;
    form = std::move(normalized);
  }
  form_ = std::move(form);
}

AffineExpr LinearRelation::solve_for(const std::string& name) const {
  const std::int64_t k = form_.coefficient(name);
  if (k != 1 && k != -1) {
    throw ArithmeticError("relation " + str() + " cannot be solved for '" + name +
                          "' over the integers");
  }
  // k·name + rest = 0  =>  name = -k·rest  (k = ±1)
  AffineExpr rest = form_ - AffineExpr::variable(name, k);
  return -k * rest;
}

std::string LinearRelation::str() const { return form_.str() + " = 0"; }

LinearRelation solve_balance(const GorensteinResolution& res) {
  const AffineExpr balance = res.generators().twist_sum() - res.syzygies().twist_sum() +
                             AffineExpr(res.socle_twist());
  if (balance.is_constant()) {
    if (balance.constant() != 0) {
      throw CatalogError("degree balance fails: sum(n) - sum(m) + socle = " +
                         std::to_string(balance.constant()));
    }
    return LinearRelation(AffineExpr{});
  }
  std::int64_t g = 0;
  for (const auto& [_, coeff] : balance.coefficients()) g = std::gcd(g, std::llabs(coeff));
  if (balance.constant() % g != 0) {
    throw CatalogError("degree balance " + balance.str() + " = 0 has no integer solution");
  }
  return LinearRelation(balance);
}

GorensteinResolution eliminate_parameters(const GorensteinResolution& res) {
  const auto params = res.parameters();
  if (params.size() <= 1) return res;
  if (params.size() > 2) {
    throw CatalogError("resolution has more than two parameters; one balance relation cannot "
                       "reduce it to one");
  }
  const LinearRelation rel = solve_balance(res);
  if (rel.trivial()) {
    throw CatalogError("degree balance does not relate the parameters of the resolution");
  }
  const std::string& eliminated = *std::next(params.begin());
  return res.substitute(eliminated, rel.solve_for(eliminated));
}

Count scanned_h0_ideal(const GorensteinResolution& res, std::int64_t t, const ParameterGrid& grid) {
  if (!res.is_parametric()) return h0_ideal(res, t);
  std::optional<Count> common;
  for (std::int64_t x : grid.values()) {
    Count v = h0_ideal(res, t, x);
    if (common && *common != v) {
      throw ArithmeticError("h^0(I_S(" + std::to_string(t) + ")) varies over the parameter grid (" +
                            common->str() + " vs " + v.str() + " at x=" + std::to_string(x) + ")");
    }
    common = std::move(v);
  }
  if (!common) throw ArithmeticError("empty parameter grid");
  return *common;
}

namespace {

struct CountIngredients {
  Count h0_ideal;
  Count h0_normal;
  Count bound;
};

CountIngredients count_ingredients(const CaseRecord& c) {
  if (!c.resolution) {
    throw CatalogError(case_label(c) + " has no resolution for a dimension count");
  }
  const GorensteinResolution res = eliminate_parameters(*c.resolution);
  const ParameterGrid grid = c.effective_grid();
  Count ideal = scanned_h0_ideal(res, c.r, grid);
  Count normal = kmr_parameter_scan(res, grid);
  // h^0(I_S(r)) >= 1 whenever S lies on some X_r, so the bound stays a count.
  Count bound(ideal.value() - 1 + normal.value());
  return {std::move(ideal), std::move(normal), std::move(bound)};
}

bool parity_ok(const CaseRecord& c) {
  return (c.c2 * (c.c1 + c.r - 5)) % 2 == 0;
}

}  // namespace

Count dimension_bound(const CaseRecord& c) { return count_ingredients(c).bound; }

Verdict verdict(const CaseRecord& c) {
  const int r = c.r;
  if (c.c1 <= 2 - r || c.c1 >= r) return Verdict::SplitsByRange;
  if (c.c2 == 1) return Verdict::ExcludedPlane;
  if (r >= 1 && c.c1 == r - 1 && c.c2 == pfaffian_c2(r)) return Verdict::ExcludedPfaffian;
  if (!parity_ok(c)) return Verdict::ArithmeticallyImpossible;
  if (c.resolution && dimension_bound(c) < HypersurfaceContext(r).moduli_dim()) {
    return Verdict::ExcludedByDimensionCount;
  }
  if (r == 6) return Verdict::ReducedToThreefold;
  return Verdict::InconclusiveCount;
}

bool Report::conclusive() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ReportRow& row) { return is_conclusive(row.verdict); });
}

ReportRow evaluate_case(const CaseRecord& c) {
  const HypersurfaceContext ctx(c.r);
  if (c.c2 < 1) throw CatalogError(case_label(c) + ": c2 must be >= 1");

  ReportRow row;
  row.c1 = c.c1;
  row.c2 = c.c2;
  row.moduli_dim = ctx.moduli_dim();
  if (parity_ok(c)) row.genus = sectional_genus(c.r, c.c1, c.c2);

  if (c.resolution) {
    const GorensteinResolution res = eliminate_parameters(*c.resolution);
    const ParameterGrid grid = c.effective_grid();
    if (auto violations = validate(res, grid); !violations.empty()) {
      throw CatalogError(case_label(c) + ": invalid resolution: " + describe(violations));
    }
    for (std::int64_t x : res.is_parametric() ? grid.values() : std::vector<std::int64_t>{0}) {
      const auto inv = surface_invariants(res, x);
      if (inv.degree != c.c2) {
        throw CatalogError(case_label(c) + ": resolution has degree " +
                           std::to_string(inv.degree));
      }
      if (!row.genus || inv.sectional_genus != *row.genus) {
        throw CatalogError(case_label(c) + ": resolution has sectional genus " +
                           std::to_string(inv.sectional_genus));
      }
    }
    try {
      auto ingredients = count_ingredients(c);
      row.h0_ideal = std::move(ingredients.h0_ideal);
      row.h0_normal = std::move(ingredients.h0_normal);
      row.bound = std::move(ingredients.bound);
    } catch (const ArithmeticError& e) {
      throw CatalogError(case_label(c) + ": " + e.what());
    }
  }

  row.verdict = verdict(c);
  if (!c.provenance.empty()) row.notes.push_back("source: " + c.provenance);
  if (row.verdict == Verdict::InconclusiveCount && row.bound) {
    row.notes.push_back("count inconclusive: bound " + row.bound->str() + " >= dim P(" +
                        std::to_string(c.r) + ") = " + row.moduli_dim.str());
  }
  if (c.fallback && !(row.verdict == Verdict::ExcludedByDimensionCount)) {
    row.notes.push_back(fallback_explanation(*c.fallback));
  }
  for (const auto& n : c.notes) row.notes.push_back(n);
  return row;
}

std::vector<CaseRecord> synthesize_boundary_cases(int r) {
  if (r == 6) return {};
  const HypersurfaceContext ctx(r);
  CaseRecord plane;
  plane.r = r;
  plane.c1 = 3 - r;
  plane.c2 = solve_c2_boundary(ctx, plane.c1);
  plane.provenance = "boundary c1 = 3 - r, c2 solved from Euler characteristics";
  plane.fallback = Fallback::PlaneExclusion;

  CaseRecord quadric;
  quadric.r = r;
  quadric.c1 = 4 - r;
  quadric.c2 = solve_c2_boundary(ctx, quadric.c1);
  quadric.resolution = GorensteinResolution::complete_intersection(1, 1, 2);
  quadric.provenance = "boundary c1 = 4 - r, c2 solved from Euler characteristics; "
                       "complete intersection (1,1,2)";
  quadric.fallback = Fallback::PlaneExclusion;
  return {plane, quadric};
}

Report generate_report(int r, const std::vector<CaseRecord>& catalog) {
  const HypersurfaceContext ctx(r);
  std::vector<CaseRecord> cases;
  for (const auto& c : catalog) {
    if (c.r != r) {
      throw CatalogError(case_label(c) + " found in a catalog for degree " + std::to_string(r));
    }
    cases.push_back(c);
  }
  for (auto& synth : synthesize_boundary_cases(r)) {
    const bool present = std::any_of(cases.begin(), cases.end(), [&](const CaseRecord& c) {
      return c.c1 == synth.c1 && c.c2 == synth.c2;
    });
    if (!present) cases.push_back(std::move(synth));
  }
  std::stable_sort(cases.begin(), cases.end(), [](const CaseRecord& a, const CaseRecord& b) {
    return std::pair(a.c1, a.c2) < std::pair(b.c1, b.c2);
  });

  Report report;
  report.degree = r;
  report.moduli_dim = ctx.moduli_dim();
  for (const auto& c : cases) report.rows.push_back(evaluate_case(c));

  if (r == 6) {
    ReportRow row;
    row.moduli_dim = report.moduli_dim;
    row.verdict = Verdict::ReducedToThreefold;
    row.notes.push_back(
        "all cases: an ACM rank-2 bundle restricts to an ACM bundle on a general hyperplane "
        "section, a general sextic threefold, where every such bundle splits");
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace acmsplit
