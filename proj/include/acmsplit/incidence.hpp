#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acmsplit/affine.hpp"
#include "acmsplit/combinatorics.hpp"
#include "acmsplit/resolutions.hpp"

namespace acmsplit {

/// Exclusion argument that does not come from a dimension count.
enum class Fallback { PlaneExclusion, PfaffianExclusion, ThreefoldReduction };

std::string_view to_string(Fallback f);
/// Accepts "plane-exclusion", "pfaffian-exclusion", "threefold-reduction".
std::optional<Fallback> parse_fallback(std::string_view text);

/// One (c1, c2) case of the classification for a given degree r.
struct CaseRecord {
  int r = 0;
  int c1 = 0;
  std::int64_t c2 = 1;
  std::optional<GorensteinResolution> resolution;
  std::optional<ParameterGrid> grid;
  std::string provenance;
  std::optional<Fallback> fallback;
  std::vector<std::string> notes;

  ParameterGrid effective_grid() const { return grid.value_or(ParameterGrid{}); }
};

enum class Verdict {
  SplitsByRange,
  ExcludedPlane,
  ExcludedPfaffian,
  ExcludedByDimensionCount,
  InconclusiveCount,
  ReducedToThreefold,
  ArithmeticallyImpossible,
};

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view text);
/// Everything except InconclusiveCount.
bool is_conclusive(Verdict v);

/// An integer linear relation  form == 0  between resolution parameters,
/// normalized so the coefficients and constant are coprime and the first
/// variable has a positive coefficient.
class LinearRelation {
 public:
  explicit LinearRelation(AffineExpr form);

  const AffineExpr& form() const noexcept { return form_; }
  bool trivial() const noexcept { return form_.is_constant(); }
  /// Expresses `name` through the other parameters. Throws ArithmeticError
  /// unless its coefficient is ±1.
  AffineExpr solve_for(const std::string& name) const;
  std::string str() const;

  friend bool operator==(const LinearRelation&, const LinearRelation&) = default;

 private:
  AffineExpr form_;
};

/// The relation forced on the parameters by Σn_i - Σm_j + socle = 0.
/// Throws CatalogError when the balance has no integer solution.
LinearRelation solve_balance(const GorensteinResolution& res);

/// Uses solve_balance to eliminate every parameter but the alphabetically
/// first one. Resolutions with at most one parameter are returned unchanged.
GorensteinResolution eliminate_parameters(const GorensteinResolution& res);

/// h^0(I_S(t)) over the case grid; throws ArithmeticError if it varies.
Count scanned_h0_ideal(const GorensteinResolution& res, std::int64_t t, const ParameterGrid& grid);

/// Upper bound h^0(I_S(r)) - 1 + h^0(N_S) for dim I(r, d, g).
/// Requires a resolution; throws CatalogError otherwise.
Count dimension_bound(const CaseRecord& c);

/// Decision cascade, in order: outside 2-r < c1 < r, plane (c2 = 1),
/// pfaffian pair, genus parity, dimension count, sextic reduction,
/// inconclusive.
Verdict verdict(const CaseRecord& c);

struct ReportRow {
  std::optional<int> c1;
  std::optional<std::int64_t> c2;
  std::optional<std::int64_t> genus;
  std::optional<Count> h0_ideal;   // at t = r
  std::optional<Count> h0_normal;
  std::optional<Count> bound;
  Count moduli_dim;
  Verdict verdict = Verdict::InconclusiveCount;
  std::vector<std::string> notes;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct Report {
  int degree = 0;
  Count moduli_dim;
  std::vector<ReportRow> rows;

  bool conclusive() const;
  friend bool operator==(const Report&, const Report&) = default;
};

/// Validates the case and its resolution against (c2, g) and computes its row.
/// Throws CatalogError naming the case on any inconsistency.
ReportRow evaluate_case(const CaseRecord& c);

/// Boundary cases c1 = 3 - r and c1 = 4 - r, with c2 solved from Euler
/// characteristics. Empty for r = 6.
std::vector<CaseRecord> synthesize_boundary_cases(int r);

/// One row per catalog case plus the synthesized boundary cases, ordered by
/// (c1, c2). For r = 6 a single row for the reduction to sextic threefolds
/// is added.
Report generate_report(int r, const std::vector<CaseRecord>& catalog);

}  // namespace acmsplit
