#include "acmsplit/normal_bundle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "acmsplit/errors.hpp"

namespace acmsplit {

KmrInput KmrInput::from(const GorensteinResolution& res, ParameterValue x) {
  auto ex = expand_validated(res, x);
  KmrInput in{std::move(ex.generators), std::move(ex.syzygies)};
  std::sort(in.sorted_gens.begin(), in.sorted_gens.end());
  std::sort(in.sorted_syz.begin(), in.sorted_syz.end(), std::greater<>{});
  return in;
}

Integer KmrTerms::total() const {
  return structure_sum.value() + positive_pairs.value() - negative_pairs.value() -
         generator_sections.value();
}

KmrTerms kmr_terms(const GorensteinResolution& res, ParameterValue x) {
  const KmrInput in = KmrInput::from(res, x);
  const auto& n = in.sorted_gens;
  const auto& m = in.sorted_syz;
  KmrTerms terms;
  for (std::size_t i = 0; i < in.rank(); ++i) {
    terms.structure_sum += h0_structure(res, n[i], x);
    terms.generator_sections += binom_trunc(n[i] + 5, 5);
    for (std::size_t j = i + 1; j < in.rank(); ++j) {
      terms.positive_pairs += binom_trunc(-n[i] + m[j] + 5, 5);
      terms.negative_pairs += binom_trunc(n[i] - m[j] + 5, 5);
    }
  }
  return terms;
}

Count kmr_h0_normal(const GorensteinResolution& res, ParameterValue x) {
  const Integer total = kmr_terms(res, x).total();
  if (total < 0) {
    throw ArithmeticError("normal bundle formula produced negative h^0 = " + total.str());
  }
  return Count(total);
}

Count kmr_parameter_scan(const GorensteinResolution& res, const ParameterGrid& grid) {
  if (!res.is_parametric()) return kmr_h0_normal(res);
  std::vector<std::pair<std::int64_t, Count>> values;
  for (std::int64_t x : grid.values()) values.emplace_back(x, kmr_h0_normal(res, x));
  if (values.empty()) throw ArithmeticError("empty parameter grid");
  const bool constant = std::all_of(values.begin(), values.end(),
                                    [&](const auto& v) { return v.second == values.front().second; });
  if (!constant) {
    std::ostringstream os;
    os << "h^0(N_S) varies over the parameter grid:";
    for (const auto& [x, v] : values) os << " x=" << x << "->" << v;
    throw ArithmeticError(os.str());
  }
  return values.front().second;
}

}  // namespace acmsplit
