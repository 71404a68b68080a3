#pragma once

#include <vector>

#include "acmsplit/combinatorics.hpp"
#include "acmsplit/resolutions.hpp"

namespace acmsplit {

/// Resolution twists in the order the normal-bundle formula pairs them:
/// generators ascending, syzygies descending.
struct KmrInput {
  std::vector<int> sorted_gens;
  std::vector<int> sorted_syz;

  static KmrInput from(const GorensteinResolution& res, ParameterValue x = {});
  std::size_t rank() const noexcept { return sorted_gens.size(); }
};

/// The four sums making up h^0(N_S); exposed so callers can check that the
/// negative pair terms vanish.
struct KmrTerms {
  Count structure_sum;      // Σ_i h^0 O_S(n_i)
  Count positive_pairs;     // Σ_{i<j} C(-n_i + m_j + 5, 5)
  Count negative_pairs;     // Σ_{i<j} C(n_i - m_j + 5, 5)
  Count generator_sections; // Σ_i C(n_i + 5, 5)

  Integer total() const;
};

KmrTerms kmr_terms(const GorensteinResolution& res, ParameterValue x = {});

/// h^0 of the normal bundle of a codimension-3 arithmetically Gorenstein
/// surface S ⊂ P^5. All binomials are dimension counts (truncating).
/// Throws ArithmeticError if the total comes out negative.
Count kmr_h0_normal(const GorensteinResolution& res, ParameterValue x = {});

/// kmr_h0_normal at every grid point; the values must agree. Throws
/// ArithmeticError listing the values otherwise. Non-parametric resolutions
/// are evaluated once.
Count kmr_parameter_scan(const GorensteinResolution& res, const ParameterGrid& grid);

}  // namespace acmsplit
