#pragma once

#include <string>
#include <vector>

#include "acmsplit/resolutions.hpp"

namespace acmsplit::fixtures {

inline AffineExpr var(const std::string& name) { return AffineExpr::variable(name); }

inline GorensteinResolution ci(int a, int b, int c) {
  return GorensteinResolution::complete_intersection(a, b, c);
}

inline GorensteinResolution elliptic_quintic() { return {{{{2, 5}}}, {{{3, 5}}}, 5}; }

/// Degree-8 surfaces with x cubic generators (quartic (2,8), quintic (1,8)).
inline GorensteinResolution degree8() {
  return {{{{2, 3}, {3, var("x")}}}, {{{3, var("x")}, {4, 3}}}, 6};
}

/// Quintic (2,11) before elimination: parameters b and c.
inline GorensteinResolution degree11_bc() {
  return {{{{2, 3}, {3, var("c")}, {4, var("b")}}}, {{{3, var("b")}, {4, var("c")}, {5, 3}}}, 7};
}

/// Quintic (2,12) before elimination.
inline GorensteinResolution degree12_bc() {
  return {{{{2, 2}, {3, var("c")}, {4, var("b")}}}, {{{3, var("b")}, {4, var("c")}, {5, 2}}}, 7};
}

/// Quintic (2,11) with c = b - 2 substituted; grid b ∈ {2..5}.
inline GorensteinResolution degree11() {
  return degree11_bc().substitute("c", var("b") - AffineExpr(2));
}

/// Quintic (2,12) with c = b + 1 substituted; grid b ∈ {0, 1}.
inline GorensteinResolution degree12() {
  return degree12_bc().substitute("c", var("b") + AffineExpr(1));
}

inline GorensteinResolution degree13() { return {{{{2, 1}, {3, 4}}}, {{{4, 4}, {5, 1}}}, 7}; }
inline GorensteinResolution degree14() { return {{{{3, 7}}}, {{{4, 7}}}, 7}; }
inline GorensteinResolution degree20() { return {{{{3, 4}}}, {{{5, 4}}}, 8}; }

struct NamedResolution {
  std::string name;
  GorensteinResolution res;
  ParameterGrid grid;
};

/// Every resolution that appears in the classification data, with its grid.
inline std::vector<NamedResolution> all_catalog_resolutions() {
  return {
      {"CI(1,1,2)", ci(1, 1, 2), {}},
      {"CI(1,1,3)", ci(1, 1, 3), {}},
      {"CI(1,2,2)", ci(1, 2, 2), {}},
      {"CI(1,1,4)", ci(1, 1, 4), {}},
      {"CI(1,2,3)", ci(1, 2, 3), {}},
      {"elliptic quintic", elliptic_quintic(), {}},
      {"degree 8", degree8(), {0, 5}},
      {"degree 11", degree11(), {2, 5}},
      {"degree 12", degree12(), {0, 1}},
      {"degree 13", degree13(), {}},
      {"degree 14", degree14(), {}},
      {"degree 20", degree20(), {}},
  };
}

}  // namespace acmsplit::fixtures
