#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "acmsplit/incidence.hpp"
#include "acmsplit/resolutions.hpp"

namespace acmsplit {

// Resolution fragment:
//   {"gens": [[twist, mult], ...], "syz": [[twist, mult], ...], "socle": int}
// where mult is an integer or an affine string such as "x-2".
GorensteinResolution parse_resolution(std::string_view json_text);
std::string resolution_to_json(const GorensteinResolution& res);

/// Classification data for one degree.
struct Catalog {
  int degree = 0;
  std::vector<CaseRecord> cases;
};

// Catalog file:
//   {"degree": int, "cases": [{"c1": int, "c2": int, "resolution": {...} | null,
//     "grid": [lo, hi] | null, "provenance": str, "fallback": str | null,
//     "notes": [str] (optional)}]}
/// Throws ParseError on malformed JSON, CatalogError on schema violations.
Catalog parse_catalog(std::string_view json_text);
Catalog load_catalog(const std::filesystem::path& path);

/// Catalog compiled into the library for r ∈ {3, 4, 5, 6}.
std::string_view embedded_catalog_text(int degree);
Catalog default_catalog(int degree);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace acmsplit
