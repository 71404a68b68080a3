#pragma once

#include <string>
#include <string_view>

#include "acmsplit/incidence.hpp"

namespace acmsplit {

// {"degree": int, "moduli_dim": int, "rows": [{"c1", "c2", "genus", "h0_ideal",
//   "h0_normal", "bound", "verdict", "notes"}]}
// Missing quantities are null. Counts beyond 64 bits are written as strings.
std::string render_json(const Report& report);
/// Inverse of render_json. Throws ParseError.
Report parse_report_json(std::string_view text);

/// Table with columns c1, c2, g, h⁰I_S(r), h⁰N_S, bound, dim P(r), verdict,
/// followed by numbered notes.
std::string render_markdown(const Report& report);

}  // namespace acmsplit
