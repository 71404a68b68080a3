#include "acmsplit/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "acmsplit/catalog.hpp"
#include "acmsplit/errors.hpp"
#include "acmsplit/euler.hpp"
#include "acmsplit/normal_bundle.hpp"
#include "acmsplit/report.hpp"
#include "json.hpp"

namespace acmsplit::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Emitted {
  std::string body;
  int exit_code = kExitOk;
};

Catalog catalog_for(const RunConfig& cfg) {
  Catalog cat = cfg.catalog_path ? load_catalog(*cfg.catalog_path) : default_catalog(cfg.degree);
  if (cat.degree != cfg.degree) {
    throw CatalogError("catalog is for degree " + std::to_string(cat.degree) + ", not " +
                       std::to_string(cfg.degree));
  }
  return cat;
}

Emitted run_report(const RunConfig& cfg) {
  const Report report = generate_report(cfg.degree, catalog_for(cfg).cases);
  return {cfg.output_format == OutputFormat::Json ? render_json(report) : render_markdown(report),
          report.conclusive() ? kExitOk : kExitInconclusive};
}

Emitted run_check_case(const RunConfig& cfg) {
  Report report = generate_report(cfg.degree, catalog_for(cfg).cases);
  auto it = std::find_if(report.rows.begin(), report.rows.end(), [&](const ReportRow& row) {
    return row.c1 == cfg.c1 && row.c2 == cfg.c2;
  });
  if (it == report.rows.end()) {
    throw CatalogError("no case (c1, c2) = (" + std::to_string(*cfg.c1) + ", " +
                       std::to_string(*cfg.c2) + ") for degree " + std::to_string(cfg.degree));
  }
  ReportRow row = *it;
  int code = is_conclusive(row.verdict) ? kExitOk : kExitInconclusive;
  if (cfg.expect_bound) {
    const bool match = row.bound && row.bound->value() == *cfg.expect_bound;
    if (!match) {
      row.notes.push_back("expected bound " + std::to_string(*cfg.expect_bound) + ", computed " +
                          (row.bound ? row.bound->str() : std::string("none")));
      code = kExitInconclusive;
    }
  }
  report.rows = {row};
  return {cfg.output_format == OutputFormat::Json ? render_json(report) : render_markdown(report),
          code};
}

ojson count_json(const Count& c) { return ojson::parse(c.str()); }

Emitted run_kmr(const RunConfig& cfg) {
  const auto res = eliminate_parameters(parse_resolution(read_text_file(*cfg.resolution_path)));
  const ParameterGrid grid = cfg.grid.value_or(ParameterGrid{});
  if (auto v = validate(res, grid); !v.empty()) throw ValidationError(describe(v));
  const Count h0 = kmr_parameter_scan(res, grid);
  if (cfg.output_format == OutputFormat::Json) {
    ojson j;
    j["h0_normal"] = count_json(h0);
    return {j.dump(2) + "\n"};
  }
  return {h0.str() + "\n"};
}

Emitted run_hilbert(const RunConfig& cfg) {
  const auto res = eliminate_parameters(parse_resolution(read_text_file(*cfg.resolution_path)));
  const ParameterGrid grid = cfg.grid.value_or(ParameterGrid{});
  if (auto v = validate(res, grid); !v.empty()) throw ValidationError(describe(v));
  std::vector<ParameterValue> points;
  if (res.is_parametric()) {
    for (auto x : grid.values()) points.emplace_back(x);
  } else {
    points.emplace_back();
  }
  const std::int64_t t = *cfg.twist;
  const std::string ts = std::to_string(t);
  ojson arr = ojson::array();
  std::ostringstream text;
  for (const auto& x : points) {
    const Count ideal = h0_ideal(res, t, x);
    const Count structure = h0_structure(res, t, x);
    const EulerNumber chi = chi_structure_poly(res, t, x);
    ojson p;
    p["x"] = x ? ojson(*x) : ojson(nullptr);
    p["h0_ideal"] = count_json(ideal);
    p["h0_structure"] = count_json(structure);
    p["chi_structure"] = ojson::parse(chi.str());
    arr.push_back(std::move(p));
    if (x) text << "x=" << *x << ": ";
    text << "h0_ideal(" << ts << ")=" << ideal << " h0_structure(" << ts << ")=" << structure
         << " chi_structure(" << ts << ")=" << chi << "\n";
  }
  if (cfg.output_format == OutputFormat::Json) {
    ojson j;
    j["twist"] = t;
    j["points"] = std::move(arr);
    return {j.dump(2) + "\n"};
  }
  return {text.str()};
}

Emitted run_solve_c2(const RunConfig& cfg) {
  const std::int64_t c2 = solve_c2_boundary(HypersurfaceContext(cfg.degree), *cfg.c1);
  if (cfg.output_format == OutputFormat::Json) {
    ojson j;
    j["degree"] = cfg.degree;
    j["c1"] = *cfg.c1;
    j["c2"] = c2;
    return {j.dump(2) + "\n"};
  }
  return {std::to_string(c2) + "\n"};
}

Emitted dispatch(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Report: return run_report(cfg);
    case Command::Kmr: return run_kmr(cfg);
    case Command::Hilbert: return run_hilbert(cfg);
    case Command::SolveC2: return run_solve_c2(cfg);
    case Command::CheckCase: return run_check_case(cfg);
  }
  return {};
}

}  // namespace

std::optional<ParameterGrid> parse_grid(const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos) return std::nullopt;
  try {
    std::size_t used = 0;
    const std::string lo_text = text.substr(0, sep);
    const std::string hi_text = text.substr(sep + 2);
    const long long lo = std::stoll(lo_text, &used);
    if (used != lo_text.size()) return std::nullopt;
    const long long hi = std::stoll(hi_text, &used);
    if (used != hi_text.size() || lo > hi) return std::nullopt;
    return ParameterGrid{lo, hi};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

RunResult run(const std::vector<std::string>& args) {
  RunConfig cfg;
  std::string format = "markdown";
  std::string grid_text;

  CLI::App app{"Exact verification of the splitting criterion for ACM rank-2 bundles on "
               "general hypersurfaces of degree 3 to 6 in P^5",
               "acmsplit"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"markdown", "json"}));
    sub->add_option("--out", cfg.out_path, "Write the document to this file");
  };
  auto add_catalog = [&](CLI::App* sub) {
    sub->add_option("--catalog", cfg.catalog_path, "Catalog JSON (default: embedded)")
        ->check(CLI::ExistingFile);
  };
  auto add_resolution = [&](CLI::App* sub) {
    sub->add_option("--resolution", cfg.resolution_path, "Resolution JSON")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--grid", grid_text, "Parameter range LO..HI (default 0..5)");
  };

  auto* report = app.add_subcommand("report", "Per-case verdict table for one degree");
  report->add_option("--degree", cfg.degree, "Hypersurface degree")
      ->required()
      ->check(CLI::Range(3, 6));
  add_catalog(report);
  add_common(report);

  auto* kmr = app.add_subcommand("kmr", "h^0 of the normal bundle of a Gorenstein surface");
  add_resolution(kmr);
  add_common(kmr);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function values of a resolution");
  add_resolution(hilbert);
  hilbert->add_option("--twist", cfg.twist, "Twist t")->required();
  add_common(hilbert);

  auto* solve = app.add_subcommand("solve-c2", "c2 for the boundary values of c1");
  solve->add_option("--degree", cfg.degree, "Hypersurface degree")
      ->required()
      ->check(CLI::Range(3, 1000));
  solve->add_option("--c1", cfg.c1, "First Chern class")->required();
  add_common(solve);

  auto* check = app.add_subcommand("check-case", "Evaluate a single (c1, c2) case");
  check->add_option("--degree", cfg.degree, "Hypersurface degree")
      ->required()
      ->check(CLI::Range(3, 6));
  check->add_option("--c1", cfg.c1, "First Chern class")->required();
  check->add_option("--c2", cfg.c2, "Second Chern class")->required();
  check->add_option("--expect-bound", cfg.expect_bound, "Fail (exit 1) unless the bound matches");
  add_catalog(check);
  add_common(check);

  std::vector<const char*> argv{"acmsplit"};
  for (const auto& a : args) argv.push_back(a.c_str());

  RunResult result;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    result.document = out.str();
    if (code == 0) return result;
    std::string first_line = err.str().substr(0, err.str().find('\n'));
    if (first_line.empty()) first_line = e.what();
    result.diagnostics = "acmsplit: " + first_line + "\n";
    result.exit_code = kExitInputError;
    return result;
  }

  if (report->parsed()) cfg.command = Command::Report;
  if (kmr->parsed()) cfg.command = Command::Kmr;
  if (hilbert->parsed()) cfg.command = Command::Hilbert;
  if (solve->parsed()) cfg.command = Command::SolveC2;
  if (check->parsed()) cfg.command = Command::CheckCase;
  cfg.output_format = format == "json" ? OutputFormat::Json : OutputFormat::Markdown;
  if (!grid_text.empty()) {
    cfg.grid = parse_grid(grid_text);
    if (!cfg.grid) {
      result.diagnostics = "acmsplit: --grid expects LO..HI, got '" + grid_text + "'\n";
      result.exit_code = kExitInputError;
      return result;
    }
  }

  Emitted emitted;
  try {
    emitted = dispatch(cfg);
  } catch (const std::exception& e) {
    result.diagnostics = std::string("acmsplit: ") + e.what() + "\n";
    result.exit_code = kExitInputError;
    return result;
  }

  result.exit_code = emitted.exit_code;
  if (cfg.out_path) {
    std::ofstream out(*cfg.out_path, std::ios::binary);
    if (!out || !(out << emitted.body)) {
      result.diagnostics = "acmsplit: cannot write " + *cfg.out_path + "\n";
      result.exit_code = kExitInputError;
    }
  } else {
    result.document = std::move(emitted.body);
  }
  return result;
}

}  // namespace acmsplit::cli
