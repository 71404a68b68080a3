#include "acmsplit/catalog.hpp"

#include <fstream>
#include <sstream>

#include "acmsplit/errors.hpp"
#include "json.hpp"

namespace acmsplit {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

template <typename T>
T get_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw CatalogError(where + ": missing field '" + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw CatalogError(where + ": field '" + key + "' has the wrong type");
  }
}

AffineExpr parse_multiplicity(const json& j, const std::string& where) {
  if (j.is_number_integer()) return AffineExpr(j.get<std::int64_t>());
  if (j.is_string()) return AffineExpr::parse(j.get<std::string>());
  throw CatalogError(where + ": multiplicity must be an integer or an affine string");
}

TwistVector parse_twists(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw CatalogError(where + ": expected an array of [twist, multiplicity]");
  TwistVector tv;
  for (const auto& entry : arr) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer()) {
      throw CatalogError(where + ": each entry must be [int twist, multiplicity]");
    }
    tv.entries.push_back({entry[0].get<int>(), parse_multiplicity(entry[1], where)});
  }
  return tv;
}

GorensteinResolution resolution_from(const json& j, const std::string& where) {
  if (!j.is_object()) throw CatalogError(where + ": resolution must be an object");
  if (!j.contains("gens") || !j.contains("syz")) {
    throw CatalogError(where + ": resolution needs 'gens' and 'syz'");
  }
  return {parse_twists(j.at("gens"), where + " gens"), parse_twists(j.at("syz"), where + " syz"),
          get_field<int>(j, "socle", where)};
}

json twists_to_json(const TwistVector& tv) {
  json arr = json::array();
  for (const auto& e : tv.entries) {
    json mult = e.multiplicity.is_constant() ? json(e.multiplicity.constant())
                                             : json(e.multiplicity.str());
    arr.push_back(json::array({e.twist, mult}));
  }
  return arr;
}

}  // namespace

GorensteinResolution parse_resolution(std::string_view json_text) {
  return resolution_from(parse_json(json_text, "resolution"), "resolution");
}

std::string resolution_to_json(const GorensteinResolution& res) {
  nlohmann::ordered_json j;
  j["gens"] = twists_to_json(res.generators());
  j["syz"] = twists_to_json(res.syzygies());
  j["socle"] = res.socle_twist();
  return j.dump();
}

Catalog parse_catalog(std::string_view json_text) {
  const json doc = parse_json(json_text, "catalog");
  Catalog cat;
  cat.degree = get_field<int>(doc, "degree", "catalog");
  if (cat.degree < 1) throw CatalogError("catalog: degree must be >= 1");
  if (!doc.contains("cases") || !doc.at("cases").is_array()) {
    throw CatalogError("catalog: missing 'cases' array");
  }
  std::size_t index = 0;
  for (const auto& jc : doc.at("cases")) {
    const std::string where = "catalog case #" + std::to_string(index++);
    CaseRecord c;
    c.r = cat.degree;
    c.c1 = get_field<int>(jc, "c1", where);
    c.c2 = get_field<std::int64_t>(jc, "c2", where);
    if (c.c2 < 1) throw CatalogError(where + ": c2 must be >= 1");
    if (jc.contains("resolution") && !jc.at("resolution").is_null()) {
      c.resolution = eliminate_parameters(resolution_from(jc.at("resolution"), where));
    }
    if (jc.contains("grid") && !jc.at("grid").is_null()) {
      const auto& g = jc.at("grid");
      if (!g.is_array() || g.size() != 2 || !g[0].is_number_integer() ||
          !g[1].is_number_integer()) {
        throw CatalogError(where + ": grid must be [lo, hi]");
      }
      c.grid = ParameterGrid{g[0].get<std::int64_t>(), g[1].get<std::int64_t>()};
      if (c.grid->lo > c.grid->hi) throw CatalogError(where + ": empty grid");
    }
    if (jc.contains("provenance") && !jc.at("provenance").is_null()) {
      c.provenance = get_field<std::string>(jc, "provenance", where);
    }
    if (jc.contains("fallback") && !jc.at("fallback").is_null()) {
      const auto tag = get_field<std::string>(jc, "fallback", where);
      c.fallback = parse_fallback(tag);
      if (!c.fallback) throw CatalogError(where + ": unknown fallback '" + tag + "'");
    }
    if (jc.contains("notes")) c.notes = get_field<std::vector<std::string>>(jc, "notes", where);
    cat.cases.push_back(std::move(c));
  }
  return cat;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CatalogError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Catalog load_catalog(const std::filesystem::path& path) {
  return parse_catalog(read_text_file(path));
}

Catalog default_catalog(int degree) { return parse_catalog(embedded_catalog_text(degree)); }

}  // namespace acmsplit
