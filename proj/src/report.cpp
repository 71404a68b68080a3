#include "acmsplit/report.hpp"

#include <limits>
#include <sstream>

#include "acmsplit/errors.hpp"
#include "json.hpp"

namespace acmsplit {

using ojson = nlohmann::ordered_json;

namespace {

ojson count_to_json(const Count& c) {
  const Integer& v = c.value();
  if (v <= std::numeric_limits<std::int64_t>::max()) return static_cast<std::int64_t>(v);
  return v.str();
}

template <typename T>
ojson optional_to_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, Count>) {
    return count_to_json(*v);
  } else {
    return *v;
  }
}

Count count_from_json(const ojson& j) {
  if (j.is_number_integer()) return Count(Integer(j.get<std::int64_t>()));
  if (j.is_string()) return Count(Integer(j.get<std::string>()));
  throw ParseError("report: expected a count");
}

template <typename T>
std::optional<T> optional_from_json(const ojson& obj, const char* key) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  if constexpr (std::is_same_v<T, Count>) {
    return count_from_json(obj.at(key));
  } else {
    return obj.at(key).get<T>();
  }
}

template <typename T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "-";
  std::ostringstream os;
  os << *v;
  return os.str();
}

}  // namespace

std::string render_json(const Report& report) {
  ojson doc;
  doc["degree"] = report.degree;
  doc["moduli_dim"] = count_to_json(report.moduli_dim);
  doc["rows"] = ojson::array();
  for (const auto& row : report.rows) {
    ojson jr;
    jr["c1"] = optional_to_json(row.c1);
    jr["c2"] = optional_to_json(row.c2);
    jr["genus"] = optional_to_json(row.genus);
    jr["h0_ideal"] = optional_to_json(row.h0_ideal);
    jr["h0_normal"] = optional_to_json(row.h0_normal);
    jr["bound"] = optional_to_json(row.bound);
    jr["verdict"] = std::string(to_string(row.verdict));
    jr["notes"] = row.notes;
    doc["rows"].push_back(std::move(jr));
  }
  return doc.dump(2) + "\n";
}

Report parse_report_json(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  try {
    Report report;
    report.degree = doc.at("degree").get<int>();
    report.moduli_dim = count_from_json(doc.at("moduli_dim"));
    for (const auto& jr : doc.at("rows")) {
      ReportRow row;
      row.c1 = optional_from_json<int>(jr, "c1");
      row.c2 = optional_from_json<std::int64_t>(jr, "c2");
      row.genus = optional_from_json<std::int64_t>(jr, "genus");
      row.h0_ideal = optional_from_json<Count>(jr, "h0_ideal");
      row.h0_normal = optional_from_json<Count>(jr, "h0_normal");
      row.bound = optional_from_json<Count>(jr, "bound");
      row.moduli_dim = report.moduli_dim;
      const auto verdict = parse_verdict(jr.at("verdict").get<std::string>());
      if (!verdict) throw ParseError("report: unknown verdict");
      row.verdict = *verdict;
      row.notes = jr.at("notes").get<std::vector<std::string>>();
      report.rows.push_back(std::move(row));
    }
    return report;
  } catch (const ojson::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

std::string render_markdown(const Report& report) {
  std::ostringstream os;
  const std::string r = std::to_string(report.degree);
  os << "# ACM rank-2 bundles on a general hypersurface of degree " << r << " in P^5\n\n";
  os << "| c1 | c2 | g | h⁰I_S(" << r << ") | h⁰N_S | bound | dim P(" << r << ") | verdict |\n";
  os << "|---:|---:|---:|---:|---:|---:|---:|:---|\n";

  std::vector<std::string> footnotes;
  for (const auto& row : report.rows) {
    std::string verdict(to_string(row.verdict));
    for (const auto& note : row.notes) {
      footnotes.push_back(note);
      verdict += " [" + std::to_string(footnotes.size()) + "]";
    }
    os << "| " << cell(row.c1) << " | " << cell(row.c2) << " | " << cell(row.genus) << " | "
       << cell(row.h0_ideal) << " | " << cell(row.h0_normal) << " | " << cell(row.bound) << " | "
       << row.moduli_dim << " | " << verdict << " |\n";
  }
  if (!footnotes.empty()) {
    os << "\n";
    for (std::size_t i = 0; i < footnotes.size(); ++i) {
      os << "[" << i + 1 << "] " << footnotes[i] << "\n";
    }
  }
  os << "\n" << (report.conclusive() ? "All cases conclusive." : "Some cases are inconclusive.")
     << "\n";
  return os.str();
}

}  // namespace acmsplit
