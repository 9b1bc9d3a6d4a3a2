#include "vogelcas/render.hpp"

#include <sstream>
#include <stdexcept>

namespace vogelcas::cli {

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "md") return Format::Md;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (json, csv, md)");
}

namespace {

const char* status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Ok: return "ok";
    case RowStatus::Alias: return "alias";
    case RowStatus::Excluded: return "excluded";
  }
  return "?";
}

Json rationals(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

}  // namespace

Json to_json(const CatalogRow& row) {
  Json j;
  j["family"] = row.family;
  j["alpha"] = row.alpha;
  j["beta"] = row.beta;
  j["gamma"] = row.gamma;
  j["t"] = row.t;
  j["dim"] = row.dim ? Json(*row.dim) : Json(nullptr);
  j["status"] = status_name(row.status);
  j["note"] = row.note;
  return j;
}

Json to_json(const SeriesRecord& record) {
  Json j;
  j["algebra"] = record.algebra;
  j["vogel"] = rationals({record.vogel.alpha(), record.vogel.beta(), record.vogel.gamma()});
  j["t"] = record.t.str();
  j["dim"] = record.dim ? Json(record.dim->str()) : Json(nullptr);
  j["coeffs"] = rationals(record.coeffs);
  return j;
}

Json checks_to_json(std::string_view label, const std::vector<Check>& checks) {
  Json j;
  j["algebra"] = std::string(label);
  Json list = Json::array();
  for (const auto& c : checks) {
    Json item;
    item["name"] = c.name;
    item["status"] = c.pass ? "pass" : "fail";
    item["lhs"] = c.lhs;
    item["rhs"] = c.rhs;
    list.push_back(std::move(item));
  }
  j["checks"] = std::move(list);
  return j;
}

Json to_json(const VerificationReport& report) {
  return checks_to_json(report.algebra.label(), report.checks);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

namespace {

std::string md_cell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string render_table(const std::vector<CatalogRow>& rows, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json:
      for (const auto& row : rows) os << to_json(row).dump() << '\n';
      break;
    case Format::Csv:
      os << "family,alpha,beta,gamma,t,dim\n";
      for (const auto& row : rows) {
        std::string family = row.family;
        if (row.status != RowStatus::Ok) family += " [" + row.note + "]";
        os << csv_field(family) << ',' << csv_field(row.alpha) << ',' << csv_field(row.beta) << ','
           << csv_field(row.gamma) << ',' << csv_field(row.t) << ','
           << csv_field(row.dim.value_or("")) << '\n';
      }
      break;
    case Format::Md:
      os << "| family | alpha | beta | gamma | t | dim | note |\n";
      os << "|---|---|---|---|---|---|---|\n";
      for (const auto& row : rows)
        os << "| " << md_cell(row.family) << " | " << md_cell(row.alpha) << " | "
           << md_cell(row.beta) << " | " << md_cell(row.gamma) << " | " << md_cell(row.t)
           << " | " << md_cell(row.dim.value_or("")) << " | " << md_cell(row.note) << " |\n";
      break;
  }
  return os.str();
}

std::string render_series(const SeriesRecord& record, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json:
      os << to_json(record).dump() << '\n';
      break;
    case Format::Csv:
      os << "algebra,k,coefficient\n";
      for (std::size_t k = 0; k < record.coeffs.size(); ++k)
        os << csv_field(record.algebra) << ',' << k << ',' << record.coeffs[k].str() << '\n';
      break;
    case Format::Md:
      os << "**" << md_cell(record.algebra) << "** vogel " << record.vogel.str()
         << ", t = " << record.t.str();
      if (record.dim) os << ", dim = " << record.dim->str();
      os << "\n\n| k | coefficient |\n|---|---|\n";
      for (std::size_t k = 0; k < record.coeffs.size(); ++k)
        os << "| " << k << " | " << record.coeffs[k].str() << " |\n";
      break;
  }
  return os.str();
}

std::string render_checks(std::string_view label, const std::vector<Check>& checks,
                          Format format, bool with_header) {
  std::ostringstream os;
  switch (format) {
    case Format::Json:
      os << checks_to_json(label, checks).dump() << '\n';
      break;
    case Format::Csv:
      if (with_header) os << "algebra,check,status,lhs,rhs\n";
      for (const auto& c : checks)
        os << csv_field(label) << ',' << c.name << ',' << (c.pass ? "pass" : "fail") << ','
           << csv_field(c.lhs) << ',' << csv_field(c.rhs) << '\n';
      break;
    case Format::Md:
      os << "### " << md_cell(label) << "\n\n| check | status | lhs | rhs |\n|---|---|---|---|\n";
      for (const auto& c : checks)
        os << "| " << c.name << " | " << (c.pass ? "pass" : "**fail**") << " | " << md_cell(c.lhs)
           << " | " << md_cell(c.rhs) << " |\n";
      os << '\n';
      break;
  }
  return os.str();
}

}  // namespace vogelcas::cli
