#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vogelcas/oracle.hpp"
#include "vogelcas/vogel.hpp"

namespace vogelcas::cli {

enum class Format { Json, Csv, Md };

/// Throws std::invalid_argument on an unknown name.
Format parse_format(std::string_view name);

using Json = nlohmann::ordered_json;

/// A row of coefficients for one algebra or Vogel point.
struct SeriesRecord {
  std::string algebra;
  VogelPoint vogel;  // canonical representative
  Rational t;
  std::optional<Rational> dim;
  std::vector<Rational> coeffs;
};

Json to_json(const CatalogRow& row);
Json to_json(const SeriesRecord& record);
Json to_json(const VerificationReport& report);
/// Same schema as a verification report, for checks not tied to a root system.
Json checks_to_json(std::string_view label, const std::vector<Check>& checks);

/// Quotes a CSV field when it contains a comma, quote, or newline.
std::string csv_field(std::string_view s);

std::string render_table(const std::vector<CatalogRow>& rows, Format format);
std::string render_series(const SeriesRecord& record, Format format);
std::string render_checks(std::string_view label, const std::vector<Check>& checks,
                          Format format, bool with_header);

}  // namespace vogelcas::cli
