#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vogelcas/render.hpp"

namespace vogelcas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

enum class TableWhich { Simple, Super, Suite };
enum class SeriesKind { Universal, Canonical, Okubo };

struct SeriesRequest {
  std::optional<std::string> algebra;
  std::optional<std::string> vogel;
  SeriesKind kind = SeriesKind::Universal;
  std::size_t order = 6;
  Format format = Format::Json;
};

struct VerifyRequest {
  std::string suite = "default";
  std::optional<std::string> vogel;
  int max_k = 6;
  unsigned jobs = 0;
  Format format = Format::Json;
};

int cmd_table(TableWhich which, Format format, std::ostream& out);
/// Throws std::invalid_argument / std::domain_error on bad input.
SeriesRecord compute_series(const SeriesRequest& request);
int cmd_series(const SeriesRequest& request, std::ostream& out, std::ostream& err);
/// "default", a single id, or a comma-separated list of ids.
std::vector<AlgebraId> parse_suite(std::string_view name);
int cmd_verify(const VerifyRequest& request, std::ostream& out, std::ostream& err);
int cmd_identities(Format format, std::ostream& out);

/// Full command line (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vogelcas::cli
