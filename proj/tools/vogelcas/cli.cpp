#include "vogelcas/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "vogelcas/identities.hpp"
#include "vogelcas/universal.hpp"

namespace vogelcas::cli {

int cmd_table(TableWhich which, Format format, std::ostream& out) {
  std::vector<CatalogRow> rows;
  switch (which) {
    case TableWhich::Simple: rows = simple_catalog(); break;
    case TableWhich::Super: rows = super_catalog(); break;
    case TableWhich::Suite:
      for (const AlgebraId& id : default_suite()) {
        const VogelPoint v = lookup(id);
        rows.push_back({id.label(), v.alpha().str(), v.beta().str(), v.gamma().str(), v.t().str(),
                        dimension(id).str(), RowStatus::Ok, ""});
      }
      break;
  }
  out << render_table(rows, format);
  return kExitOk;
}

SeriesRecord compute_series(const SeriesRequest& request) {
  if (request.algebra.has_value() == request.vogel.has_value())
    throw std::invalid_argument("series: give exactly one of --algebra or --vogel");
  std::optional<AlgebraId> id;
  if (request.algebra) id = AlgebraId::parse(*request.algebra);
  const VogelPoint v = id ? lookup(*id) : VogelPoint::parse(*request.vogel);

  std::optional<Rational> dim;
  if (id) dim = dimension(*id);
  else if (!v.has_zero()) dim = dim_g(v);

  RatFun f;
  switch (request.kind) {
    case SeriesKind::Universal:
      if (!dim) throw std::domain_error("series: dimension undefined at " + v.str());
      f = c_genfun(v, *dim);
      break;
    case SeriesKind::Canonical:
      f = c_hat_genfun(v);
      break;
    case SeriesKind::Okubo:
      f = adjoint_square_genfun(v);
      break;
  }
  return {id ? id->label() : v.str(), canonicalize(v), v.t(), dim, series_expand(f, request.order)};
}

int cmd_series(const SeriesRequest& request, std::ostream& out, std::ostream& err) {
  try {
    out << render_series(compute_series(request), request.format);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "vogelcas series: " << e.what() << '\n';
    return kExitUsage;
  }
}

std::vector<AlgebraId> parse_suite(std::string_view name) {
  if (name == "default") return default_suite();
  std::vector<AlgebraId> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= name.size(); ++i) {
    const char c = i < name.size() ? name[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(AlgebraId::parse(name.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

int cmd_verify(const VerifyRequest& request, std::ostream& out, std::ostream& err) {
  std::vector<VerificationReport> reports;
  try {
    const std::vector<AlgebraId> suite = parse_suite(request.suite);
    for (const auto& id : suite)
      if (id.is_super())
        throw std::invalid_argument("no root data for superalgebra " + id.label());
    if (request.max_k < 1) throw std::invalid_argument("--max-k must be at least 1");
    if (request.vogel) {
      if (suite.size() != 1) throw std::invalid_argument("--vogel needs a single-algebra suite");
      reports.push_back(verify_algebra(suite.front(), VogelPoint::parse(*request.vogel), request.max_k));
    } else {
      reports = verify_all(suite, request.max_k, request.jobs);
    }
  } catch (const std::exception& e) {
    err << "vogelcas verify: " << e.what() << '\n';
    return kExitUsage;
  }
  std::size_t passed = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    out << render_checks(reports[i].algebra.label(), reports[i].checks, request.format, i == 0);
    if (reports[i].passed()) ++passed;
  }
  err << passed << "/" << reports.size() << " algebras passed\n";
  return passed == reports.size() ? kExitOk : kExitVerificationFailed;
}

int cmd_identities(Format format, std::ostream& out) {
  const std::vector<Check> checks = so_n_identities();
  out << render_checks("so(n)", checks, format, true);
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  return ok ? kExitOk : kExitVerificationFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal Casimir eigenvalue generating functions and their root-system checks",
               "vogelcas"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "json";
  std::size_t order = 6;
  int max_k = 6;
  std::string suite = "default";
  std::optional<std::string> vogel;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--order", order, "Highest series coefficient to print");
  app.add_option("--max-k", max_k, "Highest k for the Ĉ_{2k} root-sum comparison");
  app.add_option("--suite", suite, "'default', an algebra id, or a comma-separated list");
  app.add_option("--vogel", vogel, "Vogel triple a,b,c (entries p or p/q)");

  auto* table = app.add_subcommand("table", "Vogel parameter tables");
  std::string which = "simple";
  table->add_option("--which", which)->check(CLI::IsMember({"simple", "super", "suite"}));

  auto* series = app.add_subcommand("series", "Maclaurin coefficients of a generating function");
  std::optional<std::string> algebra;
  std::string kind = "universal";
  series->add_option("--algebra", algebra, "Algebra id such as A2, E8, sl(4|2), osp(7|2)");
  series->add_option("--kind", kind)->check(CLI::IsMember({"universal", "canonical", "okubo"}));

  auto* verify = app.add_subcommand("verify", "Check the universal formulas against root data");
  unsigned jobs = 0;
  verify->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)");

  app.add_subcommand("identities", "Quartic Casimir polynomial identities along so(n)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const Format format = parse_format(format_name);
  if (table->parsed()) {
    const TableWhich w = which == "super" ? TableWhich::Super
                         : which == "suite" ? TableWhich::Suite : TableWhich::Simple;
    return cmd_table(w, format, out);
  }
  if (series->parsed()) {
    const std::map<std::string, SeriesKind> kinds{{"universal", SeriesKind::Universal},
                                                  {"canonical", SeriesKind::Canonical},
                                                  {"okubo", SeriesKind::Okubo}};
    return cmd_series({algebra, vogel, kinds.at(kind), order, format}, out, err);
  }
  if (verify->parsed()) return cmd_verify({suite, vogel, max_k, jobs, format}, out, err);
  return cmd_identities(format, out);
}

}  // namespace vogelcas::cli
