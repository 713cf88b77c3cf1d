// Command-line front end: tables, polynomials, series, roots, enumeration
// and the verification suites.
#include <iostream>

#include <CLI11.hpp>

#include "wreath/cli/commands.hpp"
#include "wreath/cli/verify.hpp"
#include "wreath/enumerate.hpp"
#include "wreath/error.hpp"

using namespace wreath;
using namespace wreath::cli;

int main(int argc, char** argv) {
  CLI::App app{"Cyclic derangements in C_r wr S_n: counts, statistics, q-analogs and root checks"};
  app.require_subcommand(1);

  std::string r_text;
  std::string n_text;
  std::string format_text;
  std::string order_text = "standard";
  std::string tolerance_text;
  std::uint64_t bound = 0;
  int series_order = 8;

  auto add_common = [&](CLI::App* sub, const std::string& default_r, const std::string& default_n) {
    sub->add_option("--r", r_text, "modulus r, single value or range a..b")->default_str(default_r);
    sub->add_option("--n", n_text, "size n, single value or range a..b")->default_str(default_n);
    sub->add_option("--format", format_text, "csv, json or pretty");
    sub->add_option("--bound", bound, "largest group allowed for enumeration (default from WREATH_ENUM_BOUND)");
  };

  CLI::App* table = app.add_subcommand("table", "cyclic derangement numbers d_n^(r)");
  add_common(table, "1..5", "0..6");
  std::string method_text = "formula";
  bool compare_published = false;
  table->add_option("--method", method_text, "formula, two-term, one-term, transform or bruteforce");
  table->add_flag("--compare-paper", compare_published, "also print the published table and its discrepancies");

  CLI::App* poly = app.add_subcommand("poly", "a single family of polynomials");
  add_common(poly, "1..3", "0..5");
  std::string kind_text;
  poly->add_option("--kind", kind_text, "qt-derangement, eulerian or exc-derangement")->required();

  CLI::App* roots = app.add_subcommand("roots", "real roots and interlacing of D_n^(r)(q)");
  add_common(roots, "1..4", "2..8");
  roots->add_option("--tolerance", tolerance_text, "isolating interval width, a positive rational");

  CLI::App* enumerate = app.add_subcommand("enumerate", "list elements with their statistics");
  add_common(enumerate, "2", "2");
  bool derangements_only = false;
  enumerate->add_flag("--derangements", derangements_only, "only elements without fixed points");
  enumerate->add_option("--letter-order", order_text, "total order on letters: standard or alternate");

  CLI::App* series = app.add_subcommand("series", "coefficients of the exponential generating functions");
  add_common(series, "1..3", "0");
  std::string series_text;
  series->add_option("--kind", series_text, "derangement, eulerian or exc-derangement")->required();
  series->add_option("--order", series_order, "truncation order N");

  CLI::App* verify = app.add_subcommand("verify", "check every identity over a grid and report");
  add_common(verify, "1..3", "0..5");
  std::string suite_text = "all";
  verify->add_option("--suite", suite_text, "all, counts, qt, bijections, eulerian, egf or roots");
  verify->add_option("--letter-order", order_text, "total order used by brute force: standard or alternate");
  verify->add_option("--tolerance", tolerance_text, "isolating interval width, a positive rational");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? kExitPass : kExitUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    RunConfig config;
    config.command = active->get_name();
    config.r = parse_range(r_text.empty() ? active->get_option("--r")->get_default_str() : r_text);
    config.n = parse_range(n_text.empty() ? active->get_option("--n")->get_default_str() : n_text);
    config.order = parse_order(order_text);
    config.series_order = series_order;
    config.bound = bound > 0 ? bound : enumeration_bound_from_env();
    if (active->count("--bound") > 0 && bound == 0) throw Error(ErrorKind::InvalidArgument, "bound must be >= 1");
    if (!tolerance_text.empty()) config.tolerance = parse_rational(tolerance_text);
    if (!format_text.empty()) {
      config.format = parse_format(format_text);
    } else if (active == verify) {
      config.format = OutputFormat::Json;
    }
    validate(config);

    if (active == table) return cmd_table(config, {parse_method(method_text), compare_published}, std::cout);
    if (active == poly) return cmd_poly(config, parse_poly_kind(kind_text), std::cout);
    if (active == roots) return cmd_roots(config, std::cout);
    if (active == enumerate) return cmd_enumerate(config, derangements_only, std::cout);
    if (active == series) return cmd_series(config, parse_series_kind(series_text), std::cout);
    return cmd_verify(config, parse_suite(suite_text), std::cout);
  } catch (const EnumerationRefused& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
