#include "wreath/cli/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>

#include <json.hpp>

#include "wreath/analysis.hpp"
#include "wreath/enumerate.hpp"
#include "wreath/error.hpp"
#include "wreath/generating.hpp"
#include "wreath/published_table.hpp"
#include "wreath/statistics.hpp"

namespace wreath::cli {

namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& cells, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += sep;
    out += cells[i];
  }
  return out;
}

void print_grid(std::ostream& out, const std::vector<int>& ns, const std::vector<int>& rs,
                const std::vector<std::vector<std::string>>& cells) {
  std::size_t width = 3;
  for (const auto& row : cells) {
    for (const auto& cell : row) width = std::max(width, cell.size());
  }
  out << std::setw(4) << std::left << "r\\n" << std::right;
  for (int n : ns) out << ' ' << std::setw(static_cast<int>(width)) << n;
  out << '\n';
  for (std::size_t i = 0; i < rs.size(); ++i) {
    out << std::setw(4) << std::left << rs[i] << std::right;
    for (const auto& cell : cells[i]) out << ' ' << std::setw(static_cast<int>(width)) << cell;
    out << '\n';
  }
}

std::string table_cell(int r, int n, const TableOptions& options, std::uint64_t bound) {
  switch (options.method) {
    case CountMethod::Formula: return d_formula(r, n).get_str();
    case CountMethod::TwoTerm: return d_two_term(r, n).get_str();
    case CountMethod::OneTerm: return d_one_term(r, n).get_str();
    case CountMethod::Transform:
      if (r < 2) return "n/a";
      return d_mixed_transform(r, n).get_str();
    case CountMethod::BruteForce:
      try {
        return d_bruteforce(r, n, bound).get_str();
      } catch (const EnumerationRefused&) {
        return "refused";
      }
  }
  return "?";
}

const char* to_string(PolyKind kind) {
  switch (kind) {
    case PolyKind::QtDerangement: return "qt-derangement";
    case PolyKind::Eulerian: return "eulerian";
    case PolyKind::ExcDerangement: return "exc-derangement";
  }
  return "?";
}

const char* to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::Derangement: return "derangement";
    case SeriesKind::Eulerian: return "eulerian";
    case SeriesKind::ExcDerangement: return "exc-derangement";
  }
  return "?";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string interval_text(const RootInterval& r) {
  if (r.exact()) return fraction_string(r.lower);
  return "(" + fraction_string(r.lower) + ", " + fraction_string(r.upper) + ")";
}

}  // namespace

CountMethod parse_method(const std::string& text) {
  if (text == "formula") return CountMethod::Formula;
  if (text == "two-term") return CountMethod::TwoTerm;
  if (text == "one-term") return CountMethod::OneTerm;
  if (text == "transform") return CountMethod::Transform;
  if (text == "bruteforce") return CountMethod::BruteForce;
  throw Error(ErrorKind::Parse, "unknown method '" + text + "' (formula, two-term, one-term, transform, bruteforce)");
}

PolyKind parse_poly_kind(const std::string& text) {
  if (text == "qt-derangement") return PolyKind::QtDerangement;
  if (text == "eulerian") return PolyKind::Eulerian;
  if (text == "exc-derangement") return PolyKind::ExcDerangement;
  throw Error(ErrorKind::Parse, "unknown kind '" + text + "' (qt-derangement, eulerian, exc-derangement)");
}

SeriesKind parse_series_kind(const std::string& text) {
  if (text == "derangement") return SeriesKind::Derangement;
  if (text == "eulerian") return SeriesKind::Eulerian;
  if (text == "exc-derangement") return SeriesKind::ExcDerangement;
  throw Error(ErrorKind::Parse, "unknown series '" + text + "' (derangement, eulerian, exc-derangement)");
}

int cmd_table(const RunConfig& config, const TableOptions& options, std::ostream& out) {
  const std::vector<int> rs = config.r.values();
  const std::vector<int> ns = config.n.values();
  std::vector<std::vector<std::string>> cells;
  for (int r : rs) {
    std::vector<std::string> row;
    for (int n : ns) row.push_back(table_cell(r, n, options, config.bound));
    cells.push_back(std::move(row));
  }

  std::vector<int> published_rs;
  std::vector<std::vector<std::string>> published;
  std::vector<TableDiscrepancy> discrepancies;
  if (options.compare_published) {
    for (int r : rs) {
      if (r > kPublishedMaxModulus) continue;
      std::vector<std::string> row;
      for (int n : ns) row.push_back(n <= kPublishedMaxSize ? published_value(r, n).get_str() : "-");
      published_rs.push_back(r);
      published.push_back(std::move(row));
    }
    for (const TableDiscrepancy& d : published_discrepancies()) {
      if (d.modulus >= config.r.first && d.modulus <= config.r.last && d.size >= config.n.first &&
          d.size <= config.n.last) {
        discrepancies.push_back(d);
      }
    }
  }

  switch (config.format) {
    case OutputFormat::Csv: {
      std::vector<std::string> header{"r"};
      for (int n : ns) header.push_back(std::to_string(n));
      out << join(header, ",") << '\n';
      for (std::size_t i = 0; i < rs.size(); ++i) out << rs[i] << ',' << join(cells[i], ",") << '\n';
      if (options.compare_published) {
        out << "\npublished\n" << join(header, ",") << '\n';
        for (std::size_t i = 0; i < published_rs.size(); ++i) {
          out << published_rs[i] << ',' << join(published[i], ",") << '\n';
        }
        out << "\ndiscrepancies\nr,n,printed,computed\n";
        for (const auto& d : discrepancies) {
          out << d.modulus << ',' << d.size << ',' << d.printed << ',' << d.computed << '\n';
        }
      }
      break;
    }
    case OutputFormat::Json: {
      json doc{{"schema", 1}, {"method", to_string(options.method)}, {"n", ns}};
      json rows = json::array();
      for (std::size_t i = 0; i < rs.size(); ++i) rows.push_back({{"r", rs[i]}, {"values", cells[i]}});
      doc["rows"] = rows;
      if (options.compare_published) {
        json printed = json::array();
        for (std::size_t i = 0; i < published_rs.size(); ++i) {
          printed.push_back({{"r", published_rs[i]}, {"values", published[i]}});
        }
        doc["published"] = printed;
        json list = json::array();
        for (const auto& d : discrepancies) {
          list.push_back({{"r", d.modulus}, {"n", d.size}, {"printed", d.printed.get_str()},
                          {"computed", d.computed.get_str()}});
        }
        doc["discrepancies"] = list;
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Pretty: {
      print_grid(out, ns, rs, cells);
      if (options.compare_published) {
        out << "\npublished table\n";
        print_grid(out, ns, published_rs, published);
        out << "\ndiscrepancies: " << discrepancies.size() << '\n';
        for (const auto& d : discrepancies) {
          out << "  r=" << d.modulus << " n=" << d.size << ": printed " << d.printed << ", computed "
              << d.computed << '\n';
        }
      }
      break;
    }
  }
  return kExitPass;
}

int cmd_poly(const RunConfig& config, PolyKind kind, std::ostream& out) {
  json list = json::array();
  if (config.format == OutputFormat::Csv) out << "r,n,polynomial\n";
  for (int r : config.r.values()) {
    for (int n : config.n.values()) {
      BivariatePolynomial p;
      switch (kind) {
        case PolyKind::QtDerangement: p = qt_formula(r, n); break;
        case PolyKind::Eulerian: p = eulerian_from_exc(r, n); break;
        case PolyKind::ExcDerangement: p = exc_derangement_poly(r, n); break;
      }
      switch (config.format) {
        case OutputFormat::Csv: out << r << ',' << n << ",\"" << p.to_string() << "\"\n"; break;
        case OutputFormat::Json:
          list.push_back({{"kind", to_string(kind)}, {"r", r}, {"n", n}, {"polynomial", p.to_string()},
                          {"terms", to_json(p)}});
          break;
        case OutputFormat::Pretty: out << "r=" << r << " n=" << n << ": " << p.to_string() << '\n'; break;
      }
    }
  }
  if (config.format == OutputFormat::Json) out << list.dump(2) << '\n';
  return kExitPass;
}

int cmd_roots(const RunConfig& config, std::ostream& out) {
  bool all_pass = true;
  json list = json::array();
  if (config.format == OutputFormat::Csv) {
    out << "r,n,degree,real_roots,negative_roots,negative_distinct,interlacing_with_next,log_concave,unimodal\n";
  }
  for (int r : config.r.values()) {
    for (int n : config.n.values()) {
      if (n < 2) continue;
      const RootTheoremCell cell = root_theorem_cell(r, n, config.tolerance);
      all_pass = all_pass && cell.passed();
      switch (config.format) {
        case OutputFormat::Csv:
          out << r << ',' << n << ',' << cell.roots.degree << ',' << cell.roots.real_roots << ','
              << cell.roots.negative_roots << ',' << to_string(cell.roots.verdict) << ','
              << to_string(cell.interlacing_with_next.verdict) << ',' << yes_no(cell.log_concave) << ','
              << yes_no(cell.unimodal) << '\n';
          break;
        case OutputFormat::Json: list.push_back(to_json(cell)); break;
        case OutputFormat::Pretty: {
          out << "r=" << r << " n=" << n << ": " << cell.polynomial.to_string() << '\n';
          if (r == 1) out << "  (checked after dividing by q)\n";
          out << "  roots: " << cell.roots.real_roots << " real, " << cell.roots.negative_roots
              << " negative, degree " << cell.roots.degree << " -> " << to_string(cell.roots.verdict);
          if (!cell.roots.reason.empty()) out << " (" << cell.roots.reason << ')';
          out << '\n';
          for (const RootInterval& root : cell.roots.isolation.roots) out << "    " << interval_text(root) << '\n';
          out << "  interlaces D_" << n + 1 << ": " << to_string(cell.interlacing_with_next.verdict);
          if (!cell.interlacing_with_next.pattern.empty()) out << " [" << cell.interlacing_with_next.pattern << ']';
          if (!cell.interlacing_with_next.reason.empty()) out << " (" << cell.interlacing_with_next.reason << ')';
          out << "\n  log-concave " << yes_no(cell.log_concave) << ", unimodal " << yes_no(cell.unimodal)
              << ", leading/constant coefficients " << yes_no(cell.extreme_coefficients) << '\n';
          break;
        }
      }
    }
  }
  if (config.format == OutputFormat::Json) out << list.dump(2) << '\n';
  return all_pass ? kExitPass : kExitFailure;
}

int cmd_enumerate(const RunConfig& config, bool derangements_only, std::ostream& out) {
  json list = json::array();
  if (config.format == OutputFormat::Csv) out << "r,n,element,maj,des,sgn,exc,sub\n";
  for (int r : config.r.values()) {
    for (int n : config.n.values()) {
      EnumerationRange range =
          derangements_only ? enumerate_derangements(r, n, config.bound) : enumerate_group(r, n, config.bound);
      for (const CyclicPermutation& sigma : range) {
        const StatRecord s = stat_record(sigma, config.order);
        switch (config.format) {
          case OutputFormat::Csv:
            out << r << ',' << n << ",\"" << format(sigma) << "\"," << s.maj << ',' << s.des << ',' << s.sgn << ','
                << s.exc << ',' << s.sub << '\n';
            break;
          case OutputFormat::Json: {
            json record = s;
            record["r"] = r;
            record["n"] = n;
            record["element"] = format(sigma);
            list.push_back(std::move(record));
            break;
          }
          case OutputFormat::Pretty:
            out << std::left << std::setw(2 * n + 8) << (format(sigma).empty() ? "()" : format(sigma))
                << std::right << " maj=" << s.maj << " des=" << s.des << " sgn=" << s.sgn << " exc=" << s.exc
                << " sub=" << s.sub << '\n';
            break;
        }
      }
    }
  }
  if (config.format == OutputFormat::Json) out << list.dump(2) << '\n';
  return kExitPass;
}

int cmd_series(const RunConfig& config, SeriesKind kind, std::ostream& out) {
  json list = json::array();
  if (config.format == OutputFormat::Csv) out << "r,n,coefficient\n";
  for (int r : config.r.values()) {
    std::vector<std::string> coefficients;
    if (kind == SeriesKind::Derangement) {
      const auto series = derangement_egf(r, config.series_order);
      for (int n = 0; n <= config.series_order; ++n) coefficients.push_back(coefficient_as_integer(series, n).get_str());
    } else {
      const auto series = kind == SeriesKind::Eulerian ? eulerian_egf(r, config.series_order)
                                                       : exc_derangement_egf(r, config.series_order);
      for (int n = 0; n <= config.series_order; ++n) {
        coefficients.push_back(coefficient_as_polynomial(series, n).to_string());
      }
    }
    for (int n = 0; n <= config.series_order; ++n) {
      switch (config.format) {
        case OutputFormat::Csv: out << r << ',' << n << ",\"" << coefficients[n] << "\"\n"; break;
        case OutputFormat::Json:
          list.push_back({{"series", to_string(kind)}, {"r", r}, {"n", n}, {"coefficient", coefficients[n]}});
          break;
        case OutputFormat::Pretty:
          out << "r=" << r << " n=" << n << ": " << coefficients[n] << '\n';
          break;
      }
    }
  }
  if (config.format == OutputFormat::Json) out << list.dump(2) << '\n';
  return kExitPass;
}

}  // namespace wreath::cli
