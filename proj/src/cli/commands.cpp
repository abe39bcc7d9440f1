#include "fatpts/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fatpts/cli/scheme_document.hpp"
#include "fatpts/core/errors.hpp"
#include "fatpts/oracle/enumerate.hpp"
#include "fatpts/oracle/oracle.hpp"
#include "fatpts/separators/separators.hpp"
#include "json.hpp"

namespace fatpts::cli {

namespace {

using Json = nlohmann::ordered_json;
using Point = std::pair<std::size_t, std::size_t>;

struct Settings {
  std::string input = "-";
  std::string format = "text";
  std::string coords;
  std::string point;
  bool all = false;
  std::string window;
  std::string drop;
  std::string level;
  bool expand = false;
  std::size_t max_size = 3;
  Multiplicity max_mult = 2;
};

/// Thrown for bad flag values; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<std::size_t, std::size_t> parse_pair(const std::string& text, const char* flag, bool one_based) {
  const auto comma = text.find(',');
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw UsageError(std::string(flag) + " expects two comma-separated integers, got '" + text + "'");
    return std::stoul(s);
  };
  if (comma == std::string::npos) throw UsageError(std::string(flag) + " expects 'a,b', got '" + text + "'");
  auto a = number(text.substr(0, comma)), b = number(text.substr(comma + 1));
  if (one_based && (a == 0 || b == 0)) throw UsageError(std::string(flag) + " indices are 1-based");
  return {a, b};
}

Point parse_point(const std::string& text, const MultiplicityGrid& grid, const char* flag) {
  auto [i, j] = parse_pair(text, flag, true);
  if (i > grid.rows() || j > grid.cols())
    throw UsageError(std::string(flag) + " " + text + " is outside the " + std::to_string(grid.rows()) + "x" +
                     std::to_string(grid.cols()) + " grid");
  if (grid.at(i - 1, j - 1) == 0)
    throw UsageError(std::string(flag) + " " + text + ": P" + std::to_string(i) + "xQ" + std::to_string(j) +
                     " is not in the support");
  return {i - 1, j - 1};
}

std::string label(const Point& p) {
  return "P" + std::to_string(p.first + 1) + "xQ" + std::to_string(p.second + 1);
}

Json degrees_json(const BidegreeList& ds) {
  Json arr = Json::array();
  for (const auto& d : ds) arr.push_back({d.i, d.j});
  return arr;
}

std::string degrees_text(const BidegreeList& ds) {
  std::string s;
  for (const auto& d : ds) s += (s.empty() ? "" : " ") + d.to_string();
  return s.empty() ? "(none)" : s;
}

Json table_json(const HilbertTable& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i <= t.window().i; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j <= t.window().j; ++j) row.push_back(t.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open '" + path + "'");
  return read_all(f);
}

class Runner {
 public:
  Runner(const Settings& s, std::istream& in, std::ostream& out) : s_(s), in_(in), out_(out) {}

  SchemeDocument load() {
    auto doc = parse_scheme(s_.input == "-" ? read_all(in_) : read_file(s_.input));
    if (!s_.coords.empty()) apply_coordinates(doc, read_file(s_.coords));
    return doc;
  }

  bool json() const { return s_.format == "json"; }

  void emit(const Json& j) { out_ << j.dump(2) << '\n'; }

  std::vector<Point> selected_points(const MultiplicityGrid& grid) {
    if (s_.all == !s_.point.empty()) throw UsageError("give exactly one of --point i,j or --all");
    if (s_.all) return grid.support();
    return {parse_point(s_.point, grid, "--point")};
  }

  int check_acm() {
    const auto doc = load();
    const auto verdict = is_acm(doc.grid);
    if (json()) {
      Json j;
      j["acm"] = verdict.acm;
      j["witness"] = verdict.witness ? Json{verdict.witness->first, verdict.witness->second} : Json(nullptr);
      emit(j);
    } else if (verdict) {
      out_ << "ACM\n";
    } else {
      out_ << "not ACM\nwitness: " << format_tuple(verdict.witness->first) << ' '
           << format_tuple(verdict.witness->second) << '\n';
    }
    return verdict ? kSuccess : kNegative;
  }

  int sz() {
    const auto doc = load();
    const auto set = build_sz(doc.grid);
    if (json()) {
      Json tuples = Json::array();
      for (const auto& e : set) tuples.push_back({{"row", e.row + 1}, {"h", e.h}, {"tuple", e.tuple}});
      emit({{"size", set.size()}, {"tuples", tuples}});
      return kSuccess;
    }
    for (std::size_t i = 0; i < doc.grid.rows(); ++i) {
      out_ << "P" << i + 1 << ':';
      for (const auto& e : set)
        if (e.row == i) out_ << ' ' << format_tuple(e.tuple);
      out_ << '\n';
    }
    out_ << "size: " << set.size() << '\n';
    return kSuccess;
  }

  int canonical() {
    const auto doc = load();
    const auto c = canonicalize(doc.grid);
    std::vector<std::size_t> rows, cols;
    for (auto r : c.row_permutation) rows.push_back(r + 1);
    for (auto k : c.col_permutation) cols.push_back(k + 1);
    if (json()) {
      emit({{"grid", c.grid.data()}, {"row_permutation", rows}, {"col_permutation", cols}});
      return kSuccess;
    }
    out_ << emit_text(SchemeDocument{c.grid});
    out_ << "rows:";
    for (auto r : rows) out_ << ' ' << r;
    out_ << "\ncolumns:";
    for (auto k : cols) out_ << ' ' << k;
    out_ << '\n';
    return kSuccess;
  }

  int bounds() {
    const auto doc = load();
    const bool acm = static_cast<bool>(is_acm(doc.grid));
    const auto grid = acm ? canonicalize(doc.grid).grid : doc.grid;
    const auto violations = check_multiplicity_bounds(grid);
    if (json()) {
      Json list = Json::array();
      for (const auto& v : violations)
        list.push_back({{"kind", v.kind == BoundViolation::Kind::FourPoints ? "four-point" : "three-point"},
                        {"rows", {v.i + 1, v.k + 1}},
                        {"columns", {v.j + 1, v.l + 1}},
                        {"lhs", v.lhs},
                        {"rhs", v.rhs}});
      emit({{"acm", acm}, {"canonicalized", acm}, {"violations", list}});
    } else {
      out_ << (acm ? "checked on the canonical order\n" : "not ACM; checked in the given order\n");
      for (const auto& v : violations) out_ << v.describe() << '\n';
      if (violations.empty()) out_ << "no violations\n";
    }
    return violations.empty() ? kSuccess : kNegative;
  }

  int degrees() {
    const auto doc = load();
    const auto points = selected_points(doc.grid);
    Json list = Json::array();
    for (const auto& p : points) {
      const auto d = separator_degrees(doc.grid, p.first, p.second);
      if (json()) {
        const auto sums = truncated_sums(doc.grid, p.first, p.second);
        list.push_back({{"point", {p.first + 1, p.second + 1}},
                        {"multiplicity", d.multiplicity},
                        {"degrees", degrees_json(d.degrees)},
                        {"a", sums.a_seq},
                        {"b", sums.b_seq}});
      } else if (s_.all) {
        out_ << label(p) << ": " << d.to_string() << '\n';
      } else {
        out_ << d.to_string() << '\n';
      }
    }
    if (json()) emit({{"points", list}});
    return kSuccess;
  }

  int forms() {
    const auto doc = load();
    const auto scheme = doc.to_scheme();
    const auto points = selected_points(doc.grid);
    Json lines = Json::object();
    for (std::size_t r = 0; r < doc.grid.rows(); ++r) lines["L_P" + std::to_string(r + 1)] = scheme.row_line(r).to_string();
    for (std::size_t c = 0; c < doc.grid.cols(); ++c) lines["L_Q" + std::to_string(c + 1)] = scheme.col_line(c).to_string();
    if (!json())
      for (const auto& [name, form] : lines.items()) out_ << name << " = " << form.get<std::string>() << '\n';
    Json list = Json::array();
    for (const auto& p : points) {
      const auto forms = separator_forms(scheme, p.first, p.second);
      Json fl = Json::array();
      if (!json()) out_ << label(p) << " (multiplicity " << doc.grid.at(p.first, p.second) << ")\n";
      for (const auto& f : forms) {
        if (json()) {
          Json entry{{"ell", f.ell},
                     {"degree", {f.degree.i, f.degree.j}},
                     {"factored", f.factored()},
                     {"row_exponents", f.row_exponents},
                     {"col_exponents", f.col_exponents}};
          if (s_.expand) entry["expanded"] = f.form.to_string();
          fl.push_back(std::move(entry));
        } else {
          out_ << "  F" << f.ell << ' ' << f.degree << " = " << f.factored() << '\n';
          if (s_.expand) out_ << "      = " << f.form.to_string() << '\n';
        }
      }
      if (json()) list.push_back({{"point", {p.first + 1, p.second + 1}}, {"forms", fl}});
    }
    if (json()) emit({{"lines", lines}, {"points", list}});
    return kSuccess;
  }

  int hilbert() {
    const auto doc = load();
    const auto scheme = doc.to_scheme();
    const Bidegree window = s_.window.empty() ? oracle::default_generator_window(doc.grid) : window_flag();
    const auto hz = oracle::hilbert_function(scheme, window);
    Json j{{"window", {window.i, window.j}}, {"hilbert", table_json(hz)}};
    if (!json()) out_ << "H_Z on (0.." << window.i << ")x(0.." << window.j << "):\n" << hz.to_string();
    if (!s_.drop.empty()) {
      const auto p = parse_point(s_.drop, doc.grid, "--drop");
      const auto degs = separator_degrees(doc.grid, p.first, p.second);
      const auto dropped = hilbert_update(hz, degs);
      if (json()) {
        j["drop"] = {{"point", {p.first + 1, p.second + 1}},
                     {"degrees", degrees_json(degs.degrees)},
                     {"hilbert", table_json(dropped)}};
      } else {
        out_ << "separator degrees of " << label(p) << ": " << degs.to_string() << '\n'
             << "H_Z' after lowering " << label(p) << " (update rule):\n"
             << dropped.to_string();
      }
    }
    if (json()) emit(j);
    return kSuccess;
  }

  int verify() {
    std::string level = s_.level;
    if (level.empty()) level = s_.point.empty() ? "scheme" : "point";
    if (level == "exhaustive-small") return verify_exhaustive();
    const auto doc = load();
    const auto scheme = doc.to_scheme();
    if (!is_acm(doc.grid)) throw NotAcm("not ACM: the separator formula does not apply");
    std::vector<Point> points;
    if (level == "point") {
      if (s_.point.empty()) throw UsageError("--level point needs --point i,j");
      points.push_back(parse_point(s_.point, doc.grid, "--point"));
    } else {
      points = doc.grid.support();
    }
    oracle::GeneratorOptions opts;
    if (!s_.window.empty()) opts.window = window_flag();
    const auto scan = oracle::scan_generators(scheme, points, opts);

    bool all_ok = true;
    Json list = Json::array();
    for (const auto& pg : scan.points) {
      const auto formula = separator_degrees(doc.grid, pg.row, pg.col);
      const bool degrees_match = formula.degrees == pg.degrees;
      const bool cardinality = pg.degrees.size() == pg.multiplicity;
      bool separating = true;
      for (const auto& f : separator_forms(scheme, pg.row, pg.col))
        separating = separating && oracle::is_separator(scheme, pg.row, pg.col, f.form);
      const bool update_match = hilbert_update(*scan.hilbert, formula) == *pg.dropped_hilbert;
      const bool ok = degrees_match && cardinality && separating && update_match;
      all_ok = all_ok && ok;
      const Point p{pg.row, pg.col};
      if (json()) {
        list.push_back({{"point", {p.first + 1, p.second + 1}},
                        {"formula", degrees_json(formula.degrees)},
                        {"oracle", degrees_json(pg.degrees)},
                        {"degrees_match", degrees_match},
                        {"cardinality_match", cardinality},
                        {"forms_separating", separating},
                        {"hilbert_update_match", update_match}});
      } else {
        out_ << label(p) << ": formula " << formula.to_string() << " | oracle " << degrees_text(pg.degrees)
             << " | separators " << (separating ? "ok" : "FAIL") << " | Hilbert update "
             << (update_match ? "ok" : "FAIL") << (ok ? "" : "  <-- MISMATCH") << '\n';
      }
    }
    if (json()) {
      emit({{"level", level},
            {"window", {scan.window.i, scan.window.j}},
            {"points", list},
            {"verified", all_ok}});
    } else {
      out_ << (all_ok ? "verified: formula and oracle agree\n" : "MISMATCH: formula and oracle disagree\n");
    }
    return all_ok ? kSuccess : kNegative;
  }

 private:
  Bidegree window_flag() const {
    auto [r, s] = parse_pair(s_.window, "--window", false);
    return {r, s};
  }

  int verify_exhaustive() {
    std::size_t grids = 0, points = 0, mismatches = 0;
    Json bad = Json::array();
    for (const auto& grid : oracle::all_grids(s_.max_size, s_.max_size, s_.max_mult)) {
      if (!is_acm(grid)) continue;
      ++grids;
      const auto scan = oracle::scan_generators(Scheme(grid));
      for (const auto& pg : scan.points) {
        ++points;
        const auto formula = separator_degrees(grid, pg.row, pg.col);
        if (formula.degrees == pg.degrees && pg.degrees.size() == pg.multiplicity) continue;
        ++mismatches;
        bad.push_back({{"grid", grid.data()}, {"point", {pg.row + 1, pg.col + 1}}});
        if (!json())
          out_ << "mismatch at " << label({pg.row, pg.col}) << " of grid "
               << emit_json(SchemeDocument{grid});
      }
    }
    if (json()) {
      emit({{"level", "exhaustive-small"},
            {"max_size", s_.max_size},
            {"max_mult", s_.max_mult},
            {"acm_grids", grids},
            {"points", points},
            {"mismatches", bad},
            {"verified", mismatches == 0}});
    } else {
      out_ << "checked " << grids << " ACM grids (up to " << s_.max_size << "x" << s_.max_size << ", entries <= "
           << s_.max_mult << "), " << points << " points: "
           << (mismatches == 0 ? "all agree" : std::to_string(mismatches) + " mismatches") << '\n';
    }
    return mismatches == 0 ? kSuccess : kNegative;
  }

  const Settings& s_;
  std::istream& in_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Separators of ACM fat point schemes on P1 x P1", "fatpts"};
  app.require_subcommand(1);
  app.add_option("-i,--input", s.input, "scheme file (grid text or JSON); '-' reads stdin");
  app.add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--coords", s.coords, "JSON file with row_points / col_points");

  auto* check = app.add_subcommand("check-acm", "decide ACM-ness, print a witness if not");
  auto* sz = app.add_subcommand("sz", "list the tuple multiset S_Z");
  auto* canonical = app.add_subcommand("canonical", "sort rows and columns into dominance order");
  auto* bounds = app.add_subcommand("bounds", "check the relative multiplicity bounds");
  auto* degrees = app.add_subcommand("degrees", "minimal separator degrees");
  auto* forms = app.add_subcommand("forms", "minimal separators as products of lines");
  auto* hilbert = app.add_subcommand("hilbert", "bigraded Hilbert function");
  auto* verify = app.add_subcommand("verify", "cross-check formulas against the linear-algebra oracle");
  for (auto* sub : {check, sz, canonical, bounds, degrees, forms, hilbert, verify}) sub->fallthrough();
  for (auto* sub : {degrees, forms, verify}) sub->add_option("--point", s.point, "point i,j (1-based)");
  for (auto* sub : {degrees, forms}) sub->add_flag("--all", s.all, "every supported point");
  forms->add_flag("--expand", s.expand, "also print the expanded polynomial");
  for (auto* sub : {hilbert, verify}) sub->add_option("--window", s.window, "window R,S");
  hilbert->add_option("--drop", s.drop, "also give H for the point i,j lowered by one");
  verify->add_option("--level", s.level, "point, scheme or exhaustive-small")
      ->check(CLI::IsMember({"point", "scheme", "exhaustive-small"}));
  verify->add_option("--max-size", s.max_size, "exhaustive-small: largest number of rows/columns");
  verify->add_option("--max-mult", s.max_mult, "exhaustive-small: largest multiplicity");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  Runner runner(s, in, out);
  try {
    if (*check) return runner.check_acm();
    if (*sz) return runner.sz();
    if (*canonical) return runner.canonical();
    if (*bounds) return runner.bounds();
    if (*degrees) return runner.degrees();
    if (*forms) return runner.forms();
    if (*hilbert) return runner.hilbert();
    if (*verify) return runner.verify();
  } catch (const NotAcm& e) {
    err << "error: " << e.what() << '\n';
    return kNegative;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidInput& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PointNotInSupport& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const WindowError& e) {
    err << "window error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace fatpts::cli
