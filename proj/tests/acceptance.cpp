#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fatpts/algebra/elimination.hpp"
#include "fatpts/core/grid.hpp"
#include "fatpts/oracle/enumerate.hpp"
#include "fatpts/oracle/oracle.hpp"
#include "fatpts/separators/separators.hpp"
#include "fixtures.hpp"

using namespace fatpts;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string format_seconds(double s) {
  char buf[32];
  if (s < 1e-3)
    std::snprintf(buf, sizeof buf, "%.1f us", s * 1e6);
  else if (s < 1)
    std::snprintf(buf, sizeof buf, "%.1f ms", s * 1e3);
  else
    std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

int failures = 0;

void report(int number, const std::string& title, const std::function<Outcome()>& body) {
  Outcome out;
  const auto t0 = Clock::now();
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double t = seconds_since(t0);
  if (!out.pass) ++failures;
  std::printf("%s  %2d  %s  [%s]%s%s\n", out.pass ? "PASS" : "FAIL", number, title.c_str(), format_seconds(t).c_str(),
              out.detail.empty() ? "" : "  ", out.detail.c_str());
  std::fflush(stdout);
}

/// Fastest of `reps` runs of f.
double best_time(int reps, const std::function<void()>& f) {
  double best = 1e9;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    f();
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

std::vector<std::size_t> shuffled(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

struct GridCheck {
  MultiplicityGrid grid;
  oracle::GeneratorScan scan;
  double seconds = 0;
};

GridCheck scan_grid(const MultiplicityGrid& g) {
  const auto t0 = Clock::now();
  auto scan = oracle::scan_generators(Scheme(g));
  return {g, std::move(scan), seconds_since(t0)};
}

struct Tally {
  std::size_t points = 0, degree_mismatches = 0, cardinality_mismatches = 0;
  std::string first_degree_mismatch, first_cardinality_mismatch;

  void add(const GridCheck& c) {
    for (const auto& pg : c.scan.points) {
      ++points;
      const auto formula = separator_degrees(c.grid, pg.row, pg.col);
      const std::string where = "grid " + std::to_string(c.grid.rows()) + "x" + std::to_string(c.grid.cols()) +
                                " point (" + std::to_string(pg.row + 1) + "," + std::to_string(pg.col + 1) + ")";
      if (formula.degrees != pg.degrees && degree_mismatches++ == 0) first_degree_mismatch = where;
      if ((pg.degrees.size() != pg.multiplicity || formula.degrees.size() != pg.multiplicity) &&
          cardinality_mismatches++ == 0)
        first_cardinality_mismatch = where;
    }
  }
};

std::vector<IntRow> span_rows(const std::vector<IntRow>& a, const std::vector<IntRow>& b) {
  auto all = a;
  all.insert(all.end(), b.begin(), b.end());
  return all;
}

}  // namespace

int main() {
  const auto example = fixtures::example_grid();

  report(1, "S_Z of the example grid is the 17-tuple multiset and the grid is ACM", [&] {
    Outcome o;
    const std::multiset<RowTuple> expected{
        {5, 4, 2, 2}, {4, 3, 1, 1}, {3, 2, 0, 0}, {2, 1, 0, 0}, {1, 0, 0, 0}, {5, 3, 2, 1},
        {4, 2, 1, 0}, {3, 1, 0, 0}, {2, 0, 0, 0}, {1, 0, 0, 0}, {4, 3, 1, 0}, {3, 2, 0, 0},
        {2, 1, 0, 0}, {1, 0, 0, 0}, {2, 1, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}};
    SzSet sz;
    AcmVerdict verdict;
    const double t = best_time(5, [&] {
      sz = build_sz(example);
      verdict = is_acm(example);
    });
    std::multiset<RowTuple> got;
    for (const auto& e : sz) got.insert(e.tuple);
    o.require(got == expected, "S_Z differs from the expected multiset");
    o.require(verdict.acm, "is_acm returned false");
    o.require(t < 1e-3, "took " + format_seconds(t));
    o.detail = o.pass ? "17 tuples, call " + format_seconds(t) : o.detail;
    return o;
  });

  report(2, "separator degrees at (3,2) are (3,7) (6,4) (10,2) with a=(11,7,4), b=(8,5,3)", [&] {
    Outcome o;
    SeparatorDegreeSet degs;
    TruncatedSums sums;
    const double t = best_time(5, [&] {
      degs = separator_degrees(example, 2, 1);
      sums = truncated_sums(example, 2, 1);
    });
    o.require(degs.degrees == BidegreeList{{3, 7}, {6, 4}, {10, 2}}, "degrees " + degs.to_string());
    o.require(sums.a_seq == std::vector<std::size_t>{11, 7, 4}, "a sequence differs");
    o.require(sums.b_seq == std::vector<std::size_t>{8, 5, 3}, "b sequence differs");
    o.require(t < 1e-3, "took " + format_seconds(t));
    o.detail = o.pass ? "call " + format_seconds(t) : o.detail;
    return o;
  });

  report(3, "separator forms at (3,2) factor as expected and pass is_separator", [&] {
    Outcome o;
    const auto t0 = Clock::now();
    const Scheme scheme(example);
    const auto forms = separator_forms(scheme, 2, 1);
    const std::vector<std::pair<std::string, Bidegree>> expected{
        {"L_P1^2 L_P2 L_Q1^4 L_Q2^2 L_Q3", {3, 7}},
        {"L_P1^3 L_P2^2 L_P3 L_Q1^3 L_Q2", {6, 4}},
        {"L_P1^4 L_P2^3 L_P3^2 L_P4 L_Q1^2", {10, 2}}};
    o.require(forms.size() == 3, "expected three forms");
    for (std::size_t l = 0; l < std::min<std::size_t>(forms.size(), 3); ++l) {
      o.require(forms[l].factored() == expected[l].first, "form " + std::to_string(l) + " is " + forms[l].factored());
      o.require(forms[l].form.bidegree() == expected[l].second, "form " + std::to_string(l) + " has wrong bidegree");
      o.require(oracle::is_separator(scheme, 2, 1, forms[l].form), "form " + std::to_string(l) + " rejected");
    }
    const double t = seconds_since(t0);
    o.require(t < 5, "took " + format_seconds(t));
    return o;
  });

  std::vector<GridCheck> exhaustive, random;
  report(4, "oracle generator degrees equal the formula (exhaustive a,b<=3, m<=2; 25 random a,b<=4, m<=3)", [&] {
    Outcome o;
    const auto exhaustive_start = Clock::now();
    std::size_t enumerated = 0;
    for (const auto& g : oracle::all_grids(3, 3, 2)) {
      ++enumerated;
      if (is_acm(g)) exhaustive.push_back(scan_grid(g));
    }
    const double exhaustive_seconds = seconds_since(exhaustive_start);

    std::mt19937_64 rng(20260101);
    std::set<std::vector<RowTuple>> seen;
    while (random.size() < 25) {
      auto g = oracle::random_acm_grid(rng, 4, 4, 3);
      if (g.rows() * g.cols() < 6 || !seen.insert(g.data()).second) continue;
      random.push_back(scan_grid(g));
    }

    Tally ex, rnd;
    for (const auto& c : exhaustive) ex.add(c);
    for (const auto& c : random) rnd.add(c);
    double slowest = 0;
    for (const auto& c : random) slowest = std::max(slowest, c.seconds);
    o.require(ex.degree_mismatches == 0, "exhaustive mismatch at " + ex.first_degree_mismatch);
    o.require(rnd.degree_mismatches == 0, "random mismatch at " + rnd.first_degree_mismatch);
    o.require(exhaustive_seconds < 15 * 60, "exhaustive run took " + format_seconds(exhaustive_seconds));
    o.require(slowest < 120, "slowest random grid took " + format_seconds(slowest));
    if (o.pass)
      o.detail = std::to_string(enumerated) + " grids enumerated, " + std::to_string(exhaustive.size()) + " ACM, " +
                 std::to_string(ex.points) + " points in " + format_seconds(exhaustive_seconds) + "; random: " +
                 std::to_string(rnd.points) + " points, slowest grid " + format_seconds(slowest);
    return o;
  });

  report(5, "every degree set has exactly m elements on the criterion 4 instances", [&] {
    Outcome o;
    o.require(!exhaustive.empty() && random.size() == 25, "criterion 4 pool missing");
    Tally t;
    for (const auto& c : exhaustive) t.add(c);
    for (const auto& c : random) t.add(c);
    o.require(t.cardinality_mismatches == 0, "size differs at " + t.first_cardinality_mismatch);
    if (o.pass) o.detail = std::to_string(t.points) + " points";
    return o;
  });

  report(6, "Hilbert update rule matches the oracle for the dropped scheme", [&] {
    Outcome o;
    o.require(random.size() >= 10, "criterion 4 pool missing");
    if (!o.pass) return o;
    auto check = [&](const MultiplicityGrid& g, std::size_t i, std::size_t j, const Bidegree& window) {
      const Scheme scheme(g);
      const auto hz = oracle::hilbert_function(scheme, window);
      const auto updated = hilbert_update(hz, separator_degrees(g, i, j));
      const auto direct = oracle::hilbert_function(scheme.fat_points_dropping(i, j), window);
      o.require(updated == direct, "differs for point (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    };
    check(example, 2, 1, {12, 9});
    std::mt19937_64 pick(6);
    for (std::size_t k = 0; k < 10; ++k) {
      const auto& g = random[k].grid;
      const auto support = g.support();
      const auto [i, j] = support[std::uniform_int_distribution<std::size_t>(0, support.size() - 1)(pick)];
      check(g, i, j, oracle::default_generator_window(g));
    }
    if (o.pass) o.detail = "example on (0..12)x(0..9) and 10 random grids";
    return o;
  });

  report(7, "ruling schemes: predicate-true cells have ideal dimension 0 (b<=4, m<=3, bidegrees <= (6,8))", [&] {
    Outcome o;
    std::size_t schemes = 0, cells = 0, zero_cells = 0, literal_only = 0;
    for (const auto& g : oracle::all_grids(1, 4, 3)) {
      ++schemes;
      const auto mults = g.row(0);
      const Multiplicity top = *std::max_element(mults.begin(), mults.end());
      const auto points = Scheme(g).fat_points();
      for (std::size_t i = 0; i <= 6; ++i)
        for (std::size_t j = 0; j <= 8; ++j) {
          ++cells;
          const bool predicate = oracle::ruling_zero_predicate(mults, {i, j});
          const std::size_t dim = oracle::ideal_piece_dim(points, {i, j});
          if (predicate) {
            ++zero_cells;
            o.require(dim == 0, "nonzero piece at (" + std::to_string(i) + "," + std::to_string(j) + ")");
          }
          bool literal = true;
          for (Multiplicity l = 0; l < top; ++l) {
            std::size_t c = 0;
            for (auto m : mults) c += m > l ? m - l : 0;
            if (Bidegree{i, j}.dominates({l, c})) literal = false;
          }
          if (literal && !predicate) {
            ++literal_only;
            o.require(i >= top && dim > 0, "unexpected literal-only cell");
          }
        }
    }
    if (o.pass)
      o.detail = std::to_string(schemes) + " schemes, " + std::to_string(zero_cells) + "/" + std::to_string(cells) +
                 " predicate-true cells all zero; " + std::to_string(literal_only) +
                 " cells with i >= m where l < m alone would misfire (L_P^m lies there)";
    return o;
  });

  report(8, "canonicalization restores the example grid; is_acm survives 50 random permutations", [&] {
    Outcome o;
    o.require(canonicalize(fixtures::shuffled_grid()).grid == example, "canonical form differs");
    std::mt19937_64 perm(8);
    for (int n = 0; n < 50; ++n) {
      const auto g = example.permuted(shuffled(example.rows(), perm), shuffled(example.cols(), perm));
      o.require(is_acm(g).acm, "permuted grid judged non-ACM");
      o.require(canonicalize(g).grid == example, "permuted grid canonicalizes differently");
    }
    return o;
  });

  report(9, "no bound violations on the canonical forms of the criterion 4 grids", [&] {
    Outcome o;
    o.require(!exhaustive.empty() && random.size() == 25, "criterion 4 pool missing");
    std::size_t checked = 0;
    for (const auto& c : exhaustive) {
      ++checked;
      o.require(check_multiplicity_bounds(canonicalize(c.grid).grid).empty(), "violation found");
    }
    for (const auto& c : random) {
      ++checked;
      o.require(check_multiplicity_bounds(canonicalize(c.grid).grid).empty(), "violation in a random grid");
    }
    if (o.pass) o.detail = std::to_string(checked) + " grids";
    return o;
  });

  report(10, "derivative-condition kernels equal span-constructed pieces (m<=4, bidegrees <= (5,5))", [&] {
    Outcome o;
    const auto t0 = Clock::now();
    const std::vector<PointPair> points{{ProjectivePoint(1, 0), ProjectivePoint(1, 0)},
                                        {ProjectivePoint(0, 1), ProjectivePoint(1, 1)},
                                        {ProjectivePoint(3, 2), ProjectivePoint(Rational(-5, 7), 1)}};
    std::size_t pieces = 0;
    for (const auto& pt : points)
      for (Multiplicity m = 1; m <= 4; ++m)
        for (std::size_t i = 0; i <= 5; ++i)
          for (std::size_t j = 0; j <= 5; ++j) {
            const Bidegree d{i, j};
            const auto kernel = oracle::ideal_piece_basis({FatPoint{0, 0, pt, m}}, d).basis;
            const auto span = oracle::ideal_piece_basis_by_span(pt, m, d).basis;
            const std::size_t cols = monomial_count(d);
            const bool same = kernel.size() == span.size() && rank(kernel, cols) == kernel.size() &&
                              rank(span_rows(kernel, span), cols) == kernel.size();
            o.require(same, "mismatch for m=" + std::to_string(m) + " at " + d.to_string());
            ++pieces;
          }
    const double t = seconds_since(t0);
    o.require(t < 60, "took " + format_seconds(t));
    if (o.pass) o.detail = std::to_string(pieces) + " pieces";
    return o;
  });

  std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
