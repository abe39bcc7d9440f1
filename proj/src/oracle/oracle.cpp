#include "fatpts/oracle/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "fatpts/algebra/conditions.hpp"
#include "fatpts/algebra/elimination.hpp"
#include "fatpts/core/errors.hpp"

namespace fatpts::oracle {

namespace {

using IntPoint = std::pair<Integer, Integer>;

struct PointCoords {
  IntPoint p;
  IntPoint q;
};

PointCoords coords_of(const FatPoint& fp) {
  return {fp.point.p.integer_coordinates(), fp.point.q.integer_coordinates()};
}

/// Orders with alpha + beta == total, alpha ascending.
std::vector<DerivativeOrder> orders_of_total(unsigned total) {
  std::vector<DerivativeOrder> out;
  for (unsigned a = 0; a <= total; ++a) out.push_back({a, total - a});
  return out;
}

void append_rows(std::vector<IntRow>& out, const PointCoords& c, unsigned below, const Bidegree& d,
                 unsigned from = 0) {
  for (unsigned t = from; t < below; ++t)
    for (auto o : orders_of_total(t)) out.push_back(derivative_condition(c.p, c.q, o, d));
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) s += a[k] * b[k];
  return s;
}

BidegreeList sorted(BidegreeList v) {
  std::sort(v.begin(), v.end());
  return v;
}

void check_window_recount(std::vector<PointGenerators>& points, const Bidegree& window) {
  for (auto& pg : points) {
    const auto inside = static_cast<std::size_t>(std::count_if(
        pg.degrees.begin(), pg.degrees.end(), [&](const Bidegree& d) { return window.dominates(d); }));
    if (inside != pg.degrees.size())
      throw WindowError("generator search window " + window.to_string() + " too small for point (" +
                        std::to_string(pg.row + 1) + "," + std::to_string(pg.col + 1) +
                        "): the enlarged recount found " + std::to_string(pg.degrees.size()) +
                        " generators, the window " + std::to_string(inside));
  }
}

// ---- projected method ------------------------------------------------------

/// Column space of diag(1/scale) * R inside Q^m, as a canonical basis.
std::vector<RationalVector> residual_column_space(const std::vector<FractionFreeEchelon::Residual>& res,
                                                  std::size_t cols) {
  const std::size_t m = res.size();
  FractionFreeEchelon span(m);
  for (std::size_t c = 0; c < cols && span.rank() < m; ++c) {
    IntRow column(m);
    bool nonzero = false;
    for (std::size_t a = 0; a < m; ++a) {
      column[a] = res[a].row[c];
      nonzero = nonzero || sgn(column[a]) != 0;
    }
    if (nonzero) span.insert(std::move(column));
  }
  std::vector<RationalVector> vecs;
  for (const auto& row : span.pivot_rows()) {
    RationalVector v(m);
    for (std::size_t a = 0; a < m; ++a) v[a] = Rational(row[a]) / res[a].scale;
    vecs.push_back(std::move(v));
  }
  return canonical_basis(std::move(vecs), m);
}

struct CellResult {
  std::size_t h_dropped = 0;  // H_{Z'}(r,s)
  std::vector<RationalVector> image;  // V(r,s)
};

class ProjectedCell {
 public:
  ProjectedCell(const FatPointSet& points, const std::vector<PointCoords>& coords,
                const std::vector<std::size_t>& targets, const Bidegree& d)
      : points_(points), coords_(coords), targets_(targets), d_(d), results_(targets.size()) {
    top_rows_.resize(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
      const unsigned m = points[k].multiplicity;
      append_rows(top_rows_[k], coords[k], m, d, m - 1);
    }
  }

  std::vector<CellResult> run() {
    FractionFreeEchelon base(monomial_count(d_));
    std::vector<IntRow> low;
    for (std::size_t k = 0; k < points_.size(); ++k) append_rows(low, coords_[k], points_[k].multiplicity - 1, d_);
    for (auto& r : low) insert(base, r);
    // Top rows of points that are not targets belong to every Z'.
    std::vector<bool> is_target(points_.size(), false);
    for (auto t : targets_) is_target[t] = true;
    for (std::size_t k = 0; k < points_.size(); ++k)
      if (!is_target[k])
        for (auto& r : top_rows_[k]) insert(base, r);
    if (!targets_.empty()) solve(std::move(base), 0, targets_.size());
    return std::move(results_);
  }

 private:
  static void insert(FractionFreeEchelon& e, const IntRow& r) {
    if (e.rank() < e.cols()) e.insert(r);
  }

  void add_targets(FractionFreeEchelon& e, std::size_t lo, std::size_t hi) const {
    for (std::size_t t = lo; t < hi; ++t)
      for (const auto& r : top_rows_[targets_[t]]) insert(e, r);
  }

  // Divide and conquer: `e` holds every top row except those of targets
  // [lo, hi).
  void solve(FractionFreeEchelon e, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) {
      std::vector<FractionFreeEchelon::Residual> res;
      for (const auto& r : top_rows_[targets_[lo]]) res.push_back(e.reduce(r));
      results_[lo] = {e.rank(), residual_column_space(res, e.cols())};
      return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    FractionFreeEchelon left = e;
    add_targets(left, mid, hi);
    solve(std::move(left), lo, mid);
    add_targets(e, lo, mid);
    solve(std::move(e), mid, hi);
  }

  const FatPointSet& points_;
  const std::vector<PointCoords>& coords_;
  const std::vector<std::size_t>& targets_;
  Bidegree d_;
  std::vector<std::vector<IntRow>> top_rows_;
  std::vector<CellResult> results_;
};

GeneratorScan scan_projected(const Scheme& scheme, const std::vector<std::size_t>& targets, const Bidegree& window) {
  const auto points = scheme.fat_points();
  std::vector<PointCoords> coords;
  for (const auto& fp : points) coords.push_back(coords_of(fp));
  const Bidegree big{window.i + 2, window.j + 2};

  GeneratorScan scan{window, big, {}, HilbertTable(big)};
  for (auto t : targets)
    scan.points.push_back({points[t].row, points[t].col, points[t].multiplicity, {}, HilbertTable(big)});

  const std::size_t width = big.j + 1;
  // image[target][r * width + s]
  std::vector<std::vector<std::vector<RationalVector>>> image(targets.size(),
                                                              std::vector<std::vector<RationalVector>>((big.i + 1) * width));
  for (std::size_t r = 0; r <= big.i; ++r)
    for (std::size_t s = 0; s <= big.j; ++s) {
      auto cell = ProjectedCell(points, coords, targets, {r, s}).run();
      for (std::size_t t = 0; t < targets.size(); ++t) {
        const std::size_t m = points[targets[t]].multiplicity;
        const std::size_t hz = cell[t].h_dropped + cell[t].image.size();
        if (t == 0)
          scan.hilbert->at(r, s) = hz;
        else if (scan.hilbert->at(r, s) != hz)
          throw std::logic_error("inconsistent Hilbert values across points");
        scan.points[t].dropped_hilbert->at(r, s) = cell[t].h_dropped;

        auto& here = image[t][r * width + s];
        here = std::move(cell[t].image);
        std::vector<RationalVector> lower;
        if (r > 0) for (const auto& v : image[t][(r - 1) * width + s]) lower.push_back(v);
        if (s > 0) for (const auto& v : image[t][r * width + s - 1]) lower.push_back(v);
        const auto generated = canonical_basis(lower, m);
        auto both = here;
        both.insert(both.end(), generated.begin(), generated.end());
        if (canonical_basis(std::move(both), m).size() != here.size())
          throw std::logic_error("multiplication left the projected image; condition frames disagree");
        for (std::size_t g = generated.size(); g < here.size(); ++g) scan.points[t].degrees.push_back({r, s});
      }
    }
  for (auto& pg : scan.points) pg.degrees = sorted(std::move(pg.degrees));
  check_window_recount(scan.points, window);
  return scan;
}

// ---- direct method ---------------------------------------------------------

PointGenerators direct_point(const Scheme& scheme, std::size_t i, std::size_t j, const Bidegree& big) {
  const auto z = scheme.fat_points();
  const auto zp = scheme.fat_points_dropping(i, j);
  PointGenerators out{i, j, scheme.grid().at(i, j), {}, std::nullopt};
  const std::size_t width = big.j + 1;
  std::vector<std::vector<IntRow>> dropped_basis((big.i + 1) * width);
  for (std::size_t r = 0; r <= big.i; ++r)
    for (std::size_t s = 0; s <= big.j; ++s) {
      const Bidegree d{r, s};
      auto bp = ideal_piece_basis(zp, d).basis;
      std::vector<IntRow> spanning;
      if (r > 0)
        for (const auto& v : dropped_basis[(r - 1) * width + s]) {
          spanning.push_back(multiply_by_variable(v, {r - 1, s}, Variable::X0));
          spanning.push_back(multiply_by_variable(v, {r - 1, s}, Variable::X1));
        }
      if (s > 0)
        for (const auto& v : dropped_basis[r * width + s - 1]) {
          spanning.push_back(multiply_by_variable(v, {r, s - 1}, Variable::Y0));
          spanning.push_back(multiply_by_variable(v, {r, s - 1}, Variable::Y1));
        }
      for (auto& v : ideal_piece_basis(z, d).basis) spanning.push_back(std::move(v));
      const std::size_t reached = rank(spanning, monomial_count(d));
      for (std::size_t g = reached; g < bp.size(); ++g) out.degrees.push_back(d);
      dropped_basis[r * width + s] = std::move(bp);
    }
  out.degrees = sorted(std::move(out.degrees));
  return out;
}

}  // namespace

std::vector<IntRow> condition_rows(const FatPointSet& points, const Bidegree& d) {
  std::vector<IntRow> rows;
  for (const auto& fp : points) append_rows(rows, coords_of(fp), fp.multiplicity, d);
  return rows;
}

std::size_t ideal_piece_dim(const FatPointSet& points, const Bidegree& d) {
  return monomial_count(d) - rank(condition_rows(points, d), monomial_count(d));
}

IdealPieceBasis ideal_piece_basis(const FatPointSet& points, const Bidegree& d) {
  FractionFreeEchelon e(monomial_count(d));
  for (auto& r : condition_rows(points, d)) {
    if (e.rank() == e.cols()) break;
    e.insert(std::move(r));
  }
  return {d, e.null_space()};
}

IdealPieceBasis ideal_piece_basis_by_span(const PointPair& point, Multiplicity m, const Bidegree& d) {
  const auto lp = line_through_first(point.p);
  const auto lq = line_through_second(point.q);
  FractionFreeEchelon e(monomial_count(d));
  IdealPieceBasis out{d, {}};
  for (std::size_t u = 0; u <= m; ++u) {
    const std::size_t v = m - u;
    if (u > d.i || v > d.j) continue;
    const auto lead = power(lp, static_cast<unsigned>(u)) * power(lq, static_cast<unsigned>(v));
    const Bidegree rest{d.i - u, d.j - v};
    for (std::size_t k = 0; k < monomial_count(rest); ++k) {
      BihomForm mono(rest);
      mono.add_term(monomial_at(rest, k), 1);
      auto row = primitive_integer_row((lead * mono).coefficient_vector());
      if (e.insert(row)) out.basis.push_back(std::move(row));
    }
  }
  return out;
}

HilbertTable hilbert_function(const FatPointSet& points, const Bidegree& window) {
  HilbertTable h(window);
  for (std::size_t i = 0; i <= window.i; ++i)
    for (std::size_t j = 0; j <= window.j; ++j) h.at(i, j) = monomial_count({i, j}) - ideal_piece_dim(points, {i, j});
  return h;
}

bool is_separator(const Scheme& scheme, std::size_t i, std::size_t j, const BihomForm& f) {
  if (f.is_zero()) throw InvalidInput("the zero form is not a separator");
  const auto& grid = scheme.grid();
  if (!grid.supports(i, j))
    throw PointNotInSupport("point (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") is not in the support");
  const auto coeffs = f.coefficient_vector();
  auto order_vanishes = [&](const PointPair& pt, unsigned total) {
    for (auto o : orders_of_total(total))
      if (dot(derivative_condition(pt, o, f.bidegree()), coeffs) != 0) return false;
    return true;
  };
  for (auto [e, g] : grid.support()) {
    const unsigned m = grid.at(e, g);
    const bool own = e == i && g == j;
    const unsigned required = own ? m - 1 : m;
    for (unsigned t = 0; t < required; ++t)
      if (!order_vanishes(scheme.point(e, g), t)) return false;
    if (own && order_vanishes(scheme.point(e, g), m - 1)) return false;
  }
  return true;
}

Bidegree default_generator_window(const MultiplicityGrid& grid) {
  return {grid.sum_of_row_maxima() + 1, grid.sum_of_column_maxima() + 1};
}

GeneratorScan scan_generators(const Scheme& scheme, const GeneratorOptions& options) {
  return scan_generators(scheme, scheme.grid().support(), options);
}

GeneratorScan scan_generators(const Scheme& scheme, const std::vector<std::pair<std::size_t, std::size_t>>& points,
                              const GeneratorOptions& options) {
  const Bidegree window = options.window.value_or(default_generator_window(scheme.grid()));
  const Bidegree big{window.i + 2, window.j + 2};
  const auto support = scheme.grid().support();
  if (points.empty()) throw InvalidInput("no points to scan");
  std::vector<std::size_t> targets;
  for (auto [i, j] : points) {
    const auto it = std::find(support.begin(), support.end(), std::make_pair(i, j));
    if (it == support.end())
      throw PointNotInSupport("point (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") is not in the support");
    targets.push_back(static_cast<std::size_t>(it - support.begin()));
  }
  if (options.method == GeneratorMethod::Projected) return scan_projected(scheme, targets, window);
  GeneratorScan scan{window, big, {}, std::nullopt};
  for (auto [i, j] : points) scan.points.push_back(direct_point(scheme, i, j, big));
  check_window_recount(scan.points, window);
  return scan;
}

PointGenerators minimal_generator_degrees(const Scheme& scheme, std::size_t i, std::size_t j,
                                          const GeneratorOptions& options) {
  return scan_generators(scheme, {{i, j}}, options).points.front();
}

bool ruling_zero_predicate(const std::vector<Multiplicity>& mults, const Bidegree& d) {
  const Multiplicity top = mults.empty() ? 0 : *std::max_element(mults.begin(), mults.end());
  for (std::size_t ell = 0; ell <= top; ++ell) {
    std::size_t c = 0;
    for (auto m : mults)
      if (m > ell) c += m - ell;
    if (d.dominates({ell, c})) return false;
  }
  return true;
}

IntRow multiply_by_variable(const IntRow& v, const Bidegree& from, Variable var) {
  const bool is_x = var == Variable::X0 || var == Variable::X1;
  const Bidegree to = is_x ? Bidegree{from.i + 1, from.j} : Bidegree{from.i, from.j + 1};
  if (v.size() != monomial_count(from)) throw InvalidInput("vector does not match its bidegree");
  IntRow out(monomial_count(to));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    Monomial m = monomial_at(from, k);
    switch (var) {
      case Variable::X0: ++m.e0; break;
      case Variable::X1: ++m.e1; break;
      case Variable::Y0: ++m.f0; break;
      case Variable::Y1: ++m.f1; break;
    }
    out[monomial_index(to, m)] = v[k];
  }
  return out;
}

}  // namespace fatpts::oracle
