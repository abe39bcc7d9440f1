#include <random>

#include "doctest.h"
#include "fatpts/algebra/elimination.hpp"
#include "fatpts/core/errors.hpp"
#include "fatpts/oracle/enumerate.hpp"
#include "fatpts/oracle/oracle.hpp"
#include "fatpts/separators/separators.hpp"
#include "fixtures.hpp"

using namespace fatpts;
using namespace fatpts::oracle;

namespace {

FatPointSet single(Multiplicity m, PointPair pt = {ProjectivePoint(1, 2), ProjectivePoint(3, 1)}) {
  return {FatPoint{0, 0, pt, m}};
}

bool same_span(const std::vector<IntRow>& a, const std::vector<IntRow>& b, std::size_t cols) {
  std::vector<IntRow> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return rank(a, cols) == a.size() && rank(b, cols) == b.size() && rank(both, cols) == a.size() &&
         a.size() == b.size();
}

}  // namespace

TEST_CASE("ideal piece dimensions") {
  CHECK(ideal_piece_dim(single(1), {1, 1}) == 3);
  CHECK(ideal_piece_dim(single(2), {1, 1}) == 1);
  CHECK(ideal_piece_dim(Scheme(fixtures::example_grid()).fat_points(), {0, 0}) == 0);
  CHECK(ideal_piece_dim({}, {2, 1}) == 6);
  const auto basis = ideal_piece_basis(single(2), {1, 1});
  REQUIRE(basis.basis.size() == 1);
  CHECK(basis.bidegree == Bidegree{1, 1});
}

TEST_CASE("pieces by span") {
  const PointPair pt{ProjectivePoint(1, 2), ProjectivePoint(1, 0)};
  const auto y = ideal_piece_basis_by_span(pt, 1, {0, 1});
  REQUIRE(y.basis.size() == 1);
  CHECK(y.basis[0] == IntRow{0, 1});

  const auto lplq = ideal_piece_basis_by_span(pt, 2, {1, 1});
  REQUIRE(lplq.basis.size() == 1);
  const auto expected = line_through_first(pt.p) * line_through_second(pt.q);
  CHECK(same_span(lplq.basis, {primitive_integer_row(expected.coefficient_vector())}, 4));

  const auto lq2 = ideal_piece_basis_by_span(pt, 2, {0, 2});
  REQUIRE(lq2.basis.size() == 1);
  CHECK(same_span(lq2.basis, {primitive_integer_row(power(line_through_second(pt.q), 2).coefficient_vector())}, 3));
}

TEST_CASE("derivative kernels match spans") {
  const std::vector<PointPair> points{{ProjectivePoint(1, 0), ProjectivePoint(0, 1)},
                                      {ProjectivePoint(2, 3), ProjectivePoint(Rational(-1, 2), 1)}};
  for (const auto& pt : points)
    for (Multiplicity m = 1; m <= 3; ++m)
      for (std::size_t i = 0; i <= 4; ++i)
        for (std::size_t j = 0; j <= 4; ++j) {
          const Bidegree d{i, j};
          CHECK(same_span(ideal_piece_basis(single(m, pt), d).basis, ideal_piece_basis_by_span(pt, m, d).basis,
                          monomial_count(d)));
        }
}

TEST_CASE("hilbert functions") {
  const auto one = hilbert_function(single(1), {3, 3});
  for (std::size_t i = 0; i <= 3; ++i)
    for (std::size_t j = 0; j <= 3; ++j) CHECK(one.at(i, j) == 1);

  const auto two = hilbert_function(single(2), {2, 2});
  CHECK(two.at(0, 0) == 1);
  CHECK(two.at(1, 0) == 2);
  CHECK(two.at(0, 1) == 2);
  CHECK(two.at(1, 1) == 3);
  CHECK(two.at(2, 2) == 3);

  const auto ruling = hilbert_function(Scheme(MultiplicityGrid({{1, 1}})), {3, 3});
  CHECK(ruling.at(1, 0) == 1);
  for (std::size_t j = 1; j <= 3; ++j) CHECK(ruling.at(0, j) == 2);

  const auto ex = hilbert_function(Scheme(fixtures::example_grid()), {6, 6});
  for (std::size_t i = 0; i <= 6; ++i)
    for (std::size_t j = 0; j <= 6; ++j) {
      if (i > 0) CHECK(ex.at(i - 1, j) <= ex.at(i, j));
      if (j > 0) CHECK(ex.at(i, j - 1) <= ex.at(i, j));
    }
  CHECK(ex.at(0, 0) == 1);
}

TEST_CASE("is_separator") {
  const Scheme scheme(fixtures::example_grid());
  for (const auto& f : separator_forms(scheme, 2, 1)) CHECK(is_separator(scheme, 2, 1, f.form));
  CHECK_FALSE(is_separator(scheme, 2, 1, BihomForm::constant(1)));
  const auto f = separator_forms(scheme, 2, 1)[0].form;
  CHECK_FALSE(is_separator(scheme, 2, 1, f * scheme.row_line(2)));
  CHECK_FALSE(is_separator(scheme, 1, 1, f));
  CHECK_THROWS_AS(is_separator(scheme, 2, 1, BihomForm({1, 1})), InvalidInput);

  const Scheme pair(MultiplicityGrid({{1, 1}}));
  CHECK(is_separator(pair, 0, 0, pair.col_line(1)));
  CHECK_FALSE(is_separator(pair, 0, 0, pair.col_line(0)));
}

TEST_CASE("minimal generator degrees") {
  CHECK(minimal_generator_degrees(Scheme(MultiplicityGrid({{1, 1}, {1, 1}})), 0, 0).degrees == BidegreeList{{1, 1}});
  CHECK(minimal_generator_degrees(Scheme(MultiplicityGrid({{2, 1}})), 0, 0).degrees == BidegreeList{{0, 2}, {1, 0}});
  CHECK(minimal_generator_degrees(Scheme(MultiplicityGrid(std::vector<RowTuple>{{3}})), 0, 0).degrees ==
        BidegreeList{{0, 2}, {1, 1}, {2, 0}});
  CHECK_THROWS_AS(minimal_generator_degrees(Scheme(MultiplicityGrid({{1, 0}, {1, 1}})), 0, 1), PointNotInSupport);
  CHECK_THROWS_AS(minimal_generator_degrees(Scheme(fixtures::example_grid()), 2, 1, {Bidegree{4, 4}}), WindowError);
}

TEST_CASE("projected and direct scans agree") {
  std::mt19937_64 rng(5);
  std::vector<MultiplicityGrid> grids{MultiplicityGrid({{2, 1}, {1, 1}}), MultiplicityGrid({{1, 0}, {0, 1}}),
                                      MultiplicityGrid({{2, 0, 1}, {0, 1, 1}})};
  for (int n = 0; n < 4; ++n) grids.push_back(random_acm_grid(rng, 3, 3, 2));
  for (const auto& g : grids) {
    const Scheme s(g);
    const auto p = scan_generators(s, {std::nullopt, GeneratorMethod::Projected});
    const auto d = scan_generators(s, {std::nullopt, GeneratorMethod::Direct});
    REQUIRE(p.points.size() == d.points.size());
    for (std::size_t k = 0; k < p.points.size(); ++k) CHECK(p.points[k].degrees == d.points[k].degrees);
  }
}

TEST_CASE("non-ACM schemes can need more separators") {
  const Scheme s(MultiplicityGrid({{1, 0}, {0, 1}}));
  for (const auto& pg : scan_generators(s).points) CHECK(pg.degrees == BidegreeList{{0, 1}, {1, 0}});
  const auto hz = scan_generators(s).hilbert;
  REQUIRE(hz);
  CHECK(hz->at(1, 1) == 2);
}

TEST_CASE("generator counts vanish below the formula degrees") {
  const Scheme s(MultiplicityGrid({{3, 2}, {2, 1}}));
  const auto scan = scan_generators(s);
  for (const auto& pg : scan.points) {
    const auto degs = separator_degrees(s.grid(), pg.row, pg.col);
    for (std::size_t r = 0; r <= scan.window.i; ++r)
      for (std::size_t c = 0; c <= scan.window.j; ++c) {
        const bool above = std::any_of(degs.degrees.begin(), degs.degrees.end(),
                                       [&](const Bidegree& d) { return Bidegree{r, c}.dominates(d); });
        if (!above) CHECK(scan.hilbert->at(r, c) == pg.dropped_hilbert->at(r, c));
      }
  }
}

TEST_CASE("ruling zero predicate") {
  CHECK(ruling_zero_predicate({2, 1}, {0, 2}));
  CHECK(ideal_piece_dim(Scheme(MultiplicityGrid({{2, 1}})).fat_points(), {0, 2}) == 0);
  CHECK_FALSE(ruling_zero_predicate({2, 1}, {1, 1}));
  CHECK(ruling_zero_predicate({1, 1, 1}, {0, 2}));
  CHECK_FALSE(ruling_zero_predicate({2, 1}, {2, 0}));
  for (const auto& mults : std::vector<std::vector<Multiplicity>>{{2, 1}, {3, 1, 1}, {1, 2, 2}}) {
    const auto pts = Scheme(MultiplicityGrid(std::vector<RowTuple>{mults})).fat_points();
    for (std::size_t i = 0; i <= 4; ++i)
      for (std::size_t j = 0; j <= 6; ++j)
        CHECK(ruling_zero_predicate(mults, {i, j}) == (ideal_piece_dim(pts, {i, j}) == 0));
  }
}

TEST_CASE("multiply_by_variable") {
  const Bidegree d{1, 1};
  const auto f = BihomForm::variable(Variable::X0) * BihomForm::variable(Variable::Y1) -
                 BihomForm::variable(Variable::X1) * BihomForm::variable(Variable::Y0);
  const auto v = primitive_integer_row(f.coefficient_vector());
  for (auto var : {Variable::X0, Variable::X1, Variable::Y0, Variable::Y1}) {
    const auto g = f * BihomForm::variable(var);
    CHECK(multiply_by_variable(v, d, var) == primitive_integer_row(g.coefficient_vector()));
  }
  CHECK_THROWS_AS(multiply_by_variable(v, {2, 1}, Variable::X0), InvalidInput);
}

TEST_CASE("enumeration") {
  const auto all = all_grids(2, 2, 1);
  CHECK(all.size() == 1 + 1 + 1 + 7);
  std::mt19937_64 rng(1);
  for (int n = 0; n < 20; ++n) {
    const auto g = random_acm_grid(rng, 4, 4, 3);
    CHECK(is_acm(g));
    CHECK(g.rows() <= 4);
    CHECK(g.max_entry() <= 3);
  }
}
