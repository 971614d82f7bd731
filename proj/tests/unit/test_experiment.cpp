#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "sonc/circuit.hpp"
#include "sonc/covers.hpp"
#include "sonc/error.hpp"
#include "sonc/experiment.hpp"

using namespace sonc;

namespace {

const SampleSet& samples() {
  static const SampleSet s = [] {
    SamplePlan p;
    p.target = 20000;
    p.seed = 31;
    return sample_case4(p);
  }();
  return s;
}

const CoverHitMatrix& matrix() {
  static const CoverHitMatrix m = evaluate_covers(samples());
  return m;
}

// Hand-built hit matrix over covers {1, 2, 3}.
CoverHitMatrix synthetic(const std::vector<std::uint16_t>& masks) {
  CoverHitMatrix m;
  m.cover_ids = {1, 2, 3};
  m.masks = masks;
  for (auto mask : masks) {
    for (std::size_t i = 0; i < 3; ++i) m.counts[i] += (mask >> i) & 1u;
    m.union_count += mask != 0;
  }
  return m;
}

bool has_edge(const std::vector<ContainmentEdge>& edges, int from, int to) {
  return std::any_of(edges.begin(), edges.end(), [&](const auto& e) { return e.from == from && e.to == to; });
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("hit masks agree with the generic Theta-sum") {
  const auto& m = matrix();
  REQUIRE(m.total() == samples().size());
  REQUIRE(m.cover_ids.size() == 16);
  std::array<std::uint64_t, 16> recount{};
  std::uint64_t unions = 0;
  for (std::size_t i = 0; i < m.total(); ++i) {
    const auto h = case4_coefficients(samples().samples[i].eta);
    for (std::size_t slot = 0; slot < 16; ++slot) {
      const auto& cover = cover_fixture(m.cover_ids[slot]);
      // Independent evaluation through the generic circuit number.
      const WeightedCover single({cover}, {std::vector<double>(10, 1.0)});
      const double theta = weighted_theta_sum(single, h.coeffs);
      const bool hit = (m.masks[i] >> slot) & 1u;
      if (std::abs(theta + h.c_m) > 1e-9 * std::abs(h.c_m)) CHECK(hit == (theta >= -h.c_m));
      recount[slot] += hit;
    }
    unions += m.masks[i] != 0;
  }
  for (std::size_t slot = 0; slot < 16; ++slot) CHECK(recount[slot] == m.counts[slot]);
  CHECK(unions == m.union_count);
  CHECK(m.union_ratio() >= m.ratio(15));
  CHECK_THROWS_AS(m.slot_of(17), DomainError);
  CHECK(m.sigma(0.5) == doctest::Approx(std::sqrt(0.25 / 20000)));
}

TEST_CASE("thread count does not change the hit matrix") {
  CHECK(evaluate_covers(samples(), 4).masks == matrix().masks);
}

TEST_CASE("comparison against a baseline") {
  const auto& m = matrix();
  const auto n = m.total();
  const auto rows = compare_vs_baseline(m, 9);
  CHECK(rows.size() == 16);
  for (const auto& r : rows) {
    CHECK(r.versus == 9);
    CHECK(static_cast<std::int64_t>(r.plus) - static_cast<std::int64_t>(r.minus) ==
          static_cast<std::int64_t>(m.count(r.cover)) - static_cast<std::int64_t>(m.count(9)));
    std::uint64_t both = 0, neither = 0;
    const auto a = m.slot_of(r.cover), b = m.slot_of(9);
    for (auto mask : m.masks) {
      both += ((mask >> a) & 1u) && ((mask >> b) & 1u);
      neither += !((mask >> a) & 1u) && !((mask >> b) & 1u);
    }
    CHECK(r.zero == neither);
    CHECK(r.plus + r.minus + both + neither == n);
    if (r.cover == 9) {
      CHECK(r.plus == 0);
      CHECK(r.minus == 0);
    }
  }
  CHECK(table2_value(1, 100) == doctest::Approx(1.0));
  CHECK(table2_value(25, 10000) == doctest::Approx(0.25));
  CHECK_THROWS_AS(compare_vs_baseline(m, 20), DomainError);
}

TEST_CASE("containment on a synthetic hit matrix") {
  // Cover 1 = cover 2 as sets, both inside cover 3; one point only in cover 3.
  const auto r = containment_analysis(synthetic({0b111, 0b111, 0b100, 0b000}));
  CHECK(r.is_contained(1, 2));
  CHECK(r.is_contained(2, 1));
  CHECK(r.is_contained(1, 3));
  CHECK_FALSE(r.is_contained(3, 1));
  CHECK(r.violations(3, 1) == 1);
  CHECK(r.unique_counts == std::vector<std::uint64_t>{0, 0, 1});
  REQUIRE(r.nodes.size() == 2);
  REQUIRE(r.hasse.size() == 1);
  CHECK(r.nodes[r.hasse[0].first].covers == std::vector<int>{1, 2});
  CHECK(r.nodes[r.hasse[0].second].covers == std::vector<int>{3});
}

TEST_CASE("Hasse edges skip implied relations") {
  // A chain 1 < 2 < 3: the edge 1 -> 3 is contained but not a cover relation.
  const auto r = containment_analysis(synthetic({0b111, 0b110, 0b100}));
  CHECK(has_edge(r.contained, 1, 3));
  CHECK(r.hasse.size() == 2);
  for (const auto& [lo, hi] : r.hasse) {
    CHECK_FALSE((r.nodes[lo].covers == std::vector<int>{1} && r.nodes[hi].covers == std::vector<int>{3}));
  }
}

TEST_CASE("threshold and near band") {
  std::vector<std::uint16_t> masks(20000000 / 1000, 0b011);
  masks.push_back(0b001);
  auto m = synthetic(masks);
  const auto strict = containment_analysis(m, 0);
  CHECK_FALSE(strict.is_contained(1, 2));
  CHECK(strict.near_band == 1);  // ceil(1e-7 * 20001)
  CHECK(has_edge(strict.near, 1, 2));
  CHECK(containment_analysis(m, 1).is_contained(1, 2));
}

TEST_CASE("linear homotopy") {
  const auto& m = matrix();
  const auto c = linear_homotopy(samples(), 4, 9, 0.05);
  REQUIRE(c.points.size() == 21);
  CHECK(c.points.front().hits == m.count(4));
  CHECK(c.points.back().hits == m.count(9));
  CHECK(c.points[10].t == doctest::Approx(0.5));
  std::uint64_t either = 0;
  for (auto mask : m.masks) either += ((mask >> m.slot_of(4)) | (mask >> m.slot_of(9))) & 1u;
  for (const auto& p : c.points) CHECK(p.hits <= either);
  CHECK(linear_homotopy(samples(), 4, 9, 0.05, 3).points.back().hits == c.points.back().hits);
}

TEST_CASE("homotopy hits match the weighted cover Theta-sum") {
  const auto c = linear_homotopy(samples(), 10, 12, 0.25);
  const double t = c.points[1].t;
  const WeightedCover w = WeightedCover::uniform({cover_fixture(10), cover_fixture(12)},
                                                 std::vector<double>{1 - t, t});
  std::uint64_t hits = 0, ties = 0;
  for (const auto& s : samples().samples) {
    const auto h = case4_coefficients(s.eta);
    const double theta = weighted_theta_sum(w, h.coeffs);
    const double mixed = (1 - t) * cover_theta_sum(cover_fixture(10), h.coeffs) +
                         t * cover_theta_sum(cover_fixture(12), h.coeffs);
    CHECK(oracle::rel_err(theta, mixed) <= 1e-12);
    hits += theta >= -h.c_m;
    ties += std::abs(theta + h.c_m) <= 1e-9 * std::abs(h.c_m);
  }
  CHECK(c.points[1].hits + ties >= hits);
  CHECK(hits + ties >= c.points[1].hits);
}

TEST_CASE("simplicial homotopy") {
  const auto& m = matrix();
  const auto c = simplicial_homotopy(samples(), 4, 9, 15, 1.0 / 16);
  REQUIRE(c.points.size() == 153);
  for (const auto& p : c.points) {
    CHECK(p.s + p.t <= 1 + 1e-12);
    if (p.s == 1.0) CHECK(p.hits == m.count(4));
    if (p.t == 1.0) CHECK(p.hits == m.count(9));
    if (p.s == 0.0 && p.t == 0.0) CHECK(p.hits == m.count(15));
  }
}

TEST_CASE("grid steps") {
  CHECK(grid_steps(0.05) == 20);
  CHECK(grid_steps(1.0 / 16) == 16);
  CHECK(grid_steps(1.0) == 1);
  CHECK_THROWS_AS(grid_steps(0.3), DomainError);
  CHECK_THROWS_AS(grid_steps(0.0), DomainError);
  CHECK_THROWS_AS(grid_steps(-0.5), DomainError);
}

TEST_CASE("grid minimum of a circuit polynomial") {
  // x1^2 + x3 + x1^4 x3^2 - c x1^2 x3 has minimum zero at (1,1) for c = 3.
  HexCoefficients h;
  h.coeffs[1] = h.coeffs[3] = h.coeffs[5] = 1.0;
  h.c_m = -3.0;
  const auto g = grid_minimum(h, 1e-4, 1e4, 9);
  CHECK(std::abs(g.relative) <= 1e-12);
  CHECK(g.x1 == doctest::Approx(1.0));
  h.c_m = -3.3;
  CHECK(grid_minimum(h, 1e-4, 1e4, 9).relative < 0.0);
  h.c_m = -2.0;
  CHECK(grid_minimum(h, 1e-4, 1e4, 9).relative > 0.0);
}

}  // TEST_SUITE
