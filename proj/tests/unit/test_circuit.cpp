#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sonc/circuit.hpp"
#include "sonc/covers.hpp"
#include "sonc/dualphos.hpp"
#include "sonc/error.hpp"
#include "sonc/sampling.hpp"
#include "sonc/selftest.hpp"

using namespace sonc;

namespace {

const Simplex kTriangle({{4, 2}, {2, 0}, {0, 1}});
constexpr LatticePoint kM{2, 1};

std::vector<LatticePoint> block_points(const std::vector<std::size_t>& block) {
  std::vector<LatticePoint> v;
  for (auto i : block) v.push_back(hexagon_points().positive[i]);
  return v;
}

}  // namespace

TEST_SUITE("circuit") {

TEST_CASE("circuit numbers of the examples") {
  CHECK(std::abs(circuit_number(CircuitSupport(kTriangle, kM, {1, 1, 1}, -1)) - 3.0) <= 1e-12);
  CHECK(std::abs(circuit_number(CircuitSupport(Simplex({{1, 0}, {3, 2}}), kM, {1, 1}, -1)) - 2.0) <= 1e-12);
  for (auto [a, b, c] : {std::array<double, 3>{2, 5, 7}, {1e-6, 3, 1e4}, {0.25, 0.5, 0.125}}) {
    const double theta = circuit_number(CircuitSupport(kTriangle, kM, {a, b, c}, -1));
    CHECK(oracle::rel_err(theta, 3.0 * std::cbrt(a * b * c)) <= 1e-12);
  }
}

TEST_CASE("nonnegativity threshold of the example circuit") {
  CHECK(is_nonnegative(CircuitSupport(kTriangle, kM, {1, 1, 1}, -3.0)));
  CHECK_FALSE(is_nonnegative(CircuitSupport(kTriangle, kM, {1, 1, 1}, -3.0 - 1e-6)));
  CHECK(is_nonnegative(CircuitSupport(kTriangle, kM, {1, 1, 1}, 5.0)));
}

TEST_CASE("invalid circuits") {
  CHECK_THROWS_WITH_AS(CircuitSupport(Simplex({{0, 0}, {2, 0}, {0, 1}}), kM, {1, 1, 1}, -1),
                       doctest::Contains("not a circuit"), DomainError);
  CHECK_THROWS_AS(CircuitSupport(kTriangle, kM, {1, 0, 1}, -1), DomainError);
  CHECK_THROWS_AS(CircuitSupport(kTriangle, kM, {1, 1}, -1), DomainError);
}

TEST_CASE("the circuit f of the a2-a4-a6 triangle at Case-4 points") {
  SamplePlan plan;
  plan.target = 200;
  plan.seed = 11;
  for (const auto& s : sample_case4(plan).samples) {
    const auto& e = s.eta;
    const auto h = case4_coefficients(e);
    const CircuitSupport f(Simplex({{4, 2}, {2, 0}, {0, 1}}), kM, {h.coeffs[3], h.coeffs[1], h.coeffs[5]}, h.c_m);
    const double P = cm_prefactor(e);
    const double a = ab_values(e).a, b = ab_values(e).b;
    const double rhs = 3.0 * P * std::cbrt(e.K1 * e.K4 * e.K4 * e.k6 * e.k6 * e.k9 * e.k9 * a);
    CHECK(oracle::rel_err(circuit_number(f), rhs) <= 1e-12);
    CHECK(is_nonnegative(f) == (-b * P <= rhs));
  }
}

TEST_CASE("cover Theta-sums with unit coefficients") {
  const std::array<double, 10> ones{1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
  // With unit coefficients each circuit contributes prod lambda_i^(-lambda_i).
  const auto& cc15 = cover_fixture(15);
  double expected = 0.0;
  for (const auto& c : cc15.circuits()) {
    const auto v = block_points(c.vertices);
    REQUIRE(v.size() == 2);
    CHECK(oracle::cross(v[0], v[1], kM) == 0);
    double log_theta = 0.0;
    const bool by_x = v[0].x != v[1].x;
    const double l0 = by_x ? double(v[1].x - kM.x) / (v[1].x - v[0].x) : double(v[1].z - kM.z) / (v[1].z - v[0].z);
    for (double l : {l0, 1.0 - l0}) log_theta -= l * std::log(l);
    expected += std::exp(log_theta);
  }
  // Three midpoint segments (2 each) and two 1/3 : 2/3 segments.
  CHECK(std::abs(expected - (6.0 + 2.0 * std::cbrt(3.0) * std::pow(1.5, 2.0 / 3.0))) <= 1e-12);
  CHECK(std::abs(cover_theta_sum(cc15, ones) - expected) <= 1e-12);

  const auto& cc9 = cover_fixture(9);
  for (const auto& c : cc9.circuits()) {
    const auto v = block_points(c.vertices);
    if (v.size() == 3) {
      for (const auto& [num, den] : oracle::cramer(v, kM)) CHECK(3 * num == den);
    }
  }
  CHECK(std::abs(cover_theta_sum(cc9, ones) - 10.0) <= 1e-12);
}

TEST_CASE("homogeneity and permutation invariance") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  const auto& hp = hexagon_points();
  for (const auto& block : circuit_blocks(hp.positive, hp.negative)) {
    auto v = block_points(block);
    std::vector<double> c;
    for (std::size_t i = 0; i < v.size(); ++i) c.push_back(u(rng));
    const double base = circuit_number(CircuitSupport(Simplex(v), kM, c, -1));
    for (double k : {0.5, 2.0, 10.0}) {
      auto scaled = c;
      for (auto& x : scaled) x *= k;
      CHECK(oracle::rel_err(circuit_number(CircuitSupport(Simplex(v), kM, scaled, -1)), k * base) <= 1e-12);
    }
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    while (std::next_permutation(order.begin(), order.end())) {
      std::vector<LatticePoint> pv;
      std::vector<double> pc;
      for (auto i : order) {
        pv.push_back(v[i]);
        pc.push_back(c[i]);
      }
      CHECK(oracle::rel_err(circuit_number(CircuitSupport(Simplex(pv), kM, pc, -1)), base) <= 1e-12);
    }
  }
  std::array<double, 10> coeffs{};
  for (auto& x : coeffs) x = u(rng);
  for (const auto& cover : hexagon_covers()) {
    auto scaled = coeffs;
    for (auto& x : scaled) x *= 7.0;
    CHECK(oracle::rel_err(cover_theta_sum(cover, scaled), 7.0 * cover_theta_sum(cover, coeffs)) <= 1e-12);
  }
}

TEST_CASE("segment circuits obey AM-GM") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.001, 100.0);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng), b = u(rng);
    const double theta = circuit_number(CircuitSupport(Simplex({{0, 0}, {4, 2}}), kM, {a, b}, -1));
    CHECK(oracle::rel_err(theta, 2.0 * std::sqrt(a * b)) <= 1e-12);
    CHECK(theta <= a + b);
  }
}

TEST_CASE("nonpositive cover coefficients are rejected") {
  std::array<double, 10> c{1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
  c[4] = 0.0;
  CHECK_THROWS_AS(cover_theta_sum(cover_fixture(9), c), DomainError);
  c[4] = -1.0;
  CHECK_THROWS_AS(cover_theta_sum(cover_fixture(15), c), DomainError);
}

TEST_CASE("certified circuits are nonnegative on a log grid") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto& hp = hexagon_points();
  const auto blocks = circuit_blocks(hp.positive, hp.negative);
  std::vector<double> grid;
  for (int i = 0; i < 60; ++i) grid.push_back(std::pow(10.0, -3.0 + 6.0 * i / 59.0));
  int certified = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto v = block_points(blocks[rng() % blocks.size()]);
    std::vector<double> c;
    for (std::size_t i = 0; i < v.size(); ++i) c.push_back(10.0 * (1.0 - u(rng)));
    const double theta = circuit_number(CircuitSupport(Simplex(v), kM, c, -1));
    const CircuitSupport f(Simplex(v), kM, c, -theta * (0.5 + u(rng)));
    if (!is_nonnegative(f)) continue;
    ++certified;
    for (double x1 : grid) {
      for (double x3 : grid) {
        double scale = std::abs(f.negative_coeff() * x1 * x1 * x3);
        for (std::size_t i = 0; i < v.size(); ++i) {
          scale = std::max(scale, c[i] * std::pow(x1, v[i].x) * std::pow(x3, v[i].z));
        }
        CHECK(f.evaluate(x1, x3) >= -1e-9 * scale);
      }
    }
  }
  CHECK(certified > 300);
}

TEST_CASE("weighted covers") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.1, 5.0);
  std::array<double, 10> coeffs{};
  for (auto& x : coeffs) x = u(rng);

  for (const auto& cover : hexagon_covers()) {
    const auto w = WeightedCover::uniform({cover}, std::vector<double>{1.0});
    CHECK(oracle::rel_err(weighted_theta_sum(w, coeffs), cover_theta_sum(cover, coeffs)) <= 1e-12);
    // All mass on the first of two covers.
    const auto two = WeightedCover::uniform({cover, cover_fixture(9)}, std::vector<double>{1.0, 0.0});
    CHECK(oracle::rel_err(weighted_theta_sum(two, coeffs), cover_theta_sum(cover, coeffs)) <= 1e-12);
  }

  const double t49 = cover_theta_sum(cover_fixture(4), coeffs);
  const double t9 = cover_theta_sum(cover_fixture(9), coeffs);
  for (double t : {0.0, 0.25, 0.6, 1.0}) {
    const auto w = WeightedCover::uniform({cover_fixture(4), cover_fixture(9)}, std::vector<double>{1.0 - t, t});
    CHECK(oracle::rel_err(weighted_theta_sum(w, coeffs), (1.0 - t) * t49 + t * t9) <= 1e-12);
  }

  CHECK_THROWS_AS(WeightedCover::uniform({cover_fixture(4), cover_fixture(9)}, std::vector<double>{0.5, 0.6}),
                  InvariantError);
  CHECK_THROWS_AS(WeightedCover::uniform({cover_fixture(4)}, std::vector<double>{1.5}), InvariantError);
  CHECK_THROWS_AS(WeightedCover::uniform({cover_fixture(4)}, std::vector<double>{-0.1}), InvariantError);
}

TEST_CASE("a zero effective coefficient contributes nothing") {
  CHECK(circuit_number(std::vector<double>{0.5, 0.5}, std::vector<double>{0.0, 4.0}) == 0.0);
  CHECK(toy_weighted_theta(0.0) == doctest::Approx(2.0));  // triangle drops out, segment 2*sqrt(1*1)
  CHECK(toy_weighted_theta(1.0) == doctest::Approx(3.0));  // segment drops out
}

TEST_CASE("scalar weight optimisation") {
  const auto toy = optimize_scalar_weight(toy_weighted_theta);
  CHECK(std::abs(toy.weight - 0.5497) <= 1e-3);
  CHECK(std::abs(toy.value - 3.7996) <= 1e-3);
  // Closed form of the toy objective: 3 cbrt(w) + 2 sqrt(1 - w).
  CHECK(oracle::rel_err(toy_weighted_theta(0.3), 3.0 * std::cbrt(0.3) + 2.0 * std::sqrt(0.7)) <= 1e-12);

  const auto flat = optimize_scalar_weight([](double) { return 4.0; });
  CHECK(flat.value == 4.0);
  CHECK(flat.weight >= 0.0);
  CHECK(flat.weight <= 1.0);

  const auto linear = optimize_scalar_weight([](double t) { return (1 - t) * 10 + t * 8; });
  CHECK(linear.weight == 0.0);
  CHECK(linear.value == 10.0);
}

}  // TEST_SUITE
