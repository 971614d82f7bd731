#include "sonc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "sonc/error.hpp"

namespace sonc {

// Extended precision keeps exact cases exact after rounding, e.g. Theta = 3
// for unit coefficients and barycentrics 1/3.
double circuit_number(std::span<const double> lambdas, std::span<const double> coeffs) {
  long double exponent = 0.0L;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (coeffs[i] == 0.0) return 0.0;
    const long double lambda = lambdas[i];
    exponent += lambda * (std::log(static_cast<long double>(coeffs[i])) - std::log(lambda));
  }
  return static_cast<double>(std::exp(exponent));
}

CircuitSupport::CircuitSupport(Simplex simplex, LatticePoint interior,
                               std::vector<double> positive_coeffs, double negative_coeff)
    : simplex_(std::move(simplex)),
      interior_(interior),
      positive_coeffs_(std::move(positive_coeffs)),
      negative_coeff_(negative_coeff) {
  auto bary = barycentric_coordinates(simplex_, interior_);
  if (!bary) throw DomainError("not a circuit: " + to_string(interior_) + " is not interior");
  if (positive_coeffs_.size() != simplex_.size()) {
    throw DomainError("circuit needs one coefficient per simplex vertex");
  }
  for (double c : positive_coeffs_) {
    if (!(c > 0.0)) throw DomainError("circuit vertex coefficients must be positive");
  }
  lambdas_ = bary->values();
}

double CircuitSupport::evaluate(double x1, double x3) const {
  auto monomial = [&](LatticePoint e) { return std::pow(x1, e.x) * std::pow(x3, e.z); };
  double value = negative_coeff_ * monomial(interior_);
  const auto& v = simplex_.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) value += positive_coeffs_[i] * monomial(v[i]);
  return value;
}

double circuit_number(const CircuitSupport& c) {
  return circuit_number(c.lambdas(), c.positive_coeffs());
}

bool is_nonnegative(const CircuitSupport& c) {
  return -c.negative_coeff() <= circuit_number(c);
}

CircuitCover::CircuitCover(std::vector<std::vector<std::size_t>> blocks,
                           std::span<const LatticePoint> points, LatticePoint interior, int id)
    : id_(id), interior_(interior), points_(points.begin(), points.end()) {
  std::vector<bool> used(points_.size(), false);
  circuits_.reserve(blocks.size());
  for (auto& block : blocks) {
    std::vector<LatticePoint> vertices;
    for (std::size_t idx : block) {
      if (idx >= points_.size()) throw InvariantError("cover block index out of range");
      if (used[idx]) throw InvariantError("cover uses a point twice");
      used[idx] = true;
      vertices.push_back(points_[idx]);
    }
    if (!Simplex::is_valid(vertices)) throw InvariantError("cover block is not a simplex");
    auto bary = barycentric_coordinates(Simplex(std::move(vertices)), interior_);
    if (!bary) throw InvariantError("cover block does not contain the interior point");
    CoverCircuit circuit{std::move(block), bary->values(), 0.0};
    for (double l : circuit.lambdas) circuit.lambda_entropy += l * std::log(l);
    circuits_.push_back(std::move(circuit));
  }
}

bool CircuitCover::is_pure() const {
  std::size_t used = 0;
  for (const auto& c : circuits_) used += c.vertices.size();
  return used == points_.size();  // constructor already rejects repeats
}

double CircuitCover::theta_sum_from_logs(std::span<const double> log_coeffs) const {
  double sum = 0.0;
  for (const auto& c : circuits_) {
    double exponent = -c.lambda_entropy;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      exponent += c.lambdas[i] * log_coeffs[c.vertices[i]];
    }
    sum += std::exp(exponent);
  }
  return sum;
}

double cover_theta_sum(const CircuitCover& cover, std::span<const double> coeffs) {
  if (coeffs.size() != cover.point_count()) {
    throw DomainError("coefficient count does not match the cover's point set");
  }
  std::vector<double> logs(coeffs.size(), 0.0);
  for (const auto& c : cover.circuits()) {
    for (std::size_t v : c.vertices) {
      if (!(coeffs[v] > 0.0)) {
        throw DomainError("coefficient of point " + std::to_string(v) + " is not positive");
      }
      logs[v] = std::log(coeffs[v]);
    }
  }
  return cover.theta_sum_from_logs(logs);
}

namespace {

constexpr double kWeightTolerance = 1e-12;

}  // namespace

WeightedCover::WeightedCover(std::vector<CircuitCover> covers,
                             std::vector<std::vector<double>> weights)
    : covers_(std::move(covers)), weights_(std::move(weights)) {
  if (covers_.empty()) throw InvariantError("weighted cover needs at least one cover");
  if (weights_.size() != covers_.size()) throw InvariantError("one weight row per cover");
  const std::size_t n = covers_.front().point_count();
  std::vector<double> total(n, 0.0);
  std::vector<bool> touched(n, false);
  for (std::size_t i = 0; i < covers_.size(); ++i) {
    if (covers_[i].point_count() != n || weights_[i].size() != n) {
      throw InvariantError("covers and weights must share one point set");
    }
    for (const auto& c : covers_[i].circuits()) {
      for (std::size_t v : c.vertices) {
        const double w = weights_[i][v];
        if (!(w >= 0.0 && w <= 1.0)) throw InvariantError("weights must lie in [0,1]");
        total[v] += w;
        touched[v] = true;
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (touched[v] && std::abs(total[v] - 1.0) > kWeightTolerance) {
      throw InvariantError("weights of point " + std::to_string(v) + " do not sum to one");
    }
  }
}

WeightedCover WeightedCover::uniform(std::vector<CircuitCover> covers,
                                     std::span<const double> scalars) {
  if (scalars.size() != covers.size()) throw InvariantError("one scalar weight per cover");
  std::vector<std::vector<double>> weights;
  weights.reserve(covers.size());
  for (std::size_t i = 0; i < covers.size(); ++i) {
    if (!covers[i].is_pure()) throw InvariantError("uniform weighting needs pure covers");
    weights.emplace_back(covers[i].point_count(), scalars[i]);
  }
  return WeightedCover(std::move(covers), std::move(weights));
}

double weighted_theta_sum(const WeightedCover& w, std::span<const double> coeffs) {
  double sum = 0.0;
  std::vector<double> effective;
  for (std::size_t i = 0; i < w.covers().size(); ++i) {
    const auto& cover = w.covers()[i];
    if (coeffs.size() != cover.point_count()) {
      throw DomainError("coefficient count does not match the cover's point set");
    }
    for (const auto& c : cover.circuits()) {
      effective.clear();
      for (std::size_t v : c.vertices) {
        if (!(coeffs[v] > 0.0)) throw DomainError("coefficients must be positive");
        effective.push_back(w.weights()[i][v] * coeffs[v]);
      }
      sum += circuit_number(c.lambdas, effective);
    }
  }
  return sum;
}

ScalarOptimum optimize_scalar_weight(const std::function<double(double)>& objective) {
  ScalarOptimum grid_best{0.0, objective(0.0)};
  for (int i = 1; i <= 100; ++i) {
    const double w = i / 100.0;
    const double value = objective(w);
    if (value > grid_best.value) grid_best = {w, value};
  }

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0;
  double hi = 1.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (hi - lo >= 1e-6) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = objective(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = objective(x1);
    }
  }
  const double mid = 0.5 * (lo + hi);
  const ScalarOptimum golden{mid, objective(mid)};
  return golden.value >= grid_best.value ? golden : grid_best;
}

}  // namespace sonc
