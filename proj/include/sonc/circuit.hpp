#pragma once

// Circuit polynomials on the positive orthant, their circuit numbers, and sums
// of circuit numbers over (weighted) covers of a point configuration.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sonc/lattice.hpp"

namespace sonc {

/// Circuit number prod_i (c_i / lambda_i)^lambda_i, evaluated as
/// exp(sum_i lambda_i (ln c_i - ln lambda_i)). A zero coefficient yields 0.
double circuit_number(std::span<const double> lambdas, std::span<const double> coeffs);

/// c_beta x^beta + sum_i c_i x^alpha(i) with beta strictly inside the simplex.
class CircuitSupport {
 public:
  /// Throws DomainError("not a circuit") if `interior` is not in the relative
  /// interior of `simplex`, or if a vertex coefficient is not positive.
  CircuitSupport(Simplex simplex, LatticePoint interior, std::vector<double> positive_coeffs,
                 double negative_coeff);

  const Simplex& simplex() const noexcept { return simplex_; }
  LatticePoint interior() const noexcept { return interior_; }
  const std::vector<double>& positive_coeffs() const noexcept { return positive_coeffs_; }
  double negative_coeff() const noexcept { return negative_coeff_; }
  const std::vector<double>& lambdas() const noexcept { return lambdas_; }

  /// Value of the polynomial at (x1, x3) with x1, x3 > 0.
  double evaluate(double x1, double x3) const;

 private:
  Simplex simplex_;
  LatticePoint interior_;
  std::vector<double> positive_coeffs_;
  double negative_coeff_;
  std::vector<double> lambdas_;
};

double circuit_number(const CircuitSupport& c);

/// Nonnegativity on the positive orthant: -c_beta <= Theta. Uneven vertices are
/// allowed.
bool is_nonnegative(const CircuitSupport& c);

/// One simplex of a cover, referring to points by index.
struct CoverCircuit {
  std::vector<std::size_t> vertices;
  std::vector<double> lambdas;
  double lambda_entropy = 0.0;  // sum_i lambda_i ln lambda_i
};

/// A family of simplices over an indexed point set, each containing a common
/// interior point in its relative interior. A pure cover additionally
/// partitions the point set.
class CircuitCover {
 public:
  /// Throws InvariantError if a block is not a simplex containing `interior`,
  /// refers to an index out of range, or repeats a point.
  CircuitCover(std::vector<std::vector<std::size_t>> blocks, std::span<const LatticePoint> points,
               LatticePoint interior, int id = 0);

  int id() const noexcept { return id_; }
  void set_id(int id) noexcept { id_ = id; }
  LatticePoint interior() const noexcept { return interior_; }
  std::size_t point_count() const noexcept { return points_.size(); }
  const std::vector<LatticePoint>& points() const noexcept { return points_; }
  const std::vector<CoverCircuit>& circuits() const noexcept { return circuits_; }

  /// Every point of the underlying set is used exactly once.
  bool is_pure() const;

  /// Sum of circuit numbers given ln of the coefficients, indexed like points().
  double theta_sum_from_logs(std::span<const double> log_coeffs) const;

 private:
  int id_;
  LatticePoint interior_;
  std::vector<LatticePoint> points_;
  std::vector<CoverCircuit> circuits_;
};

/// Sum over the cover's circuits of their circuit numbers. The negative
/// coefficient is not consumed; callers compare the result with -c_m.
/// Throws DomainError if a used coefficient is not positive.
double cover_theta_sum(const CircuitCover& cover, std::span<const double> coeffs);

/// Covers combined by splitting vertex coefficients: weights[i][v] is the
/// fraction of c_v given to cover i. For every point, the weights over the
/// covers that use it sum to one.
class WeightedCover {
 public:
  WeightedCover(std::vector<CircuitCover> covers, std::vector<std::vector<double>> weights);

  /// Each pure cover i receives the same fraction `scalars[i]` of every coefficient.
  static WeightedCover uniform(std::vector<CircuitCover> covers, std::span<const double> scalars);

  const std::vector<CircuitCover>& covers() const noexcept { return covers_; }
  const std::vector<std::vector<double>>& weights() const noexcept { return weights_; }

 private:
  std::vector<CircuitCover> covers_;
  std::vector<std::vector<double>> weights_;
};

/// Circuits with a zero effective coefficient contribute exactly 0.
double weighted_theta_sum(const WeightedCover& w, std::span<const double> coeffs);

struct ScalarOptimum {
  double weight = 0.0;
  double value = 0.0;
};

/// Maximises `objective` on [0,1]: golden-section search down to an interval
/// below 1e-6, compared against the best of 101 equispaced samples.
ScalarOptimum optimize_scalar_weight(const std::function<double(double)>& objective);

/// A certificate hit: theta_sum >= -c_m (ties certify).
inline bool certifies(double theta_sum, double c_m) { return theta_sum >= -c_m; }

}  // namespace sonc
