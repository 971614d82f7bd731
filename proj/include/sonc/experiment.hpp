#pragma once

// Per-cover certificate statistics over a sample set: hit matrix, pairwise
// comparison against a baseline cover, containment structure and homotopies
// between covers.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sonc/circuit.hpp"
#include "sonc/dualphos.hpp"
#include "sonc/sampling.hpp"

namespace sonc {

inline constexpr std::size_t kMaxCovers = 16;

/// Table-2 quantities are fractions of the sample count times this factor.
inline constexpr double kTable2Scale = 100.0;

/// Theta-sum of `cover` at eta, through the same fast path used by every
/// experiment so that pure-cover and homotopy endpoints agree bit for bit.
double sample_theta_sum(const CircuitCover& cover, std::span<const double> log_coeffs);

/// Natural logarithms of the ten positive coefficients.
std::array<double, kHexagonPointCount> log_coefficients(const HexCoefficients& h);

struct CoverHitMatrix {
  std::vector<int> cover_ids;                // bit i of a mask refers to cover_ids[i]
  std::vector<std::uint16_t> masks;          // one per sample
  std::array<std::uint64_t, kMaxCovers> counts{};
  std::uint64_t union_count = 0;

  std::size_t total() const noexcept { return masks.size(); }
  std::size_t slot_of(int cover_id) const;  // throws DomainError for unknown ids
  std::uint64_t count(int cover_id) const { return counts[slot_of(cover_id)]; }
  double ratio(int cover_id) const;
  double union_ratio() const;
  /// Binomial standard error sqrt(p (1 - p) / n) of a ratio.
  double sigma(double ratio) const;
};

/// Cover i is a hit at a sample iff its Theta-sum >= -c_m.
CoverHitMatrix evaluate_covers(const SampleSet& samples, std::span<const CircuitCover> covers,
                               unsigned threads = 1);

/// Evaluates all sixteen hexagon covers.
CoverHitMatrix evaluate_covers(const SampleSet& samples, unsigned threads = 1);

struct ComparisonRecord {
  int cover = 0;
  int versus = 9;
  std::uint64_t plus = 0;   // certified by `cover` only
  std::uint64_t minus = 0;  // certified by `versus` only
  std::uint64_t zero = 0;   // certified by neither
};

double table2_value(std::uint64_t count, std::size_t total);

std::vector<ComparisonRecord> compare_vs_baseline(const CoverHitMatrix& m, int baseline = 9);

struct ContainmentEdge {
  int from = 0;
  int to = 0;
  std::uint64_t violations = 0;  // |from \ to|
};

struct HasseNode {
  std::vector<int> covers;  // covers with identical certified sets
};

struct ContainmentReport {
  std::vector<int> cover_ids;
  std::vector<std::vector<std::uint64_t>> difference;  // [A][B] = |A \ B|, slots as cover_ids
  std::vector<std::uint64_t> unique_counts;            // points certified by this cover alone
  std::uint64_t threshold = 0;
  std::uint64_t near_band = 0;  // ceil(1e-7 n)
  std::vector<ContainmentEdge> contained;  // violations <= threshold
  std::vector<ContainmentEdge> near;       // threshold < violations <= near_band
  std::vector<HasseNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // node index pairs, lower -> upper

  std::uint64_t violations(int from, int to) const;
  bool is_contained(int from, int to) const;
};

ContainmentReport containment_analysis(const CoverHitMatrix& m, std::uint64_t threshold = 0);

struct HomotopyPoint {
  double s = 0.0;  // weight of the first cover (simplicial only)
  double t = 0.0;
  std::uint64_t hits = 0;
  double ratio = 0.0;
};

struct HomotopyCurve {
  std::vector<int> cover_ids;
  double delta = 0.0;
  std::uint64_t total = 0;
  std::vector<HomotopyPoint> points;
};

/// Number of steps k with k * delta = 1; throws DomainError if delta does not
/// divide the unit interval.
int grid_steps(double delta);

/// (1 - t) Theta(a) + t Theta(b) for t = 0, delta, ..., 1.
HomotopyCurve linear_homotopy(const SampleSet& samples, int a, int b, double delta,
                              unsigned threads = 1);

/// s Theta(a) + t Theta(b) + (1 - s - t) Theta(c) on the triangular grid.
HomotopyCurve simplicial_homotopy(const SampleSet& samples, int a, int b, int c, double delta,
                                  unsigned threads = 1);

struct GridMinimum {
  double relative = 0.0;  // min over the grid of p(x) / largest monomial magnitude at x
  double x1 = 0.0;
  double x3 = 0.0;
};

/// Minimises p_{eta,H} on an n x n log-spaced grid over [lo, hi]^2.
GridMinimum grid_minimum(const HexCoefficients& h, double lo, double hi, int n);

}  // namespace sonc
