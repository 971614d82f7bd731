#include "sonc/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sonc/covers.hpp"
#include "sonc/error.hpp"

namespace sonc {

namespace {

constexpr std::size_t kEvalChunk = 1 << 14;

std::size_t chunk_count(std::size_t n) { return (n + kEvalChunk - 1) / kEvalChunk; }

struct SampleView {
  std::array<double, kHexagonPointCount> logs;
  double c_m;
};

SampleView view_of(const EtaPoint& eta) {
  const auto h = hex_coefficients(eta);
  return {log_coefficients(h), h.c_m};
}

}  // namespace

std::array<double, kHexagonPointCount> log_coefficients(const HexCoefficients& h) {
  std::array<double, kHexagonPointCount> out{};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!(h.coeffs[i] > 0.0)) throw DomainError("coefficient " + std::to_string(i) + " is not positive");
    out[i] = std::log(h.coeffs[i]);
  }
  return out;
}

double sample_theta_sum(const CircuitCover& cover, std::span<const double> log_coeffs) {
  return cover.theta_sum_from_logs(log_coeffs);
}

std::size_t CoverHitMatrix::slot_of(int cover_id) const {
  const auto it = std::find(cover_ids.begin(), cover_ids.end(), cover_id);
  if (it == cover_ids.end()) throw DomainError("cover " + std::to_string(cover_id) + " not evaluated");
  return static_cast<std::size_t>(it - cover_ids.begin());
}

double CoverHitMatrix::ratio(int cover_id) const {
  return total() ? static_cast<double>(count(cover_id)) / static_cast<double>(total()) : 0.0;
}

double CoverHitMatrix::union_ratio() const {
  return total() ? static_cast<double>(union_count) / static_cast<double>(total()) : 0.0;
}

double CoverHitMatrix::sigma(double p) const {
  return total() ? std::sqrt(p * (1.0 - p) / static_cast<double>(total())) : 0.0;
}

CoverHitMatrix evaluate_covers(const SampleSet& samples, std::span<const CircuitCover> covers,
                               unsigned threads) {
  if (covers.size() > kMaxCovers) throw DomainError("at most 16 covers per hit matrix");
  CoverHitMatrix m;
  for (const auto& c : covers) m.cover_ids.push_back(c.id());
  m.masks.assign(samples.size(), 0);

  parallel_for(chunk_count(samples.size()), threads, [&](std::size_t chunk) {
    const std::size_t begin = chunk * kEvalChunk;
    const std::size_t end = std::min(samples.size(), begin + kEvalChunk);
    for (std::size_t i = begin; i < end; ++i) {
      const auto v = view_of(samples.samples[i].eta);
      std::uint16_t mask = 0;
      for (std::size_t k = 0; k < covers.size(); ++k) {
        if (certifies(sample_theta_sum(covers[k], v.logs), v.c_m)) mask |= std::uint16_t(1u << k);
      }
      m.masks[i] = mask;
    }
  });

  for (auto mask : m.masks) {
    if (mask) ++m.union_count;
    for (std::size_t k = 0; k < covers.size(); ++k) {
      if (mask & (1u << k)) ++m.counts[k];
    }
  }
  return m;
}

CoverHitMatrix evaluate_covers(const SampleSet& samples, unsigned threads) {
  return evaluate_covers(samples, hexagon_covers(), threads);
}

double table2_value(std::uint64_t count, std::size_t total) {
  return total ? kTable2Scale * static_cast<double>(count) / static_cast<double>(total) : 0.0;
}

std::vector<ComparisonRecord> compare_vs_baseline(const CoverHitMatrix& m, int baseline) {
  const std::size_t base = m.slot_of(baseline);
  std::vector<ComparisonRecord> out;
  for (std::size_t k = 0; k < m.cover_ids.size(); ++k) {
    ComparisonRecord r{m.cover_ids[k], baseline, 0, 0, 0};
    for (auto mask : m.masks) {
      const bool mine = mask & (1u << k);
      const bool theirs = mask & (1u << base);
      if (mine && !theirs) ++r.plus;
      if (theirs && !mine) ++r.minus;
      if (!mine && !theirs) ++r.zero;
    }
    out.push_back(r);
  }
  return out;
}

std::uint64_t ContainmentReport::violations(int from, int to) const {
  auto slot = [&](int id) {
    const auto it = std::find(cover_ids.begin(), cover_ids.end(), id);
    if (it == cover_ids.end()) throw DomainError("cover " + std::to_string(id) + " not in report");
    return static_cast<std::size_t>(it - cover_ids.begin());
  };
  return difference[slot(from)][slot(to)];
}

bool ContainmentReport::is_contained(int from, int to) const {
  return violations(from, to) <= threshold;
}

ContainmentReport containment_analysis(const CoverHitMatrix& m, std::uint64_t threshold) {
  const std::size_t k = m.cover_ids.size();
  ContainmentReport r;
  r.cover_ids = m.cover_ids;
  r.threshold = threshold;
  r.near_band = static_cast<std::uint64_t>(std::ceil(1e-7 * static_cast<double>(m.total())));
  r.difference.assign(k, std::vector<std::uint64_t>(k, 0));
  r.unique_counts.assign(k, 0);

  for (auto mask : m.masks) {
    for (std::size_t a = 0; a < k; ++a) {
      if (!(mask & (1u << a))) continue;
      if (mask == (1u << a)) ++r.unique_counts[a];
      for (std::size_t b = 0; b < k; ++b) {
        if (!(mask & (1u << b))) ++r.difference[a][b];
      }
    }
  }

  auto within = [&](std::size_t a, std::size_t b) { return r.difference[a][b] <= threshold; };
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      const auto v = r.difference[a][b];
      if (v <= threshold) {
        r.contained.push_back({m.cover_ids[a], m.cover_ids[b], v});
      } else if (v <= r.near_band) {
        r.near.push_back({m.cover_ids[a], m.cover_ids[b], v});
      }
    }
  }

  // Merge mutually contained covers, then reduce the order between classes.
  std::vector<std::size_t> cls(k);
  std::iota(cls.begin(), cls.end(), 0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (within(a, b) && within(b, a)) {
        const auto from = cls[a], to = cls[b];
        for (auto& c : cls) {
          if (c == from) c = to;
        }
      }
    }
  }
  std::vector<std::size_t> rep;
  std::vector<std::size_t> node_of(k);
  for (std::size_t a = 0; a < k; ++a) {
    if (cls[a] == a) {
      node_of[a] = rep.size();
      rep.push_back(a);
      r.nodes.emplace_back();
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    node_of[a] = node_of[cls[a]];
    r.nodes[node_of[a]].covers.push_back(m.cover_ids[a]);
  }
  const std::size_t n = rep.size();
  auto below = [&](std::size_t x, std::size_t y) { return x != y && within(rep[x], rep[y]); };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!below(x, y)) continue;
      bool covered = true;
      for (std::size_t z = 0; z < n && covered; ++z) {
        if (below(x, z) && below(z, y)) covered = false;
      }
      if (covered) r.hasse.emplace_back(x, y);
    }
  }
  return r;
}

int grid_steps(double delta) {
  if (!(delta > 0.0) || delta > 1.0) throw DomainError("grid step must lie in (0, 1]");
  const double k = std::round(1.0 / delta);
  if (std::abs(k * delta - 1.0) > 1e-9) throw DomainError("grid step must divide 1");
  return static_cast<int>(k);
}

namespace {

// Theta-sums of the listed covers and c_m for every sample.
struct ThetaTable {
  std::size_t width = 0;
  std::vector<double> theta;  // sample-major
  std::vector<double> c_m;
};

ThetaTable theta_table(const SampleSet& samples, std::span<const int> ids, unsigned threads) {
  std::vector<const CircuitCover*> covers;
  for (int id : ids) covers.push_back(&cover_fixture(id));
  ThetaTable t;
  t.width = ids.size();
  t.theta.assign(samples.size() * t.width, 0.0);
  t.c_m.assign(samples.size(), 0.0);
  parallel_for(chunk_count(samples.size()), threads, [&](std::size_t chunk) {
    const std::size_t begin = chunk * kEvalChunk;
    const std::size_t end = std::min(samples.size(), begin + kEvalChunk);
    for (std::size_t i = begin; i < end; ++i) {
      const auto v = view_of(samples.samples[i].eta);
      for (std::size_t j = 0; j < t.width; ++j) {
        t.theta[i * t.width + j] = sample_theta_sum(*covers[j], v.logs);
      }
      t.c_m[i] = v.c_m;
    }
  });
  return t;
}

HomotopyCurve sweep(const SampleSet& samples, std::vector<int> ids, double delta,
                    std::vector<HomotopyPoint> grid, unsigned threads) {
  const auto table = theta_table(samples, ids, threads);
  const std::size_t n = samples.size();
  const std::size_t chunks = chunk_count(n);
  std::vector<std::vector<std::uint64_t>> partial(chunks, std::vector<std::uint64_t>(grid.size(), 0));

  parallel_for(chunks, threads, [&](std::size_t chunk) {
    auto& hits = partial[chunk];
    const std::size_t begin = chunk * kEvalChunk;
    const std::size_t end = std::min(n, begin + kEvalChunk);
    for (std::size_t i = begin; i < end; ++i) {
      const double* th = &table.theta[i * table.width];
      for (std::size_t g = 0; g < grid.size(); ++g) {
        const auto& p = grid[g];
        double value;
        if (table.width == 2) {
          value = (1.0 - p.t) * th[0] + p.t * th[1];
        } else {
          value = p.s * th[0] + p.t * th[1] + (1.0 - p.s - p.t) * th[2];
        }
        if (certifies(value, table.c_m[i])) ++hits[g];
      }
    }
  });

  HomotopyCurve curve;
  curve.cover_ids = std::move(ids);
  curve.delta = delta;
  curve.total = n;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    for (const auto& hits : partial) grid[g].hits += hits[g];
    grid[g].ratio = n ? static_cast<double>(grid[g].hits) / static_cast<double>(n) : 0.0;
  }
  curve.points = std::move(grid);
  return curve;
}

}  // namespace

HomotopyCurve linear_homotopy(const SampleSet& samples, int a, int b, double delta,
                              unsigned threads) {
  const int k = grid_steps(delta);
  std::vector<HomotopyPoint> grid;
  for (int i = 0; i <= k; ++i) grid.push_back({0.0, static_cast<double>(i) / k, 0, 0.0});
  return sweep(samples, {a, b}, delta, std::move(grid), threads);
}

HomotopyCurve simplicial_homotopy(const SampleSet& samples, int a, int b, int c, double delta,
                                  unsigned threads) {
  const int k = grid_steps(delta);
  std::vector<HomotopyPoint> grid;
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; i + j <= k; ++j) {
      grid.push_back({static_cast<double>(i) / k, static_cast<double>(j) / k, 0, 0.0});
    }
  }
  return sweep(samples, {a, b, c}, delta, std::move(grid), threads);
}

GridMinimum grid_minimum(const HexCoefficients& h, double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) throw DomainError("invalid grid");
  std::vector<std::array<double, 5>> pw(n);
  const double step = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    const double x = lo * std::exp(step * i);
    pw[i] = {1.0, x, x * x, x * x * x, x * x * x * x};
  }
  static constexpr std::array<std::array<int, 2>, kHexagonPointCount> e{
      {{0, 0}, {2, 0}, {4, 1}, {4, 2}, {2, 2}, {0, 1}, {1, 0}, {3, 2}, {1, 1}, {3, 1}}};

  GridMinimum best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double term = h.c_m * pw[i][2] * pw[j][1];
      double value = term;
      double scale = std::abs(term);
      for (std::size_t q = 0; q < kHexagonPointCount; ++q) {
        term = h.coeffs[q] * pw[i][e[q][0]] * pw[j][e[q][1]];
        value += term;
        scale = std::max(scale, std::abs(term));
      }
      const double rel = scale > 0.0 ? value / scale : 0.0;
      if (rel < best.relative) best = {rel, pw[i][1], pw[j][1]};
    }
  }
  return best;
}

}  // namespace sonc
