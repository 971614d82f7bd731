#pragma once

// Seeded, chunk-parallel sampling of rate constants from (0, N]^12.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sonc/dualphos.hpp"

namespace sonc {

/// Stateless counter-based generator: the value for a counter is a SplitMix64
/// finalisation of seed + (counter + 1) * golden gamma.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

  static std::uint64_t mix(std::uint64_t z) noexcept;
  std::uint64_t bits(std::uint64_t counter) const noexcept;
  /// Uniform in [0, 1) with 53 random mantissa bits.
  double uniform(std::uint64_t counter) const noexcept;
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
};

struct SamplePlan {
  double box = 1.0;             // N
  std::uint64_t target = 1000;  // accepted samples wanted
  std::uint64_t seed = 42;
  std::uint64_t chunk_size = 1 << 16;
  unsigned threads = 1;  // 0 selects std::thread::hardware_concurrency()

  void validate() const;  // throws DomainError
};

/// Draw number `index` of the stream: kappa_i = N (1 - u) with u uniform in
/// [0, 1), so every component lies in (0, N]. Returns nullopt if a component
/// underflows to zero.
std::optional<KappaVector> draw_kappa(const CounterRng& rng, double box, std::uint64_t index);

struct Sample {
  std::uint64_t draw = 0;  // index in the raw stream
  EtaPoint eta;
};

struct SampleSet {
  SamplePlan plan;
  std::vector<Sample> samples;
  std::uint64_t raw_draws = 0;  // draws consumed up to and including the last accepted one

  std::size_t size() const noexcept { return samples.size(); }
  double acceptance_rate() const {
    return raw_draws ? static_cast<double>(samples.size()) / static_cast<double>(raw_draws) : 0.0;
  }
};

/// Keeps draws whose reduction satisfies `accept`, in stream order, until
/// plan.target are collected. The result does not depend on chunk_size or
/// threads.
SampleSet sample_where(const SamplePlan& plan, const std::function<bool(const EtaPoint&)>& accept);

SampleSet sample_case4(const SamplePlan& plan);
SampleSet sample_case2(const SamplePlan& plan);

/// Runs body(i) for i in [0, count) on up to `threads` workers. Each index is
/// processed exactly once; callers write results into per-index slots.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

unsigned resolve_threads(unsigned requested);

}  // namespace sonc
