#include "sonc/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "sonc/error.hpp"

namespace sonc {

namespace {
constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kComponents = 12;
}  // namespace

std::uint64_t CounterRng::mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t CounterRng::bits(std::uint64_t counter) const noexcept {
  return mix(seed_ + (counter + 1) * kGamma);
}

double CounterRng::uniform(std::uint64_t counter) const noexcept {
  return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
}

void SamplePlan::validate() const {
  if (!(box > 0.0) || !std::isfinite(box)) throw DomainError("box size must be positive");
  if (target < 1) throw DomainError("target sample count must be at least 1");
  if (chunk_size < 1) throw DomainError("chunk size must be at least 1");
}

std::optional<KappaVector> draw_kappa(const CounterRng& rng, double box, std::uint64_t index) {
  std::array<double, 12> k{};
  for (std::uint64_t c = 0; c < kComponents; ++c) {
    k[c] = box * (1.0 - rng.uniform(index * kComponents + c));
    if (k[c] == 0.0) return std::nullopt;
  }
  return KappaVector(k);
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

SampleSet sample_where(const SamplePlan& plan,
                       const std::function<bool(const EtaPoint&)>& accept) {
  plan.validate();
  const CounterRng rng(plan.seed);
  const unsigned threads = resolve_threads(plan.threads);
  const std::size_t batch = std::max<std::size_t>(4, 4 * static_cast<std::size_t>(threads));

  SampleSet out;
  out.plan = plan;
  std::uint64_t next_chunk = 0;
  std::vector<std::vector<Sample>> chunks(batch);

  while (out.samples.size() < plan.target) {
    parallel_for(batch, threads, [&](std::size_t slot) {
      auto& local = chunks[slot];
      local.clear();
      const std::uint64_t begin = (next_chunk + slot) * plan.chunk_size;
      for (std::uint64_t d = begin; d < begin + plan.chunk_size; ++d) {
        const auto kappa = draw_kappa(rng, plan.box, d);
        if (!kappa) continue;
        const EtaPoint eta = reduce(*kappa);
        if (accept(eta)) local.push_back({d, eta});
      }
    });
    next_chunk += batch;
    for (const auto& local : chunks) {
      for (const auto& s : local) {
        if (out.samples.size() == plan.target) break;
        out.samples.push_back(s);
      }
    }
  }
  out.raw_draws = out.samples.back().draw + 1;
  return out;
}

SampleSet sample_case4(const SamplePlan& plan) { return sample_where(plan, is_case4); }

SampleSet sample_case2(const SamplePlan& plan) {
  return sample_where(plan, [](const EtaPoint& eta) {
    return classify(eta).tag == SignCase::Case2Multistationary;
  });
}

}  // namespace sonc
