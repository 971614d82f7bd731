#include "sonc/selftest.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "sonc/circuit.hpp"
#include "sonc/covers.hpp"
#include "sonc/sampling.hpp"

namespace sonc {

namespace {

const std::array<LatticePoint, 4> kToyPoints{{{4, 2}, {2, 0}, {0, 1}, {0, 0}}};
constexpr LatticePoint kToyInterior{2, 1};

double relative_error(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

std::string describe(double value) {
  std::ostringstream os;
  os.precision(10);
  os << value;
  return os.str();
}

SelftestCheck check_circuit_number() {
  const CircuitSupport f(Simplex({{4, 2}, {2, 0}, {0, 1}}), {2, 1}, {1.0, 1.0, 1.0}, -3.0);
  const double theta = circuit_number(f);
  const bool tight = is_nonnegative(f) &&
                     !is_nonnegative(CircuitSupport(f.simplex(), f.interior(), f.positive_coeffs(), -3.0 - 1e-6));
  return {"circuit_number_example", std::abs(theta - 3.0) <= 1e-12 && tight,
          "theta=" + describe(theta)};
}

SelftestCheck check_toy_optimum() {
  const auto best = optimize_scalar_weight(toy_weighted_theta);
  const bool ok = std::abs(best.weight - 0.5497) <= 1e-3 && std::abs(best.value - 3.7996) <= 1e-3;
  return {"toy_weighted_optimum", ok, "w=" + describe(best.weight) + " value=" + describe(best.value)};
}

SelftestCheck check_covers() {
  const auto& hp = hexagon_points();
  const auto covers = enumerate_pure_covers(hp.positive, hp.negative);
  const auto c = census(covers);
  const bool ok = covers.size() == 16 && c.five_segment == 2 && c.special_triangle == 2 &&
                  c.row_spanning == 12 && compare_with_fixture(covers, CoverFixture::builtin()).empty();
  return {"cover_census", ok, "covers=" + std::to_string(covers.size())};
}

SelftestCheck check_swap(const std::vector<EtaPoint>& etas, const SelftestOptions& opt) {
  double worst = 0.0;
  for (const auto& eta : etas) {
    worst = std::max(worst, relative_error(opt.closed_form(10, swap_michaelis_menten(eta)),
                                           opt.closed_form(12, eta)));
  }
  return {"swap_symmetry_10_12", worst <= 1e-12, "max_rel_err=" + describe(worst)};
}

SelftestCheck check_identity(const std::vector<EtaPoint>& etas, const SelftestOptions& opt) {
  double worst = 0.0;
  int worst_id = 0;
  for (const auto& eta : etas) {
    const auto h = case4_coefficients(eta);
    for (int id : {4, 10, 12, 15}) {
      const double generic = cover_theta_sum(cover_fixture(id), h.coeffs);
      const double err = relative_error(opt.closed_form(id, eta) * cm_prefactor(eta), generic);
      if (err > worst) {
        worst = err;
        worst_id = id;
      }
    }
  }
  return {"closed_form_identity", worst <= 1e-10,
          "max_rel_err=" + describe(worst) + " at CC(" + std::to_string(worst_id) + ")"};
}

}  // namespace

double toy_weighted_theta(double w) {
  static const CircuitCover triangle({{0, 1, 2}}, kToyPoints, kToyInterior);
  static const CircuitCover segment({{0, 3}}, kToyPoints, kToyInterior);
  const WeightedCover weighted({triangle, segment}, {{w, 1.0, 1.0, 0.0}, {1.0 - w, 0.0, 0.0, 1.0}});
  const std::array<double, 4> ones{1.0, 1.0, 1.0, 1.0};
  return weighted_theta_sum(weighted, ones);
}

std::vector<SelftestCheck> run_selftest(const SelftestOptions& options) {
  SamplePlan plan;
  plan.seed = options.seed;
  plan.target = options.points;
  plan.chunk_size = 4096;
  std::vector<EtaPoint> etas;
  for (const auto& s : sample_case4(plan).samples) etas.push_back(s.eta);

  std::vector<SelftestCheck> out;
  auto guarded = [&](const char* name, auto&& fn) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      out.push_back({name, false, std::string("exception: ") + e.what()});
    }
  };
  guarded("circuit_number_example", check_circuit_number);
  guarded("toy_weighted_optimum", check_toy_optimum);
  guarded("cover_census", check_covers);
  guarded("swap_symmetry_10_12", [&] { return check_swap(etas, options); });
  guarded("closed_form_identity", [&] { return check_identity(etas, options); });
  return out;
}

}  // namespace sonc
