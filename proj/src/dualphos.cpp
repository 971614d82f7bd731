#include "sonc/dualphos.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sonc/circuit.hpp"
#include "sonc/covers.hpp"
#include "sonc/error.hpp"

namespace sonc {

KappaVector::KappaVector(const std::array<double, 12>& values) : values_(values) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] > 0.0) || !std::isfinite(values_[i])) {
      throw DomainError("kappa" + std::to_string(i + 1) + " must be positive and finite");
    }
  }
}

EtaPoint EtaPoint::from_array(const std::array<double, 8>& v) {
  for (double x : v) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("eta entries must be positive");
  }
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

EtaPoint reduce(const KappaVector& k) {
  return {
      (k[1] + k[2]) / k[0],   // K1 = (k2 + k3) / k1
      (k[4] + k[5]) / k[3],   // K2 = (k5 + k6) / k4
      (k[7] + k[8]) / k[6],   // K3 = (k8 + k9) / k7
      (k[10] + k[11]) / k[9], // K4 = (k11 + k12) / k10
      k[2], k[5], k[8], k[11],
  };
}

EtaPoint swap_michaelis_menten(const EtaPoint& e) {
  return {e.K4, e.K3, e.K2, e.K1, e.k3, e.k6, e.k9, e.k12};
}

AbValues ab_values(const EtaPoint& e) {
  return {e.k3 * e.k12 - e.k6 * e.k9,
          (e.K2 + e.K3) * e.k3 * e.k12 - (e.K1 + e.K4) * e.k6 * e.k9};
}

std::string_view to_string(SignCase c) {
  switch (c) {
    case SignCase::Case1Monostationary:
      return "Case1_Monostationary";
    case SignCase::Case2Multistationary:
      return "Case2_Multistationary";
    case SignCase::Case3AZeroBNegative:
      return "Case3_aZero_bNeg";
    case SignCase::Case4APositiveBNegative:
      return "Case4_aPos_bNeg";
  }
  return "unknown";
}

SignClassification classify(const EtaPoint& eta) {
  const auto [a, b] = ab_values(eta);
  SignCase tag = SignCase::Case4APositiveBNegative;
  if (a < 0.0) {
    tag = SignCase::Case2Multistationary;
  } else if (b >= 0.0) {
    tag = SignCase::Case1Monostationary;
  } else if (a == 0.0) {
    tag = SignCase::Case3AZeroBNegative;
  }
  return {tag, a, b};
}

namespace {

// Exponent pairs in canonical order, matching hexagon_points().
constexpr std::array<std::array<int, 2>, kHexagonPointCount> kExponents{
    {{0, 0}, {2, 0}, {4, 1}, {4, 2}, {2, 2}, {0, 1}, {1, 0}, {3, 2}, {1, 1}, {3, 1}}};

double monomial(double x1, double x3, int ex, int ez) {
  return std::pow(x1, ex) * std::pow(x3, ez);
}

}  // namespace

bool HexCoefficients::is_case4() const {
  return c_m < 0.0 && std::all_of(coeffs.begin(), coeffs.end(), [](double c) { return c > 0.0; });
}

double HexCoefficients::evaluate(double x1, double x3) const {
  double value = c_m * monomial(x1, x3, 2, 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    value += coeffs[i] * monomial(x1, x3, kExponents[i][0], kExponents[i][1]);
  }
  return value;
}

double HexCoefficients::magnitude(double x1, double x3) const {
  double scale = std::abs(c_m * monomial(x1, x3, 2, 1));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    scale = std::max(scale, std::abs(coeffs[i] * monomial(x1, x3, kExponents[i][0], kExponents[i][1])));
  }
  return scale;
}

double cm_prefactor(const EtaPoint& e) { return e.K1 * e.K2 * e.K3 * e.k3 * e.k6 * e.k12; }

HexCoefficients hex_coefficients(const EtaPoint& e) {
  const auto [a, b] = ab_values(e);
  const double K1 = e.K1, K2 = e.K2, K3 = e.K3, K4 = e.K4;
  const double k3 = e.k3, k6 = e.k6, k9 = e.k9, k12 = e.k12;

  HexCoefficients h;
  auto& c = h.coeffs;
  c[0] = K1 * K1 * K1 * K3 * K3 * k6 * k6 * k6 * k12 * k12;        // a1 (0,0)
  c[1] = K1 * K1 * K2 * K3 * K4 * k3 * k6 * k6 * k9 * k12;          // a2 (2,0)
  c[2] = K1 * K2 * K2 * K4 * k3 * k3 * k6 * k9 * k9;                // a3 (4,1)
  c[3] = a * K2 * K2 * K4 * k3 * k3 * k9;                           // a4 (4,2)
  c[4] = a * K1 * K2 * K3 * k3 * k6 * k12;                          // a5 (2,2)
  c[5] = K1 * K1 * K3 * K3 * k6 * k6 * k6 * k12 * k12;              // a6 (0,1)
  c[6] = K1 * K1 * K2 * K3 * K3 * k3 * k6 * k6 * k12 * k12;         // b1 (1,0)
  c[7] = a * K2 * K2 * K3 * k3 * k3 * k12;                          // b2 (3,2)
  c[8] = 2.0 * K1 * K1 * K2 * K3 * k3 * k6 * k6 * k12 * k12;        // i1 (1,1)
  c[9] = 2.0 * K1 * K2 * K3 * K4 * k3 * k3 * k6 * k9 * k12;         // i2 (3,1)
  h.c_m = b * cm_prefactor(e);
  return h;
}

HexCoefficients case4_coefficients(const EtaPoint& eta) {
  const auto cls = classify(eta);
  if (cls.tag != SignCase::Case4APositiveBNegative) {
    throw DomainError("eta is not in Case 4 (" + std::string(to_string(cls.tag)) + ")");
  }
  return hex_coefficients(eta);
}

double eval_p_eta(const EtaPoint& e, double x1, double x2, double x3) {
  const auto [a, b] = ab_values(e);
  const double K1 = e.K1, K2 = e.K2, K3 = e.K3, K4 = e.K4;
  const double k3 = e.k3, k6 = e.k6, k9 = e.k9, k12 = e.k12;
  auto pw = [](double x, int n) { return std::pow(x, n); };

  const double a_part =
      K2 * k3 * a *
      (K2 * K4 * k3 * k9 * pw(x1, 4) * pw(x3, 2) +
       K1 * K3 * k6 * k12 *
           (pw(x1, 3) * pw(x2, 2) * x3 + pw(x1, 2) * pw(x2, 3) * x3 +
            pw(x1, 2) * pw(x2, 2) * pw(x3, 2)) +
       K2 * K3 * k3 * k12 * pw(x1, 3) * x2 * pw(x3, 2));
  const double b_part = K1 * K2 * K3 * k3 * k6 * k12 * b * pw(x1, 2) * pw(x2, 2) * x3;
  const double rest =
      K1 * k6 *
      (K2 * K2 * K4 * k3 * k3 * k9 * k9 * pw(x1, 4) * x3 +
       2.0 * K2 * K3 * K4 * k3 * k3 * k9 * k12 * pw(x1, 3) * x2 * x3 +
       K1 * K2 * K3 * k3 * k6 * k12 * (k9 + k12) * pw(x1, 2) * pw(x2, 3) +
       K1 * K2 * K3 * K4 * k3 * k6 * k9 * k12 * pw(x1, 2) * pw(x2, 2) +
       K1 * K3 * K3 * k6 * k12 * k12 * (k3 + k6) * x1 * pw(x2, 4) +
       2.0 * K1 * K2 * K3 * k3 * k6 * k12 * k12 * x1 * pw(x2, 3) * x3 +
       K1 * K2 * K3 * K3 * k3 * k6 * k12 * k12 * x1 * pw(x2, 3) +
       K1 * K3 * K3 * k6 * k6 * k12 * k12 * pw(x2, 4) * x3 +
       K1 * K1 * K3 * K3 * k6 * k6 * k12 * k12 * pw(x2, 4));
  return a_part + b_part + rest;
}

double closed_form_bound(int cover_id, const EtaPoint& e) {
  const double a = ab_values(e).a;
  const double K1 = e.K1, K2 = e.K2, K3 = e.K3, K4 = e.K4;
  const double k3 = e.k3, k6 = e.k6, k9 = e.k9, k12 = e.k12;
  const double third = 1.0 / 3.0;

  // Shared by CC(4) and CC(15): the two middle-row segments {a3,i1}, {a6,i2}.
  auto middle_row = [&] {
    return 3.0 * std::pow(K1 * K2 * K3 * K4 * k3 * k6 * k6 * k9 * k9 * k12, third) *
           (std::pow(K2 * K4, third) / K2 + std::pow(K1 * K3, third) / K3);
  };
  const double b1b2 = 2.0 * std::sqrt(K2 * K3 * k3 * k12 * a);

  switch (cover_id) {
    case 15:
      return 4.0 * std::sqrt(K1 * K4 * k6 * k9 * a) + b1b2 + middle_row();
    case 4:
      return 4.0 * std::pow(K1 * K2 * K3 * K4 * k3 * k6 * k9 * k12, 0.25) * std::sqrt(2.0 * a) +
             middle_row();
    case 10:
      return 4.0 / K2 *
                 std::pow(K1 * K1 * K2 * K2 * K2 * K3 * K4 * K4 * k3 * k6 * k6 * k9 * k9 * k12 * a,
                          0.25) +
             3.0 * std::pow(K1 * K4 * K4 * k6 * k6 * k9 * k9 * a, third) + b1b2 +
             3.0 / K3 * std::pow(K1 * K1 * K2 * K3 * K3 * K4 * k3 * k6 * k6 * k9 * k9 * k12, third);
    case 12:
      return 4.0 / K3 *
                 std::pow(K1 * K1 * K2 * K3 * K3 * K3 * K4 * K4 * k3 * k6 * k6 * k9 * k9 * k12 * a,
                          0.25) +
             3.0 * std::pow(K1 * K1 * K4 * k6 * k6 * k9 * k9 * a, third) + b1b2 +
             3.0 / K2 * std::pow(K1 * K2 * K2 * K3 * K4 * K4 * k3 * k6 * k6 * k9 * k9 * k12, third);
    case 9:
      return cover_theta_sum(cover_fixture(9), case4_coefficients(e).coeffs) / cm_prefactor(e);
    default:
      throw DomainError("no closed-form bound for cover id " + std::to_string(cover_id));
  }
}

}  // namespace sonc
