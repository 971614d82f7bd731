#pragma once

// The dual phosphorylation instance: rate constants, Michaelis-Menten
// reduction, the sign cases of a(eta) and b(eta), the coefficients of the
// polynomial on the hexagonal face, and the closed-form cover bounds.

#include <array>
#include <span>
#include <string_view>

#include "sonc/lattice.hpp"

namespace sonc {

/// Reaction rate constants kappa_1..kappa_12, all strictly positive.
class KappaVector {
 public:
  explicit KappaVector(const std::array<double, 12>& values);

  double operator[](std::size_t i) const { return values_[i]; }  // 0-based: kappa_{i+1}
  const std::array<double, 12>& values() const noexcept { return values_; }

 private:
  std::array<double, 12> values_;
};

/// eta = (K1, K2, K3, K4, kappa3, kappa6, kappa9, kappa12).
struct EtaPoint {
  double K1 = 1, K2 = 1, K3 = 1, K4 = 1;
  double k3 = 1, k6 = 1, k9 = 1, k12 = 1;

  /// Throws DomainError unless all eight entries are strictly positive.
  static EtaPoint from_array(const std::array<double, 8>& v);
  std::array<double, 8> to_array() const { return {K1, K2, K3, K4, k3, k6, k9, k12}; }
};

/// Michaelis-Menten reduction pi(kappa).
EtaPoint reduce(const KappaVector& kappa);

/// The exchange K1 <-> K4, K2 <-> K3 relating covers CC(10) and CC(12).
EtaPoint swap_michaelis_menten(const EtaPoint& eta);

struct AbValues {
  double a = 0.0;  // k3 k12 - k6 k9
  double b = 0.0;  // (K2 + K3) k3 k12 - (K1 + K4) k6 k9
};

AbValues ab_values(const EtaPoint& eta);

enum class SignCase {
  Case1Monostationary,   // a >= 0, b >= 0
  Case2Multistationary,  // a < 0
  Case3AZeroBNegative,   // a = 0, b < 0
  Case4APositiveBNegative,
};

std::string_view to_string(SignCase c);

struct SignClassification {
  SignCase tag;
  double a;
  double b;
};

/// Exact sign tests, no tolerance.
SignClassification classify(const EtaPoint& eta);

inline bool is_case4(const EtaPoint& eta) {
  const auto ab = ab_values(eta);
  return ab.a > 0.0 && ab.b < 0.0;
}

/// The eleven coefficients of p_{eta,H}(x1, x3): positive-point coefficients in
/// canonical hexagon order, and c_m for the monomial x1^2 x3.
struct HexCoefficients {
  std::array<double, kHexagonPointCount> coeffs{};
  double c_m = 0.0;

  /// All ten support coefficients positive and c_m negative.
  bool is_case4() const;
  /// p_{eta,H}(x1, x3).
  double evaluate(double x1, double x3) const;
  /// max over the eleven monomials of |c x^e|, the scale used for relative checks.
  double magnitude(double x1, double x3) const;
};

/// Raw coefficient map for any eta (the a-multiplied entries vanish or turn
/// negative outside Case 4).
HexCoefficients hex_coefficients(const EtaPoint& eta);

/// Like hex_coefficients, but throws DomainError unless eta lies in Case 4.
HexCoefficients case4_coefficients(const EtaPoint& eta);

/// K1 K2 K3 kappa3 kappa6 kappa12: c_m = b(eta) times this prefactor.
double cm_prefactor(const EtaPoint& eta);

/// The full trivariate polynomial p_eta(x1, x2, x3).
double eval_p_eta(const EtaPoint& eta, double x1, double x2, double x3);

/// Right-hand side of the closed-form sufficient condition -b(eta) <= bound for
/// cover ids 4, 10, 12, 15; id 9 is the generic Theta-sum over the prefactor.
/// Throws DomainError for other ids.
double closed_form_bound(int cover_id, const EtaPoint& eta);

}  // namespace sonc
