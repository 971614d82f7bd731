#pragma once

// Exact planar geometry for integer exponent vectors.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace sonc {

using Rational = boost::rational<std::int64_t>;

/// Exponent pair (x, z) of a monomial x1^x * x3^z on the projected hexagonal face.
struct LatticePoint {
  int x = 0;
  int z = 0;

  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

std::string to_string(LatticePoint p);

/// An affinely independent list of 2 or 3 distinct lattice points.
class Simplex {
 public:
  /// Throws InvariantError unless the vertices form a 1- or 2-simplex.
  explicit Simplex(std::vector<LatticePoint> vertices);

  static bool is_valid(std::span<const LatticePoint> vertices);

  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::size_t dimension() const noexcept { return vertices_.size() - 1; }

 private:
  std::vector<LatticePoint> vertices_;
};

/// Barycentric coordinates of a point in the relative interior of a simplex,
/// one entry per simplex vertex in vertex order.
struct Barycentrics {
  std::vector<Rational> exact;

  std::vector<double> values() const;
};

/// Exact barycentric coordinates of `p` with respect to `s`. Returns nullopt
/// when `p` is not in the relative interior (some coordinate outside (0,1), or
/// `p` off the affine hull of a segment).
std::optional<Barycentrics> barycentric_coordinates(const Simplex& s, LatticePoint p);

bool contains_in_relative_interior(const Simplex& s, LatticePoint p);

inline constexpr std::size_t kHexagonPointCount = 10;

struct HexagonPoints {
  std::array<LatticePoint, kHexagonPointCount> positive;
  LatticePoint negative;
};

/// The ten positive support points of the hexagonal face in canonical order
/// a1..a6, b1, b2, i1, i2, and the negative point m = (2,1).
const HexagonPoints& hexagon_points();

/// Short label ("a1", ..., "i2") of a canonical hexagon index.
std::string_view hexagon_label(std::size_t index);

}  // namespace sonc
