#include "sonc/lattice.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <utility>

#include "sonc/error.hpp"

namespace sonc {

std::string to_string(LatticePoint p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.z) + ")";
}

namespace {

std::int64_t doubled_area(LatticePoint a, LatticePoint b, LatticePoint c) {
  return static_cast<std::int64_t>(b.x - a.x) * (c.z - a.z) -
         static_cast<std::int64_t>(c.x - a.x) * (b.z - a.z);
}

}  // namespace

bool Simplex::is_valid(std::span<const LatticePoint> vertices) {
  if (vertices.size() == 2) return vertices[0] != vertices[1];
  if (vertices.size() == 3) return doubled_area(vertices[0], vertices[1], vertices[2]) != 0;
  return false;
}

Simplex::Simplex(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
  if (!is_valid(vertices_)) {
    std::string msg = "degenerate simplex:";
    for (auto v : vertices_) msg += " " + to_string(v);
    throw InvariantError(msg);
  }
}

std::vector<double> Barycentrics::values() const {
  std::vector<double> out;
  out.reserve(exact.size());
  for (const auto& r : exact) out.push_back(boost::rational_cast<double>(r));
  return out;
}

std::optional<Barycentrics> barycentric_coordinates(const Simplex& s, LatticePoint p) {
  // Rows: x-coordinates, z-coordinates, sum-to-one; one column per vertex plus
  // the right-hand side. Segments give an overdetermined 3x2 system whose
  // consistency decides membership in the affine hull.
  const auto& v = s.vertices();
  const std::size_t k = v.size();
  std::array<std::array<Rational, 4>, 3> m{};
  for (std::size_t j = 0; j < k; ++j) {
    m[0][j] = v[j].x;
    m[1][j] = v[j].z;
    m[2][j] = 1;
  }
  m[0][k] = p.x;
  m[1][k] = p.z;
  m[2][k] = 1;

  std::size_t row = 0;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = row;
    while (pivot < 3 && m[pivot][col].numerator() == 0) ++pivot;
    if (pivot == 3) throw InvariantError("singular barycentric system for a validated simplex");
    std::swap(m[row], m[pivot]);
    const Rational inv = Rational(1) / m[row][col];
    for (std::size_t c = col; c <= k; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < 3; ++r) {
      if (r == row || m[r][col].numerator() == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c <= k; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  for (std::size_t r = row; r < 3; ++r) {
    if (m[r][k].numerator() != 0) return std::nullopt;  // p is off the affine hull
  }

  Barycentrics out;
  out.exact.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    const Rational& lambda = m[j][k];
    if (lambda <= Rational(0) || lambda >= Rational(1)) return std::nullopt;
    out.exact.push_back(lambda);
  }
  return out;
}

bool contains_in_relative_interior(const Simplex& s, LatticePoint p) {
  return barycentric_coordinates(s, p).has_value();
}

const HexagonPoints& hexagon_points() {
  static const HexagonPoints points{
      {{{0, 0}, {2, 0}, {4, 1}, {4, 2}, {2, 2}, {0, 1}, {1, 0}, {3, 2}, {1, 1}, {3, 1}}},
      {2, 1}};
  return points;
}

std::string_view hexagon_label(std::size_t index) {
  static constexpr std::array<std::string_view, kHexagonPointCount> labels{
      "a1", "a2", "a3", "a4", "a5", "a6", "b1", "b2", "i1", "i2"};
  assert(index < labels.size());
  return labels.at(index);
}

}  // namespace sonc
