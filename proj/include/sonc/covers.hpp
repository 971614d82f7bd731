#pragma once

// Enumeration, canonical serialization and the reviewed id fixture of pure
// circuit covers.

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sonc/circuit.hpp"
#include "sonc/lattice.hpp"

namespace sonc {

/// Every 2- or 3-element index block of `points` whose simplex contains `m` in
/// its relative interior, in lexicographic order.
std::vector<std::vector<std::size_t>> circuit_blocks(std::span<const LatticePoint> points,
                                                     LatticePoint m);

/// All partitions of `points` into circuit blocks around `m`, sorted by
/// canonical key. Ids are left at 0; see label_covers().
std::vector<CircuitCover> enumerate_pure_covers(std::span<const LatticePoint> points,
                                                LatticePoint m);

/// Blocks as sorted index lists joined by '-', blocks sorted and joined by '|',
/// e.g. "0-3|1-4|2-5|6-7|8-9".
std::string canonical_key(const CircuitCover& cover);

/// Inverse of canonical_key. Throws InvariantError on malformed keys.
CircuitCover parse_cover(std::string_view key, std::span<const LatticePoint> points,
                         LatticePoint m, int id = 0);

/// Id to canonical key mapping, one "id: key" per line; '#' starts a comment.
class CoverFixture {
 public:
  static CoverFixture parse(std::istream& in);
  static CoverFixture parse(std::string_view text);

  /// The reviewed hexagon fixture compiled into the library.
  static const CoverFixture& builtin();

  const std::map<int, std::string>& entries() const noexcept { return entries_; }
  std::optional<int> id_of(std::string_view key) const;
  std::string serialize() const;

 private:
  std::map<int, std::string> entries_;
};

/// Assigns fixture ids by canonical key; unmatched covers get id 0.
void label_covers(std::vector<CircuitCover>& covers, const CoverFixture& fixture);

/// Hexagon cover CC(id), id in 1..16. Throws DomainError otherwise.
const CircuitCover& cover_fixture(int id);

/// All 16 hexagon covers ordered by id.
const std::vector<CircuitCover>& hexagon_covers();

/// Structural census following the classification of hexagon covers.
struct CoverCensus {
  int five_segment = 0;      // segments only
  int special_triangle = 0;  // a triangle with two vertices on one row
  int row_spanning = 0;      // triangles each with one vertex per row
  int other = 0;
};

CoverCensus census(std::span<const CircuitCover> covers);

struct FixtureDiff {
  std::vector<std::string> missing;     // fixture keys not enumerated
  std::vector<std::string> unexpected;  // enumerated keys absent from the fixture
  bool empty() const { return missing.empty() && unexpected.empty(); }
};

FixtureDiff compare_with_fixture(std::span<const CircuitCover> covers, const CoverFixture& fixture);

}  // namespace sonc
