#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sonc/covers.hpp"
#include "sonc/error.hpp"

using namespace sonc;

namespace {

// Index permutation induced by (x, z) -> (4 - x, 2 - z).
std::array<std::size_t, 10> mirror_map() {
  const auto& p = hexagon_points().positive;
  std::array<std::size_t, 10> out{};
  for (std::size_t i = 0; i < p.size(); ++i) {
    const LatticePoint image{4 - p[i].x, 2 - p[i].z};
    out[i] = static_cast<std::size_t>(std::find(p.begin(), p.end(), image) - p.begin());
  }
  return out;
}

std::vector<std::vector<std::size_t>> blocks_of(const CircuitCover& c) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& circuit : c.circuits()) out.push_back(circuit.vertices);
  return out;
}

std::string mirrored_key(const CircuitCover& c) {
  const auto map = mirror_map();
  auto blocks = blocks_of(c);
  for (auto& b : blocks) {
    for (auto& i : b) i = map[i];
  }
  const auto& h = hexagon_points();
  return canonical_key(CircuitCover(blocks, h.positive, h.negative));
}

bool has_block(const CircuitCover& c, std::vector<std::size_t> block) {
  std::sort(block.begin(), block.end());
  for (auto b : blocks_of(c)) {
    std::sort(b.begin(), b.end());
    if (b == block) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("covers") {

TEST_CASE("sixteen pure covers of the hexagon") {
  const auto& h = hexagon_points();
  const auto covers = enumerate_pure_covers(h.positive, h.negative);
  REQUIRE(covers.size() == 16);

  std::set<std::string> keys;
  for (const auto& c : covers) keys.insert(canonical_key(c));
  CHECK(keys.size() == 16);
  for (int id = 1; id <= 16; ++id) CHECK(keys.count(canonical_key(cover_fixture(id))) == 1);
  CHECK(compare_with_fixture(covers, CoverFixture::builtin()).empty());

  // Sorted by block index lists.
  for (std::size_t i = 1; i < covers.size(); ++i) {
    auto a = blocks_of(covers[i - 1]), b = blocks_of(covers[i]);
    for (auto* x : {&a, &b}) {
      for (auto& blk : *x) std::sort(blk.begin(), blk.end());
      std::sort(x->begin(), x->end());
    }
    CHECK(a < b);
  }
}

TEST_CASE("partition and interiority of every cover") {
  const auto& h = hexagon_points();
  for (const auto& c : enumerate_pure_covers(h.positive, h.negative)) {
    std::vector<std::size_t> used;
    for (const auto& circuit : c.circuits()) {
      std::vector<LatticePoint> v;
      for (auto i : circuit.vertices) {
        used.push_back(i);
        v.push_back(h.positive[i]);
      }
      CHECK(oracle::strictly_inside(v, h.negative));
      CHECK(contains_in_relative_interior(Simplex(v), h.negative));
    }
    std::sort(used.begin(), used.end());
    std::vector<std::size_t> all(10);
    std::iota(all.begin(), all.end(), 0);
    CHECK(used == all);
    CHECK(c.is_pure());
  }
}

TEST_CASE("census of the structural classes") {
  const auto c = census(hexagon_covers());
  CHECK(c.five_segment == 2);
  CHECK(c.special_triangle == 2);
  CHECK(c.row_spanning == 12);
  CHECK(c.other == 0);
}

TEST_CASE("the enumerator depends on its input") {
  const auto& h = hexagon_points();
  std::vector<LatticePoint> without_i1;
  for (std::size_t i = 0; i < 10; ++i) {
    if (i != 8) without_i1.push_back(h.positive[i]);
  }
  CHECK(enumerate_pure_covers(without_i1, h.negative).size() != 16);

  const std::vector<LatticePoint> segment{{0, 1}, {4, 1}};
  const auto one = enumerate_pure_covers(segment, {2, 1});
  REQUIRE(one.size() == 1);
  CHECK(canonical_key(one[0]) == "0-1");
  CHECK(enumerate_pure_covers(std::vector<LatticePoint>{}, {2, 1}).empty());
}

TEST_CASE("the toy quadrilateral has no pure cover and one weighted structure") {
  const std::vector<LatticePoint> toy{{4, 2}, {2, 0}, {0, 1}, {0, 0}};
  CHECK(enumerate_pure_covers(toy, {2, 1}).empty());
  const auto blocks = circuit_blocks(toy, {2, 1});
  CHECK(blocks == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {0, 3}});
}

TEST_CASE("fixture anchors") {
  // CC(9): triangles a4-a2-a6 and a1-a3-a5, segments b1-b2 and i1-i2.
  CHECK(canonical_key(cover_fixture(9)) == "0-2-4|1-3-5|6-7|8-9");
  for (const auto& c : cover_fixture(9).circuits()) {
    if (c.vertices.size() == 3) {
      for (double l : c.lambdas) CHECK(l == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    }
  }
  // Five segments; a6 with i2 in CC(15), with a3 in CC(16).
  CHECK(has_block(cover_fixture(15), {5, 9}));
  CHECK(has_block(cover_fixture(16), {2, 5}));
  for (int id : {15, 16}) {
    CHECK(cover_fixture(id).circuits().size() == 5);
    CHECK(has_block(cover_fixture(id), {0, 3}));
    CHECK(has_block(cover_fixture(id), {1, 4}));
    CHECK(has_block(cover_fixture(id), {6, 7}));
  }
  // CC(3), CC(4) carry the special triangles a1-a2-b2 and a5-a4-b1.
  for (int id : {3, 4}) {
    CHECK(has_block(cover_fixture(id), {0, 1, 7}));
    CHECK(has_block(cover_fixture(id), {4, 3, 6}));
  }
  CHECK(has_block(cover_fixture(4), {2, 8}));
  CHECK(has_block(cover_fixture(4), {5, 9}));
}

TEST_CASE("CC(10) and CC(12) are mirror images") {
  CHECK(mirrored_key(cover_fixture(10)) == canonical_key(cover_fixture(12)));
  CHECK(mirrored_key(cover_fixture(12)) == canonical_key(cover_fixture(10)));
  // The reflection permutes the set of covers.
  std::set<std::string> keys, images;
  for (const auto& c : hexagon_covers()) {
    keys.insert(canonical_key(c));
    images.insert(mirrored_key(c));
  }
  CHECK(keys == images);
}

TEST_CASE("canonical keys") {
  const auto& h = hexagon_points();
  std::mt19937_64 rng(9);
  for (const auto& c : hexagon_covers()) {
    const auto key = canonical_key(c);
    auto blocks = blocks_of(c);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(blocks.begin(), blocks.end(), rng);
      for (auto& b : blocks) std::shuffle(b.begin(), b.end(), rng);
      CHECK(canonical_key(CircuitCover(blocks, h.positive, h.negative)) == key);
    }
    const auto parsed = parse_cover(key, h.positive, h.negative, c.id());
    CHECK(canonical_key(parsed) == key);
    CHECK(parsed.id() == c.id());
  }
  CHECK(canonical_key(cover_fixture(15)) == "0-3|1-4|2-8|5-9|6-7");
}

TEST_CASE("malformed keys and invalid blocks") {
  const auto& h = hexagon_points();
  CHECK_THROWS_AS(parse_cover("0-3|1-", h.positive, h.negative), InvariantError);
  CHECK_THROWS_AS(parse_cover("0-x", h.positive, h.negative), InvariantError);
  CHECK_THROWS_AS(parse_cover("0-12", h.positive, h.negative), InvariantError);
  CHECK_THROWS_AS(parse_cover("0-1", h.positive, h.negative), InvariantError);       // m not interior
  CHECK_THROWS_AS(parse_cover("0-3|0-3", h.positive, h.negative), InvariantError);   // repeated point
  CHECK_THROWS_AS(CircuitCover({{6, 8, 7}}, h.positive, h.negative), InvariantError);
}

TEST_CASE("fixture file handling") {
  const auto& builtin = CoverFixture::builtin();
  CHECK(builtin.entries().size() == 16);
  CHECK(builtin.id_of("0-2-4|1-3-5|6-7|8-9") == 9);
  CHECK_FALSE(builtin.id_of("0-1"));
  const auto again = CoverFixture::parse(builtin.serialize());
  CHECK(again.entries() == builtin.entries());

  CHECK_THROWS_AS(CoverFixture::parse(std::string_view("1 0-3|1-4")), InvariantError);
  CHECK_THROWS_AS(CoverFixture::parse(std::string_view("x: 0-3")), InvariantError);
  CHECK_THROWS_AS(CoverFixture::parse(std::string_view("1: 0-3\n1: 1-4\n")), InvariantError);
  CHECK(CoverFixture::parse(std::string_view("# only a comment\n\n")).entries().empty());

  CHECK_THROWS_AS(cover_fixture(0), DomainError);
  CHECK_THROWS_AS(cover_fixture(17), DomainError);

  auto edited = builtin.entries();
  edited[16] = "0-3|1-4|2-8|5-9|6-7";  // duplicate of 15, drops 16
  std::string text;
  for (const auto& [id, key] : edited) text += std::to_string(id) + ": " + key + "\n";
  const auto& h = hexagon_points();
  const auto diff = compare_with_fixture(enumerate_pure_covers(h.positive, h.negative),
                                         CoverFixture::parse(std::string_view(text)));
  CHECK_FALSE(diff.empty());
  CHECK(diff.unexpected == std::vector<std::string>{"0-3|1-4|2-5|6-7|8-9"});
}

TEST_CASE("labels follow the fixture") {
  const auto& h = hexagon_points();
  auto covers = enumerate_pure_covers(h.positive, h.negative);
  for (const auto& c : covers) CHECK(c.id() == 0);
  label_covers(covers, CoverFixture::builtin());
  std::set<int> ids;
  for (const auto& c : covers) ids.insert(c.id());
  CHECK(ids.size() == 16);
  CHECK(*ids.begin() == 1);
  CHECK(*ids.rbegin() == 16);
  for (int id = 1; id <= 16; ++id) CHECK(hexagon_covers()[id - 1].id() == id);
}

}  // TEST_SUITE
