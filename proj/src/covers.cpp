#include "sonc/covers.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <utility>

#include "sonc/error.hpp"
#include "sonc/generated.hpp"

namespace sonc {

namespace {

using Block = std::vector<std::size_t>;

bool block_contains(std::span<const LatticePoint> points, const Block& block, LatticePoint m) {
  std::vector<LatticePoint> vertices;
  for (auto i : block) vertices.push_back(points[i]);
  if (!Simplex::is_valid(vertices)) return false;
  return contains_in_relative_interior(Simplex(std::move(vertices)), m);
}

std::string block_key(Block block) {
  std::sort(block.begin(), block.end());
  std::string out;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(block[i]);
  }
  return out;
}

// Lexicographic on the index lists, not on their decimal strings.
std::vector<Block> normalized(std::vector<Block> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

std::string key_of_blocks(const std::vector<Block>& blocks) {
  const auto sorted = normalized(blocks);
  std::string out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += '|';
    out += block_key(sorted[i]);
  }
  return out;
}

void extend(std::span<const LatticePoint> points, LatticePoint m, std::vector<bool>& used,
            std::vector<Block>& current, std::vector<std::vector<Block>>& out) {
  auto first = std::find(used.begin(), used.end(), false);
  if (first == used.end()) {
    out.push_back(current);
    return;
  }
  const auto f = static_cast<std::size_t>(first - used.begin());
  used[f] = true;
  const std::size_t n = points.size();
  for (std::size_t j = f + 1; j < n; ++j) {
    if (used[j]) continue;
    used[j] = true;
    Block pair{f, j};
    if (block_contains(points, pair, m)) {
      current.push_back(pair);
      extend(points, m, used, current, out);
      current.pop_back();
    }
    for (std::size_t k = j + 1; k < n; ++k) {
      if (used[k]) continue;
      Block triple{f, j, k};
      if (!block_contains(points, triple, m)) continue;
      used[k] = true;
      current.push_back(triple);
      extend(points, m, used, current, out);
      current.pop_back();
      used[k] = false;
    }
    used[j] = false;
  }
  used[f] = false;
}

}  // namespace

std::vector<Block> circuit_blocks(std::span<const LatticePoint> points, LatticePoint m) {
  std::vector<Block> out;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (block_contains(points, {i, j}, m)) out.push_back({i, j});
      for (std::size_t k = j + 1; k < n; ++k) {
        if (block_contains(points, {i, j, k}, m)) out.push_back({i, j, k});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CircuitCover> enumerate_pure_covers(std::span<const LatticePoint> points,
                                                LatticePoint m) {
  std::vector<std::vector<Block>> partitions;
  if (!points.empty()) {
    std::vector<bool> used(points.size(), false);
    std::vector<Block> current;
    extend(points, m, used, current, partitions);
  }
  for (auto& p : partitions) p = normalized(std::move(p));
  std::sort(partitions.begin(), partitions.end());

  std::vector<CircuitCover> covers;
  covers.reserve(partitions.size());
  for (auto& blocks : partitions) covers.emplace_back(std::move(blocks), points, m);
  return covers;
}

std::string canonical_key(const CircuitCover& cover) {
  std::vector<Block> blocks;
  for (const auto& c : cover.circuits()) blocks.push_back(c.vertices);
  return key_of_blocks(blocks);
}

CircuitCover parse_cover(std::string_view key, std::span<const LatticePoint> points,
                         LatticePoint m, int id) {
  std::vector<Block> blocks;
  Block current;
  std::size_t pos = 0;
  auto fail = [&] { return InvariantError("malformed cover key: '" + std::string(key) + "'"); };
  while (pos <= key.size()) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(key.data() + pos, key.data() + key.size(), value);
    if (ec != std::errc()) throw fail();
    current.push_back(value);
    pos = static_cast<std::size_t>(ptr - key.data());
    if (pos == key.size()) {
      blocks.push_back(std::move(current));
      break;
    }
    if (key[pos] == '|') {
      blocks.push_back(std::move(current));
      current = {};
    } else if (key[pos] != '-') {
      throw fail();
    }
    ++pos;
  }
  return CircuitCover(std::move(blocks), points, m, id);
}

CoverFixture CoverFixture::parse(std::istream& in) {
  CoverFixture fixture;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw InvariantError("fixture line " + std::to_string(line_no) + ": expected 'id: key'");
    }
    int id = 0;
    const auto id_text = line.substr(first, colon - first);
    auto [ptr, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), id);
    if (ec != std::errc() || ptr != id_text.data() + id_text.size()) {
      throw InvariantError("fixture line " + std::to_string(line_no) + ": bad id");
    }
    std::string key = line.substr(colon + 1);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t\r") + 1);
    if (!fixture.entries_.emplace(id, key).second) {
      throw InvariantError("fixture line " + std::to_string(line_no) + ": duplicate id");
    }
  }
  return fixture;
}

CoverFixture CoverFixture::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

const CoverFixture& CoverFixture::builtin() {
  static const CoverFixture fixture = parse(generated::kCoverFixture);
  return fixture;
}

std::optional<int> CoverFixture::id_of(std::string_view key) const {
  for (const auto& [id, k] : entries_) {
    if (k == key) return id;
  }
  return std::nullopt;
}

std::string CoverFixture::serialize() const {
  std::string out;
  for (const auto& [id, key] : entries_) out += std::to_string(id) + ": " + key + "\n";
  return out;
}

void label_covers(std::vector<CircuitCover>& covers, const CoverFixture& fixture) {
  for (auto& c : covers) c.set_id(fixture.id_of(canonical_key(c)).value_or(0));
}

const std::vector<CircuitCover>& hexagon_covers() {
  static const std::vector<CircuitCover> covers = [] {
    const auto& hex = hexagon_points();
    std::vector<CircuitCover> out;
    for (const auto& [id, key] : CoverFixture::builtin().entries()) {
      out.push_back(parse_cover(key, hex.positive, hex.negative, id));
    }
    return out;
  }();
  return covers;
}

const CircuitCover& cover_fixture(int id) {
  const auto& covers = hexagon_covers();
  for (const auto& c : covers) {
    if (c.id() == id) return c;
  }
  throw DomainError("cover id " + std::to_string(id) + " out of range 1.." +
                    std::to_string(covers.size()));
}

CoverCensus census(std::span<const CircuitCover> covers) {
  CoverCensus out;
  for (const auto& cover : covers) {
    bool has_triangle = false;
    bool special = false;
    bool spanning = true;
    for (const auto& c : cover.circuits()) {
      if (c.vertices.size() != 3) continue;
      has_triangle = true;
      std::set<int> rows;
      for (auto v : c.vertices) rows.insert(cover.points()[v].z);
      if (rows.size() < 3) {
        special = true;
        spanning = false;
      }
    }
    if (!has_triangle) {
      ++out.five_segment;
    } else if (special) {
      ++out.special_triangle;
    } else if (spanning) {
      ++out.row_spanning;
    } else {
      ++out.other;
    }
  }
  return out;
}

FixtureDiff compare_with_fixture(std::span<const CircuitCover> covers,
                                 const CoverFixture& fixture) {
  std::set<std::string> enumerated;
  for (const auto& c : covers) enumerated.insert(canonical_key(c));
  FixtureDiff diff;
  for (const auto& [id, key] : fixture.entries()) {
    if (!enumerated.contains(key)) diff.missing.push_back(std::to_string(id) + ": " + key);
  }
  for (const auto& key : enumerated) {
    if (!fixture.id_of(key)) diff.unexpected.push_back(key);
  }
  return diff;
}

}  // namespace sonc
