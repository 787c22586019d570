#include "bruhat/orbit.hpp"

#include <string>

namespace bruhat {

PointTable::PointTable(int dim) : dim_(dim), slots_(64, kEmpty) {}

std::uint64_t PointTable::hash(std::span<const int> point) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (int x : point) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint8_t>(x)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return h;
}

bool PointTable::equal(std::size_t index, std::span<const int> point) const {
  const std::int8_t* p = coords_.data() + index * dim_;
  for (int i = 0; i < dim_; ++i)
    if (p[i] != point[i]) return false;
  return true;
}

void PointTable::grow() {
  std::vector<std::uint32_t> next(slots_.size() * 2, kEmpty);
  const std::size_t mask = next.size() - 1;
  std::vector<int> buf(dim_);
  for (std::uint32_t idx : slots_) {
    if (idx == kEmpty) continue;
    auto p = (*this)[idx];
    for (int i = 0; i < dim_; ++i) buf[i] = p[i];
    std::size_t s = hash(buf) & mask;
    while (next[s] != kEmpty) s = (s + 1) & mask;
    next[s] = idx;
  }
  slots_.swap(next);
}

std::pair<std::size_t, bool> PointTable::insert(std::span<const int> point) {
  if ((count_ + 1) * 2 > slots_.size()) grow();
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash(point) & mask;
  while (slots_[s] != kEmpty) {
    if (equal(slots_[s], point)) return {slots_[s], false};
    s = (s + 1) & mask;
  }
  for (int x : point)
    if (x < -128 || x > 127) throw std::overflow_error("orbit coordinate exceeds int8 range");
  slots_[s] = static_cast<std::uint32_t>(count_);
  for (int x : point) coords_.push_back(static_cast<std::int8_t>(x));
  return {count_++, true};
}

std::optional<std::size_t> PointTable::find(std::span<const int> point) const {
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash(point) & mask;
  while (slots_[s] != kEmpty) {
    if (equal(slots_[s], point)) return slots_[s];
    s = (s + 1) & mask;
  }
  return std::nullopt;
}

UpwardOrbit upward_orbit(const WeylGroup& group, std::span<const int> start, NodeSet mask,
                         std::uint64_t budget) {
  const int n = group.rank();
  UpwardOrbit orbit{PointTable(n), {}, {}, {}};
  orbit.points.insert(start);
  orbit.parent.push_back(0);
  orbit.letter.push_back(-1);
  orbit.depth.push_back(0);
  const std::vector<Node> gens = mask.nodes();
  std::vector<int> cur(n);
  for (std::size_t k = 0; k < orbit.points.size(); ++k) {
    for (Node i : gens) {
      auto p = orbit.points[k];
      if (p[i] <= 0) continue;
      for (int j = 0; j < n; ++j) cur[j] = p[j];
      group.reflect(i, cur);
      auto [idx, inserted] = orbit.points.insert(cur);
      if (!inserted) continue;
      if (orbit.points.size() > budget)
        throw BudgetExceeded("orbit enumeration exceeded budget of " + std::to_string(budget) +
                             " points");
      orbit.parent.push_back(static_cast<std::uint32_t>(k));
      orbit.letter.push_back(static_cast<std::int8_t>(i));
      orbit.depth.push_back(static_cast<std::uint16_t>(orbit.depth[k] + 1));
    }
  }
  return orbit;
}

std::vector<Weight> full_orbit(const WeylGroup& group, std::span<const int> start, NodeSet mask,
                               std::uint64_t budget) {
  const int n = group.rank();
  PointTable table(n);
  table.insert(start);
  const std::vector<Node> gens = mask.nodes();
  std::vector<int> cur(n);
  for (std::size_t k = 0; k < table.size(); ++k) {
    for (Node i : gens) {
      auto p = table[k];
      if (p[i] == 0) continue;
      for (int j = 0; j < n; ++j) cur[j] = p[j];
      group.reflect(i, cur);
      if (table.insert(cur).second && table.size() > budget)
        throw BudgetExceeded("orbit enumeration exceeded budget of " + std::to_string(budget) +
                             " points");
    }
  }
  std::vector<Weight> out(table.size(), Weight(n));
  for (std::size_t k = 0; k < table.size(); ++k)
    for (int j = 0; j < n; ++j) out[k][j] = table[k][j];
  return out;
}

}  // namespace bruhat
