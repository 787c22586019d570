#pragma once

// Flat storage for W-orbit points with an open-addressing index, plus the
// breadth-first orbit sweeps built on it.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bruhat/weyl.hpp"

namespace bruhat {

/// Raised when an enumeration would exceed its point budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 5'000'000;

/// Points with int8 coordinates, deduplicated. Reads are thread-safe.
class PointTable {
 public:
  explicit PointTable(int dim);

  int dim() const { return dim_; }
  std::size_t size() const { return count_; }
  std::span<const std::int8_t> operator[](std::size_t i) const {
    return {coords_.data() + i * dim_, static_cast<std::size_t>(dim_)};
  }

  /// Returns (index, inserted).
  std::pair<std::size_t, bool> insert(std::span<const int> point);
  std::optional<std::size_t> find(std::span<const int> point) const;

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffU;

  std::uint64_t hash(std::span<const int> point) const;
  bool equal(std::size_t index, std::span<const int> point) const;
  void grow();

  int dim_;
  std::size_t count_ = 0;
  std::vector<std::int8_t> coords_;
  std::vector<std::uint32_t> slots_;
};

/// Breadth-first sweep of W_mask . start that only follows length-increasing
/// steps (start must be dominant for the generators in `mask`). Each point
/// records the letter and parent of its tree edge, so point k is reached by
/// s_letter[k] applied to point parent[k].
struct UpwardOrbit {
  PointTable points;
  std::vector<std::uint32_t> parent;
  std::vector<std::int8_t> letter;
  std::vector<std::uint16_t> depth;
};

UpwardOrbit upward_orbit(const WeylGroup& group, std::span<const int> start, NodeSet mask,
                         std::uint64_t budget);

/// All points of W_mask . start, in discovery order, for any start.
std::vector<Weight> full_orbit(const WeylGroup& group, std::span<const int> start, NodeSet mask,
                               std::uint64_t budget);

}  // namespace bruhat
