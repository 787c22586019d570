#pragma once

// Weyl group elements as images of rho, lengths by inversion counting and
// the Bruhat order.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bruhat/dynkin.hpp"

namespace bruhat {

/// Integer coordinates in the fundamental-weight basis.
using Weight = std::vector<int>;

/// s_i(v) = v - v_i * (row i of the Cartan matrix).
Weight simple_reflection_apply(Node i, Weight v, const DynkinDiagram& diagram);

/// Positive roots (simple-root basis) and positive coroots (simple-coroot
/// basis), generated by closing the simple roots under simple reflections.
class RootTable {
 public:
  explicit RootTable(const DynkinDiagram& diagram);

  const std::vector<std::vector<int>>& positive_roots() const { return roots_; }
  const std::vector<std::vector<int>>& positive_coroots() const { return coroots_; }
  std::size_t size() const { return roots_.size(); }
  /// Largest coefficient sum among positive coroots; bounds |<w(lambda), alpha^vee>|
  /// for 0/1 weights lambda.
  int max_coroot_height() const { return max_height_; }

 private:
  std::vector<std::vector<int>> roots_;
  std::vector<std::vector<int>> coroots_;
  int max_height_ = 0;
};

/// An element w of W, keyed by w(rho) with rho = (1,...,1).
///
/// The stored word is the canonical reduced word obtained by stripping the
/// lowest left descent at each step; w = s_{word[0]} s_{word[1]} ...
class WeylElement {
 public:
  DiagramType diagram_type() const { return type_; }
  const Weight& key() const { return key_; }
  const std::vector<Node>& word() const { return word_; }
  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.type_ == b.type_ && a.key_ == b.key_;
  }

 private:
  friend class WeylGroup;
  WeylElement(DiagramType type, Weight key, std::vector<Node> word, int length)
      : type_(type), key_(std::move(key)), word_(std::move(word)), length_(length) {}

  DiagramType type_;
  Weight key_;
  std::vector<Node> word_;
  int length_ = 0;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept;
};

/// Immutable Cartan and root data for one diagram.
class WeylGroup {
 public:
  explicit WeylGroup(DiagramType type);

  const DynkinDiagram& diagram() const { return diagram_; }
  DiagramType type() const { return diagram_.type(); }
  int rank() const { return diagram_.rank(); }
  const RootTable& roots() const { return roots_; }
  std::uint64_t order() const { return weyl_group_order(type()); }

  Weight rho() const { return Weight(rank(), 1); }

  /// In-place simple reflection in fundamental-weight coordinates.
  void reflect(Node i, std::span<int> v) const {
    const int c = v[i];
    if (c == 0) return;
    const auto& row = diagram_.cartan_matrix()[i];
    for (int j = 0; j < rank(); ++j) v[j] -= c * row[j];
  }

  /// Applies s_{word[0]} ... s_{word[k-1]} to v (rightmost letter first).
  void apply_word(std::span<const Node> word, std::span<int> v) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) reflect(*it, v);
  }
  Weight apply(const WeylElement& w, Weight v) const;

  /// Number of positive coroots pairing negatively with the key; equals the
  /// number of positive roots sent to negative roots.
  int length_of_key(std::span<const int> key) const;

  WeylElement identity() const;
  WeylElement generator(Node i) const;
  /// Any word, reduced or not.
  WeylElement from_word(std::span<const Node> word) const;
  /// Throws std::invalid_argument when the key is not in the W-orbit of rho.
  WeylElement from_key(Weight key) const;

  /// Throws std::invalid_argument on a diagram mismatch.
  WeylElement multiply(const WeylElement& u, const WeylElement& w) const;
  WeylElement inverse(const WeylElement& w) const;
  bool is_right_descent(const WeylElement& w, Node s) const;

  /// u <= v in the Bruhat order. Greedy right-to-left scan over the reduced
  /// word of v: if s is the last letter and us < u, replace u by us; drop s
  /// from v; at the end u <= v iff u became the identity.
  bool bruhat_leq(const WeylElement& u, const WeylElement& v) const;

 private:
  void check(const WeylElement& w) const;

  DynkinDiagram diagram_;
  RootTable roots_;
};

}  // namespace bruhat
