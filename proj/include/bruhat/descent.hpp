#pragma once

// The descent system (W^J, S^J), relative ascents and descents, the
// nu-statistics of the augmented poset, H polynomials and edges.
//
// The order on W^J used throughout is the ordinary Bruhat order restricted
// to W^J. For r in S^J and w in W^J, w and (wr)_0 are always comparable and
// distinct, and (wr)_0 < w exactly when l((wr)_0) < l(w), so relative
// descents are decided by comparing lengths.

#include <map>
#include <memory>
#include <optional>

#include "bruhat/parabolic.hpp"

namespace bruhat {

class DescentSystem {
 public:
  DescentSystem(std::shared_ptr<const ParabolicQuotient> quotient, std::vector<Node> classes,
                std::vector<std::vector<std::size_t>> parts);

  const ParabolicQuotient& quotient() const { return *quotient_; }
  std::shared_ptr<const ParabolicQuotient> quotient_ptr() const { return quotient_; }
  const WeylGroup& group() const { return quotient_->group(); }

  /// S \ J in increasing order; "class position" indexes this list.
  const std::vector<Node>& classes() const { return classes_; }
  std::optional<std::size_t> class_position(Node s) const;
  /// S^J_s as sorted quotient indices.
  const std::vector<std::size_t>& part(std::size_t class_pos) const { return parts_[class_pos]; }

  /// S^J listed class by class; "generator position" indexes this list.
  const std::vector<std::size_t>& generators() const { return generators_; }
  std::size_t class_of_generator(std::size_t g) const { return generator_class_[g]; }
  std::size_t size() const { return generators_.size(); }
  std::optional<std::size_t> generator_position(std::size_t quotient_index) const;

 private:
  std::shared_ptr<const ParabolicQuotient> quotient_;
  std::vector<Node> classes_;
  std::vector<std::vector<std::size_t>> parts_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> generator_class_;
};

/// S^J_s = {(us)_0 : u in W_J} for each s in S \ J, found as the W_J-orbit
/// of s(lambda_J) inside W . lambda_J.
DescentSystem descent_system(std::shared_ptr<const ParabolicQuotient> quotient);
DescentSystem descent_system(std::shared_ptr<const WeylGroup> group, NodeSet j,
                             std::uint64_t budget = kDefaultBudget);

/// |S^J_s| for each s in S \ J without enumerating W^J. Works for every
/// type, since each orbit has at most min(|W_J|, |W^J|) points.
std::vector<std::size_t> class_sizes(const WeylGroup& group, NodeSet j,
                                     std::uint64_t budget = kDefaultBudget);

/// For combinatorially smooth J: {s} when s commutes with J, otherwise
/// s, t1 s, t2 t1 s, ... along the type-A chain of J attached to s.
/// Throws std::invalid_argument if J is not smooth or s is in J.
std::vector<WeylElement> chain_formula_SJs(NodeSet j, Node s, const WeylGroup& group);

enum class Direction { Ascent, Descent };

/// Compares (wr)_0 with w. `w` and `r` are quotient indices; r must lie
/// in S^J (std::invalid_argument otherwise).
Direction ascent_descent(std::size_t w, std::size_t r, const DescentSystem& system);

enum class Execution { Reference, Serial, Parallel };

/// Dense table: entry w * |S^J| + g is the quotient index of (w r_g)_0.
///
/// Reference multiplies group elements and strips right descents in J;
/// Serial/Parallel act on lambda_J-images and look the result up, the latter
/// with one OpenMP task per row.
std::vector<std::uint32_t> coset_targets(const DescentSystem& system, Execution exec);

/// (W^J, <=, {nu_s}) with the target table it was computed from.
class AugmentedPoset {
 public:
  explicit AugmentedPoset(DescentSystem system, Execution exec = Execution::Parallel);

  const DescentSystem& system() const { return system_; }
  const ParabolicQuotient& quotient() const { return system_.quotient(); }
  std::size_t size() const { return system_.quotient().size(); }

  std::size_t target(std::size_t w, std::size_t g) const { return targets_[w * stride_ + g]; }
  bool is_ascent(std::size_t w, std::size_t g) const {
    return quotient().length(target(w, g)) > quotient().length(w);
  }
  /// nu_s(w) with s given by class position.
  int nu(std::size_t w, std::size_t class_pos) const { return nu_[w * classes_ + class_pos]; }
  int nu_total(std::size_t w) const;
  /// Generator positions of A^J(w) / D^J(w).
  std::vector<std::size_t> ascent_set(std::size_t w) const;
  std::vector<std::size_t> descent_set(std::size_t w) const;

  const std::vector<std::uint32_t>& targets() const { return targets_; }

 private:
  DescentSystem system_;
  std::size_t stride_;
  std::size_t classes_;
  std::vector<std::uint32_t> targets_;
  std::vector<int> nu_;
};

/// nu_s(w) for a simple reflection s in S \ J.
int nu(std::size_t w, Node s, const AugmentedPoset& poset);

/// Polynomial in one variable t_s per s in S \ J.
struct MultiPolynomial {
  std::vector<Node> variables;
  std::map<std::vector<int>, std::uint64_t> terms;

  std::uint64_t coefficient(const std::vector<int>& exponent) const;
  std::uint64_t total() const;
  /// Coefficients of H(t,...,t), lowest degree first.
  std::vector<std::uint64_t> specialize_diagonal() const;
};

MultiPolynomial h_statistic_polynomial(const AugmentedPoset& poset);

struct Edge {
  std::size_t lower;
  std::size_t upper;
  Node cls;
  std::size_t generator;
};

struct EdgeSet {
  std::vector<Edge> edges;
  /// Number of distinct unordered vertex pairs among `edges`.
  std::size_t distinct_pairs = 0;
};

/// One edge (u, (ur)_0) per u in W^J and r in A^J(u).
EdgeSet edges(const AugmentedPoset& poset);

}  // namespace bruhat
