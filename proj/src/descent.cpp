#include "bruhat/descent.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "bruhat/smoothness.hpp"

namespace bruhat {

DescentSystem::DescentSystem(std::shared_ptr<const ParabolicQuotient> quotient,
                             std::vector<Node> classes,
                             std::vector<std::vector<std::size_t>> parts)
    : quotient_(std::move(quotient)), classes_(std::move(classes)), parts_(std::move(parts)) {
  for (std::size_t c = 0; c < parts_.size(); ++c)
    for (std::size_t r : parts_[c]) {
      generators_.push_back(r);
      generator_class_.push_back(c);
    }
}

std::optional<std::size_t> DescentSystem::class_position(Node s) const {
  auto it = std::find(classes_.begin(), classes_.end(), s);
  if (it == classes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - classes_.begin());
}

std::optional<std::size_t> DescentSystem::generator_position(std::size_t quotient_index) const {
  auto it = std::find(generators_.begin(), generators_.end(), quotient_index);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

namespace {

std::vector<Weight> class_orbit(const WeylGroup& group, NodeSet j, Node s, std::uint64_t budget) {
  Weight start = simple_reflection_apply(s, lambda_for(j, group.rank()), group.diagram());
  return full_orbit(group, start, j, budget);
}

}  // namespace

DescentSystem descent_system(std::shared_ptr<const ParabolicQuotient> quotient) {
  const WeylGroup& group = quotient->group();
  const NodeSet j = quotient->j();
  std::vector<Node> classes = (group.diagram().nodes() - j).nodes();
  std::vector<std::vector<std::size_t>> parts;
  for (Node s : classes) {
    std::vector<std::size_t> part;
    for (const Weight& p : class_orbit(group, j, s, quotient->size())) {
      auto idx = quotient->find(p);
      if (!idx) throw std::logic_error("class orbit point missing from quotient");
      part.push_back(*idx);
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return DescentSystem(std::move(quotient), std::move(classes), std::move(parts));
}

DescentSystem descent_system(std::shared_ptr<const WeylGroup> group, NodeSet j,
                             std::uint64_t budget) {
  return descent_system(enumerate_quotient(std::move(group), j, budget));
}

std::vector<std::size_t> class_sizes(const WeylGroup& group, NodeSet j, std::uint64_t budget) {
  if (j == group.diagram().nodes() || !j.subset_of(group.diagram().nodes()))
    throw std::invalid_argument("J must be a proper subset of S");
  std::vector<std::size_t> out;
  for (Node s : (group.diagram().nodes() - j).nodes())
    out.push_back(class_orbit(group, j, s, budget).size());
  return out;
}

std::vector<WeylElement> chain_formula_SJs(NodeSet j, Node s, const WeylGroup& group) {
  const DynkinDiagram& d = group.diagram();
  if (j.contains(s)) throw std::invalid_argument("s must lie outside J");
  if (!is_combinatorially_smooth(j, d).smooth)
    throw std::invalid_argument("J = " + format_node_set(j) + " is not combinatorially smooth");
  NodeSet touching = d.neighbors(s) & j;
  std::vector<WeylElement> out{group.generator(s)};
  if (touching.empty()) return out;

  NodeSet c;
  for (NodeSet comp : connected_components(j, d))
    if (comp.contains(touching.first())) c = comp;
  std::vector<Node> word{s};
  Node prev = s;
  Node cur = touching.first();
  while (true) {
    word.insert(word.begin(), cur);
    out.push_back(group.from_word(word));
    NodeSet next = (d.neighbors(cur) & c).without(prev);
    if (next.empty()) break;
    prev = cur;
    cur = next.first();
  }
  return out;
}

Direction ascent_descent(std::size_t w, std::size_t r, const DescentSystem& system) {
  if (!system.generator_position(r)) throw std::invalid_argument("r is not in S^J");
  const ParabolicQuotient& q = system.quotient();
  Weight v = q.point_weight(r);
  q.act(w, v);
  auto m = q.find(v);
  if (!m) throw std::logic_error("coset image missing from quotient");
  if (q.length(*m) == q.length(w)) throw std::logic_error("dichotomy violated");
  return q.length(*m) < q.length(w) ? Direction::Descent : Direction::Ascent;
}

AugmentedPoset::AugmentedPoset(DescentSystem system, Execution exec)
    : system_(std::move(system)), stride_(system_.size()), classes_(system_.classes().size()),
      targets_(coset_targets(system_, exec)) {
  const std::size_t n = size();
  nu_.assign(n * classes_, 0);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t g = 0; g < stride_; ++g)
      if (is_ascent(w, g)) ++nu_[w * classes_ + system_.class_of_generator(g)];
}

int AugmentedPoset::nu_total(std::size_t w) const {
  int total = 0;
  for (std::size_t c = 0; c < classes_; ++c) total += nu(w, c);
  return total;
}

std::vector<std::size_t> AugmentedPoset::ascent_set(std::size_t w) const {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < stride_; ++g)
    if (is_ascent(w, g)) out.push_back(g);
  return out;
}

std::vector<std::size_t> AugmentedPoset::descent_set(std::size_t w) const {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < stride_; ++g)
    if (!is_ascent(w, g)) out.push_back(g);
  return out;
}

int nu(std::size_t w, Node s, const AugmentedPoset& poset) {
  auto c = poset.system().class_position(s);
  if (!c) throw std::invalid_argument("s must lie outside J");
  return poset.nu(w, *c);
}

std::uint64_t MultiPolynomial::coefficient(const std::vector<int>& exponent) const {
  auto it = terms.find(exponent);
  return it == terms.end() ? 0 : it->second;
}

std::uint64_t MultiPolynomial::total() const {
  std::uint64_t sum = 0;
  for (const auto& [e, c] : terms) sum += c;
  return sum;
}

std::vector<std::uint64_t> MultiPolynomial::specialize_diagonal() const {
  std::vector<std::uint64_t> out;
  for (const auto& [e, c] : terms) {
    const auto deg = static_cast<std::size_t>(std::accumulate(e.begin(), e.end(), 0));
    if (out.size() <= deg) out.resize(deg + 1, 0);
    out[deg] += c;
  }
  return out;
}

MultiPolynomial h_statistic_polynomial(const AugmentedPoset& poset) {
  MultiPolynomial h{poset.system().classes(), {}};
  const std::size_t k = h.variables.size();
  std::vector<int> exponent(k);
  for (std::size_t w = 0; w < poset.size(); ++w) {
    for (std::size_t c = 0; c < k; ++c) exponent[c] = poset.nu(w, c);
    ++h.terms[exponent];
  }
  return h;
}

EdgeSet edges(const AugmentedPoset& poset) {
  EdgeSet out;
  std::unordered_set<std::uint64_t> pairs;
  const auto& system = poset.system();
  for (std::size_t w = 0; w < poset.size(); ++w)
    for (std::size_t g = 0; g < system.size(); ++g) {
      if (!poset.is_ascent(w, g)) continue;
      const std::size_t v = poset.target(w, g);
      out.edges.push_back({w, v, system.classes()[system.class_of_generator(g)], g});
      const std::uint64_t lo = std::min(w, v);
      const std::uint64_t hi = std::max(w, v);
      pairs.insert((lo << 32) | hi);
    }
  out.distinct_pairs = pairs.size();
  return out;
}

}  // namespace bruhat
