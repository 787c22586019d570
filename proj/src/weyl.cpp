#include "bruhat/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace bruhat {

Weight simple_reflection_apply(Node i, Weight v, const DynkinDiagram& diagram) {
  const int c = v.at(i);
  for (int j = 0; j < diagram.rank(); ++j) v[j] -= c * diagram.cartan(i, j);
  return v;
}

namespace {

// Closes the simple roots under s_i(b) = b - <b, alpha_i^vee> alpha_i, where
// <alpha_j, alpha_i^vee> = pairing[j][i].
std::vector<std::vector<int>> positive_system(const std::vector<std::vector<int>>& pairing) {
  const int n = static_cast<int>(pairing.size());
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  std::vector<std::vector<int>> out;
  while (!queue.empty()) {
    std::vector<int> b = queue.front();
    queue.pop_front();
    out.push_back(b);
    for (int i = 0; i < n; ++i) {
      int c = 0;
      for (int j = 0; j < n; ++j) c += b[j] * pairing[j][i];
      if (c >= 0) continue;  // only climb
      std::vector<int> next = b;
      next[i] -= c;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    return ha != hb ? ha < hb : a > b;
  });
  return out;
}

}  // namespace

RootTable::RootTable(const DynkinDiagram& diagram) {
  const auto& a = diagram.cartan_matrix();
  const int n = diagram.rank();
  std::vector<std::vector<int>> transposed(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) transposed[i][j] = a[j][i];
  roots_ = positive_system(a);
  coroots_ = positive_system(transposed);
  for (const auto& c : coroots_) {
    int h = 0;
    for (int x : c) h += x;
    max_height_ = std::max(max_height_, h);
  }
}

std::size_t WeylElementHash::operator()(const WeylElement& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int x : w.key()) h = (h ^ static_cast<std::size_t>(x + 128)) * 1099511628211ULL;
  return h;
}

WeylGroup::WeylGroup(DiagramType type) : diagram_(type), roots_(diagram_) {}

Weight WeylGroup::apply(const WeylElement& w, Weight v) const {
  check(w);
  apply_word(w.word(), v);
  return v;
}

int WeylGroup::length_of_key(std::span<const int> key) const {
  int len = 0;
  for (const auto& c : roots_.positive_coroots()) {
    int pairing = 0;
    for (int i = 0; i < rank(); ++i) pairing += c[i] * key[i];
    if (pairing < 0) ++len;
  }
  return len;
}

WeylElement WeylGroup::identity() const { return WeylElement(type(), rho(), {}, 0); }

WeylElement WeylGroup::generator(Node i) const {
  if (i < 0 || i >= rank()) throw std::invalid_argument("generator index out of range");
  Weight key = rho();
  reflect(i, key);
  return WeylElement(type(), std::move(key), {i}, 1);
}

WeylElement WeylGroup::from_word(std::span<const Node> word) const {
  Weight key = rho();
  for (Node i : word)
    if (i < 0 || i >= rank()) throw std::invalid_argument("word letter out of range");
  apply_word(word, key);
  return from_key(std::move(key));
}

WeylElement WeylGroup::from_key(Weight key) const {
  if (static_cast<int>(key.size()) != rank()) throw std::invalid_argument("key has wrong rank");
  std::vector<Node> word;
  Weight cur = key;
  const std::size_t limit = roots_.size();
  while (true) {
    auto neg = std::find_if(cur.begin(), cur.end(), [](int x) { return x < 0; });
    if (neg == cur.end()) break;
    if (word.size() >= limit) throw std::invalid_argument("key is not in the orbit of rho");
    Node i = static_cast<Node>(neg - cur.begin());
    word.push_back(i);
    reflect(i, cur);
  }
  if (cur != rho()) throw std::invalid_argument("key is not in the orbit of rho");
  const int len = length_of_key(key);
  return WeylElement(type(), std::move(key), std::move(word), len);
}

void WeylGroup::check(const WeylElement& w) const {
  if (w.diagram_type() != type())
    throw std::invalid_argument("element of " + w.diagram_type().name() + " used with " +
                                type().name());
}

WeylElement WeylGroup::multiply(const WeylElement& u, const WeylElement& w) const {
  check(u);
  check(w);
  Weight key = w.key();
  apply_word(u.word(), key);
  return from_key(std::move(key));
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
  check(w);
  std::vector<Node> reversed(w.word().rbegin(), w.word().rend());
  Weight key = rho();
  apply_word(reversed, key);
  return from_key(std::move(key));
}

bool WeylGroup::is_right_descent(const WeylElement& w, Node s) const {
  return multiply(w, generator(s)).length() < w.length();
}

bool WeylGroup::bruhat_leq(const WeylElement& u, const WeylElement& v) const {
  check(u);
  check(v);
  if (u.length() > v.length()) return false;
  // kappa tracks u^{-1}(rho); s is a right descent of u iff kappa_s < 0.
  Weight kappa = rho();
  for (Node i : u.word()) reflect(i, kappa);
  int remaining = u.length();
  const auto& word = v.word();
  for (auto it = word.rbegin(); it != word.rend() && remaining > 0; ++it) {
    if (kappa[*it] < 0) {
      reflect(*it, kappa);
      --remaining;
    }
    if (static_cast<long>(word.rend() - it) - 1 < remaining) return false;
  }
  return remaining == 0;
}

}  // namespace bruhat
