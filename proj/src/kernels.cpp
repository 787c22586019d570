#include <atomic>

#include "bruhat/descent.hpp"

namespace bruhat {

namespace {

std::vector<std::uint32_t> reference_targets(const DescentSystem& system) {
  const ParabolicQuotient& q = system.quotient();
  const WeylGroup& group = q.group();
  std::vector<WeylElement> gens;
  for (std::size_t r : system.generators()) gens.push_back(q.element(r));
  std::vector<std::uint32_t> out;
  out.reserve(q.size() * gens.size());
  for (std::size_t w = 0; w < q.size(); ++w) {
    const WeylElement we = q.element(w);
    for (const WeylElement& r : gens) {
      WeylElement m = min_coset_rep(group.multiply(we, r), q.j(), group);
      out.push_back(static_cast<std::uint32_t>(q.index_of(m)));
    }
  }
  return out;
}

std::vector<std::uint32_t> orbit_targets(const DescentSystem& system, bool parallel) {
  const ParabolicQuotient& q = system.quotient();
  const WeylGroup& group = q.group();
  const int n = group.rank();
  const std::size_t m = system.size();
  const long long rows = static_cast<long long>(q.size());

  std::vector<int> starts(m * n);
  for (std::size_t g = 0; g < m; ++g) {
    auto p = q.point(system.generators()[g]);
    for (int i = 0; i < n; ++i) starts[g * n + i] = p[i];
  }

  std::vector<std::uint32_t> out(q.size() * m);
  std::atomic<bool> missing{false};

#pragma omp parallel if (parallel)
  {
    std::vector<int> buf(m * n);
    std::vector<Node> letters;
#pragma omp for schedule(dynamic, 256)
    for (long long w = 0; w < rows; ++w) {
      letters.clear();
      for (std::size_t k = static_cast<std::size_t>(w); k != 0; k = q.parent(k))
        letters.push_back(q.letter(k));
      buf = starts;
      for (std::size_t g = 0; g < m; ++g) {
        std::span<int> v(buf.data() + g * n, n);
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) group.reflect(*it, v);
        auto idx = q.find(v);
        if (!idx) {
          missing = true;
          continue;
        }
        out[static_cast<std::size_t>(w) * m + g] = static_cast<std::uint32_t>(*idx);
      }
    }
  }
  if (missing) throw std::logic_error("coset image missing from quotient");
  return out;
}

}  // namespace

std::vector<std::uint32_t> coset_targets(const DescentSystem& system, Execution exec) {
  switch (exec) {
    case Execution::Reference: return reference_targets(system);
    case Execution::Serial: return orbit_targets(system, false);
    case Execution::Parallel: return orbit_targets(system, true);
  }
  return {};
}

}  // namespace bruhat
