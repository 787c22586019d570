#include "bruhat/io.hpp"

#include <sstream>

namespace bruhat::io {

json labels(NodeSet set) { return node_labels(set); }

json word(const std::vector<Node>& w) {
  json out = json::array();
  for (Node s : w) out.push_back(s + 1);
  return out;
}

std::string word_text(const std::vector<Node>& w) {
  if (w.empty()) return "1";
  std::string s;
  for (Node n : w) s += "s" + std::to_string(n + 1);
  return s;
}

json diagram_json(const DynkinDiagram& d) {
  return {{"type", d.type().name()},
          {"rank", d.rank()},
          {"cartan", d.cartan_matrix()},
          {"end_nodes", labels(d.end_nodes())},
          {"order", weyl_group_order(d.type())}};
}

namespace {

json element_json(const ParabolicQuotient& q, std::size_t i) {
  return {{"index", i}, {"word", word(q.word(i))}, {"length", q.length(i)}};
}

std::string exponent_key(const std::vector<int>& e) {
  std::string s = "[";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + "]";
}

}  // namespace

json quotient_json(const ParabolicQuotient& q) {
  json elements = json::array();
  for (std::size_t i = 0; i < q.size(); ++i) elements.push_back(element_json(q, i));
  return {{"type", q.diagram().type().name()},
          {"J", labels(q.j())},
          {"size", q.size()},
          {"elements", elements}};
}

json descent_system_json(const DescentSystem& sys) {
  const auto& q = sys.quotient();
  json classes = json::array();
  for (std::size_t c = 0; c < sys.classes().size(); ++c) {
    json part = json::array();
    for (std::size_t r : sys.part(c)) part.push_back(element_json(q, r));
    classes.push_back({{"s", sys.classes()[c] + 1}, {"elements", part}});
  }
  return {{"type", q.diagram().type().name()},
          {"J", labels(q.j())},
          {"size", sys.size()},
          {"classes", classes}};
}

json ascents_json(const AugmentedPoset& poset) {
  const auto& q = poset.quotient();
  const auto& sys = poset.system();
  json rows = json::array();
  for (std::size_t w = 0; w < poset.size(); ++w) {
    json asc = json::array();
    json desc = json::array();
    for (std::size_t g : poset.ascent_set(w)) asc.push_back(word(q.word(sys.generators()[g])));
    for (std::size_t g : poset.descent_set(w)) desc.push_back(word(q.word(sys.generators()[g])));
    json nu = json::object();
    for (std::size_t c = 0; c < sys.classes().size(); ++c)
      nu[std::to_string(sys.classes()[c] + 1)] = poset.nu(w, c);
    rows.push_back({{"index", w},
                    {"word", word(q.word(w))},
                    {"ascents", asc},
                    {"descents", desc},
                    {"nu", nu}});
  }
  return {{"type", q.diagram().type().name()}, {"J", labels(q.j())}, {"rows", rows}};
}

json hpoly_json(const MultiPolynomial& h) {
  json vars = json::array();
  for (Node s : h.variables) vars.push_back(s + 1);
  json coeffs = json::object();
  for (const auto& [e, c] : h.terms) coeffs[exponent_key(e)] = c;
  return {{"variables", vars}, {"coefficients", coeffs}, {"diagonal", h.specialize_diagonal()}};
}

json edges_json(const AugmentedPoset& poset, const EdgeSet& es) {
  const auto& q = poset.quotient();
  json vertices = json::array();
  for (std::size_t i = 0; i < q.size(); ++i) vertices.push_back(element_json(q, i));
  json list = json::array();
  for (const auto& e : es.edges)
    list.push_back({{"lower", e.lower}, {"upper", e.upper}, {"class", e.cls + 1}});
  return {{"type", q.diagram().type().name()},
          {"J", labels(q.j())},
          {"vertices", vertices},
          {"edges", list},
          {"pairs", es.edges.size()},
          {"distinct", es.distinct_pairs}};
}

json smooth_json(const SmoothnessReport& report) {
  json v = json::array();
  for (const auto& x : report.violations)
    v.push_back({{"s", x.s + 1}, {"kind", to_string(x.kind)}, {"nodes", labels(x.component)}});
  return {{"J", labels(report.j)}, {"smooth", report.smooth}, {"violations", v}};
}

json smooth_enum_json(const DynkinDiagram& d) {
  const auto subsets = enumerate_smooth(d);
  json list = json::array();
  for (NodeSet j : subsets) list.push_back(labels(j));
  json groups = json::array();
  for (const auto& g : group_by_end_nodes(subsets, d)) {
    json members = json::array();
    for (NodeSet j : g.subsets) members.push_back(labels(j));
    groups.push_back({{"end_nodes", labels(g.end_nodes)}, {"subsets", members}});
  }
  const auto diff = diff_against_published(d);
  json only_c = json::array();
  json only_p = json::array();
  json flagged = json::array();
  for (NodeSet j : diff.only_computed) only_c.push_back(labels(j));
  for (NodeSet j : diff.only_published) only_p.push_back(labels(j));
  for (NodeSet j : flagged_published_entries(d.type())) flagged.push_back(labels(j));
  return {{"type", d.type().name()},
          {"smooth", list},
          {"groups", groups},
          {"published_diff",
           {{"only_computed", only_c}, {"only_published", only_p}, {"flagged", flagged}}}};
}

json lattice_json(const CrossSectionLattice& lattice) {
  json members = json::array();
  for (const auto& m : lattice.members)
    members.push_back(
        {{"I", labels(m.i)}, {"I_star", labels(m.i_star)}, {"orbit_size", m.orbit_size}});
  return {{"type", lattice.type.name()}, {"J", labels(lattice.j)}, {"members", members}};
}

json verify_json(const VerifyReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json x = {{"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty()) x["detail"] = c.detail;
    if (c.informational) x["informational"] = true;
    checks.push_back(x);
  }
  return {{"ok", report.ok()}, {"checks", checks}};
}

std::string edges_dot(const AugmentedPoset& poset, const EdgeSet& es) {
  const auto& q = poset.quotient();
  std::ostringstream out;
  out << "digraph bruhat {\n";
  for (std::size_t i = 0; i < q.size(); ++i)
    out << "  v" << i << " [label=\"" << word_text(q.word(i)) << "\"];\n";
  for (const auto& e : es.edges)
    out << "  v" << e.lower << " -> v" << e.upper << " [label=\"s" << e.cls + 1 << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string diagram_text(const DynkinDiagram& d) {
  std::ostringstream out;
  out << d.type().name() << "\n";
  for (const auto& row : d.cartan_matrix()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << "\n";
  }
  return out.str();
}

std::string quotient_text(const ParabolicQuotient& q) {
  std::ostringstream out;
  for (std::size_t i = 0; i < q.size(); ++i)
    out << q.length(i) << " " << word_text(q.word(i)) << "\n";
  return out.str();
}

std::string hpoly_text(const MultiPolynomial& h) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : h.terms) {
    out << (first ? "" : " + ") << c;
    first = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out << "*t" << h.variables[i] + 1;
      if (e[i] > 1) out << "^" << e[i];
    }
  }
  out << "\n";
  return out.str();
}

std::string smooth_text(const SmoothnessReport& report) {
  std::ostringstream out;
  out << format_node_set(report.j) << (report.smooth ? " smooth" : " not smooth") << "\n";
  for (const auto& v : report.violations)
    out << "  s" << v.s + 1 << " " << to_string(v.kind) << " " << format_node_set(v.component)
        << "\n";
  return out.str();
}

std::string verify_text(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.ok ? "ok   " : (c.informational ? "note " : "FAIL ")) << c.name;
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << "\n";
  }
  return out.str();
}

}  // namespace bruhat::io
