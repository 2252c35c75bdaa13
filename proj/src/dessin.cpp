#include "monodromy/dessin.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "monodromy/error.hpp"
#include "monodromy/subgroup.hpp"

namespace monodromy {

DartColors MarkedGraph::colors() const {
  DartColors c(marks.size());
  for (size_t i = 0; i < marks.size(); ++i) c[i] = static_cast<std::uint8_t>(marks[i]);
  return c;
}

std::vector<int> vertex_of_dart(const OrientedMap& m) {
  std::vector<int> v(static_cast<size_t>(m.dart_count));
  int id = 0;
  for (const auto& c : cycles(m.sigma)) {
    for (int d : c) v[static_cast<size_t>(d)] = id;
    ++id;
  }
  return v;
}

MarkedGraph make_marked_graph(OrientedMap map, std::vector<Mark> marks) {
  if (marks.size() != static_cast<size_t>(map.dart_count))
    throw Error(ErrorCode::InvalidMarking, "one mark per dart expected");
  if (map.dart_count == 0) throw Error(ErrorCode::NotTrivalent, "empty graph");
  for (const auto& c : cycles(map.sigma)) {
    if (c.size() == 3) {
      for (int d : c)
        if (marks[static_cast<size_t>(d)] != Mark::None)
          throw Error(ErrorCode::InvalidMarking, "trivalent vertex carries a mark");
    } else if (c.size() == 1) {
      if (marks[static_cast<size_t>(c[0])] == Mark::None)
        throw Error(ErrorCode::InvalidMarking, "end without a mark");
    } else {
      throw Error(ErrorCode::NotTrivalent, "vertex of valence " + std::to_string(c.size()));
    }
  }
  if (genus(map) != 0) throw Error(ErrorCode::GenusNotZero, "graph is not planar");
  return MarkedGraph{std::move(map), std::move(marks)};
}

std::string format_gd(const GraphDatum& gd) {
  std::string out;
  auto term = [&](int c, const char* name) {
    if (c == 0) return;
    if (!out.empty()) out += "+";
    if (c != 1) out += std::to_string(c);
    out += name;
  };
  term(gd.a6, "A6");
  term(gd.a2, "A2");
  term(gd.b2, "B2");
  return out.empty() ? "0" : out;
}

GraphDatum parse_gd(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '[' && c != ']') s += c;
  GraphDatum gd;
  if (s.empty() || s == "0") return gd;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    if (tok.size() < 2) throw Error(ErrorCode::ParseError, "bad graph datum term '" + tok + "'");
    std::string name = tok.substr(tok.size() - 2);
    std::string coef = tok.substr(0, tok.size() - 2);
    int c = 1;
    if (!coef.empty()) {
      if (!std::all_of(coef.begin(), coef.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw Error(ErrorCode::ParseError, "bad coefficient in '" + tok + "'");
      c = std::stoi(coef);
    }
    if (name == "A6") gd.a6 += c;
    else if (name == "A2") gd.a2 += c;
    else if (name == "B2") gd.b2 += c;
    else throw Error(ErrorCode::ParseError, "unknown vertex type '" + name + "'");
  }
  return gd;
}

std::string format_partition(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::string format_jgamma(const JGammaRamification& r) {
  return format_partition(r.v0) + "|" + format_partition(r.v1) + "|" + format_partition(r.v_inf);
}

Partition parse_partition(const std::string& text) {
  Partition p;
  std::string cur;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else if (c == ',' || c == ')' ) {
      if (!cur.empty()) p.push_back(std::stoi(cur));
      cur.clear();
    } else if (c != '(' && !std::isspace(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::ParseError, "bad partition '" + text + "'");
    }
  }
  if (!cur.empty()) p.push_back(std::stoi(cur));
  if (p.empty()) throw Error(ErrorCode::ParseError, "empty partition '" + text + "'");
  for (int e : p)
    if (e <= 0) throw Error(ErrorCode::ParseError, "non-positive part in '" + text + "'");
  return normalized(std::move(p));
}

GraphDatum graph_datum(const MarkedGraph& g) {
  GraphDatum gd;
  for (const auto& c : cycles(g.map.sigma)) {
    if (c.size() == 3) ++gd.a6;
    else if (g.marks[static_cast<size_t>(c[0])] == Mark::A2) ++gd.a2;
    else ++gd.b2;
  }
  return gd;
}

int et_gamma(const MarkedGraph& g) { return 6 * g.map.vertex_count(); }

int delta_gamma(const MarkedGraph& g) { return graph_datum(g).delta(); }

int index(const MarkedGraph& g) { return delta_gamma(g) / 2; }

BipartiteMap bipartite_refinement(const MarkedGraph& g) {
  if (index(g) == 0) return BipartiteMap{OrientedMap{}, 0};
  SubgroupRep rep = to_permutation_pair(g);
  const int n = rep.n;
  OrientedMap m{2 * n, Perm(static_cast<size_t>(2 * n)), Perm(static_cast<size_t>(2 * n))};
  for (int i = 0; i < n; ++i) {
    m.sigma[static_cast<size_t>(i)] = rep.sigma3[static_cast<size_t>(i)];
    m.sigma[static_cast<size_t>(n + i)] = n + rep.sigma2[static_cast<size_t>(i)];
    m.alpha[static_cast<size_t>(i)] = n + i;
    m.alpha[static_cast<size_t>(n + i)] = i;
  }
  return BipartiteMap{std::move(m), n};
}

JGammaRamification rd_jgamma(const MarkedGraph& g) {
  BipartiteMap b = bipartite_refinement(g);
  JGammaRamification r;
  for (const auto& c : cycles(b.map.sigma)) {
    if (c[0] < b.a_darts) r.v0.push_back(static_cast<int>(c.size()));
    else r.v1.push_back(static_cast<int>(c.size()));
  }
  for (const auto& c : cycles(b.map.phi())) {
    int a = 0;
    for (int d : c)
      if (d < b.a_darts) ++a;
    r.v_inf.push_back(a);
  }
  r.v0 = normalized(r.v0);
  r.v1 = normalized(r.v1);
  r.v_inf = normalized(r.v_inf);
  return r;
}

const char* to_string(StructureKind k) {
  switch (k) {
    case StructureKind::Tree: return "tree";
    case StructureKind::Saturated: return "saturated";
    case StructureKind::TreeWithEndLoops: return "tree-with-end-loops";
    case StructureKind::LoopPlusTrees: return "loop-plus-trees";
    case StructureKind::Mixed: return "mixed";
  }
  return "unknown";
}

int self_loop_count(const OrientedMap& m) {
  auto v = vertex_of_dart(m);
  int loops = 0;
  for (int d = 0; d < m.dart_count; ++d)
    if (d < m.alpha[static_cast<size_t>(d)] && v[static_cast<size_t>(d)] == v[static_cast<size_t>(m.alpha[static_cast<size_t>(d)])])
      ++loops;
  return loops;
}

bool has_multi_edge(const OrientedMap& m) {
  auto v = vertex_of_dart(m);
  std::vector<std::pair<int, int>> edges;
  for (int d = 0; d < m.dart_count; ++d) {
    int e = m.alpha[static_cast<size_t>(d)];
    int a = v[static_cast<size_t>(d)], b = v[static_cast<size_t>(e)];
    if (d < e && a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  return std::adjacent_find(edges.begin(), edges.end()) != edges.end();
}

int end_loop_count(const MarkedGraph& g) { return self_loop_count(g.map); }

StructureClass structure_class(const MarkedGraph& g) {
  const int rk = g.map.edge_count() - g.map.vertex_count() + 1;
  const GraphDatum gd = graph_datum(g);
  StructureKind kind;
  if (rk == 0) kind = StructureKind::Tree;
  else if (gd.end_count() == 0) kind = StructureKind::Saturated;
  else if (rk == 1) kind = StructureKind::LoopPlusTrees;
  else if (rk == end_loop_count(g)) kind = StructureKind::TreeWithEndLoops;
  else kind = StructureKind::Mixed;
  return StructureClass{kind, rk};
}

std::optional<int> single_cycle_length(const MarkedGraph& g) {
  const auto& m = g.map;
  auto v = vertex_of_dart(m);
  const int nv = m.vertex_count();
  std::vector<int> deg(static_cast<size_t>(nv), 0);
  for (int d = 0; d < m.dart_count; ++d) ++deg[static_cast<size_t>(v[static_cast<size_t>(d)])];
  std::vector<char> removed(static_cast<size_t>(nv), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < nv; ++x) {
      if (removed[static_cast<size_t>(x)] || deg[static_cast<size_t>(x)] > 1) continue;
      removed[static_cast<size_t>(x)] = 1;
      changed = true;
      for (int d = 0; d < m.dart_count; ++d) {
        if (v[static_cast<size_t>(d)] != x) continue;
        int y = v[static_cast<size_t>(m.alpha[static_cast<size_t>(d)])];
        if (y != x) --deg[static_cast<size_t>(y)];
      }
    }
  }
  int len = 0;
  for (int x = 0; x < nv; ++x) {
    if (removed[static_cast<size_t>(x)]) continue;
    if (deg[static_cast<size_t>(x)] != 2) return std::nullopt;
    ++len;
  }
  if (len == 0) return std::nullopt;
  return len;
}

}  // namespace monodromy
