#include "monodromy/invariants.hpp"

#include "monodromy/error.hpp"
#include "monodromy/subgroup.hpp"

namespace monodromy {

std::vector<std::string> graph_invariant_names() {
  return {"et-mod-12", "index-half-delta", "delta-inequality", "equality-structure", "free-on-ends", "round-trip"};
}

std::vector<std::string> graph_invariant_violations(const MarkedGraph& g) {
  std::vector<std::string> bad;
  const GraphDatum gd = graph_datum(g);
  const int et = et_gamma(g), delta = delta_gamma(g);
  const StructureClass sc = structure_class(g);

  if (et % 12 != 0) bad.push_back("et-mod-12");
  if (delta % 2 != 0 || index(g) * 2 != delta) bad.push_back("index-half-delta");
  if (2 * delta < et + 12 * (sc.rk_h1 - 1)) bad.push_back("delta-inequality");
  if (2 * delta == et && !(sc.kind == StructureKind::LoopPlusTrees && gd.a2 == 0))
    bad.push_back("equality-structure");

  const auto colors = g.colors();
  const auto autos = automorphisms(g.map, colors);
  for (std::size_t i = 1; i < autos.size(); ++i) {
    bool fixes_end = false;
    for (int d = 0; d < g.map.dart_count; ++d)
      if (g.marks[d] != Mark::None && autos[i][d] == d) fixes_end = true;
    if (fixes_end) {
      bad.push_back("free-on-ends");
      break;
    }
  }

  if (gd.index() > 0) {
    try {
      const SubgroupRep rep = to_permutation_pair(g);
      const MarkedGraph back = from_permutation_pair(rep);
      const bool same = canonical_code(back.map, back.colors()) == canonical_code(g.map, colors) &&
                        rep_graph_datum(rep) == gd && rep_ramification(rep) == rd_jgamma(g) &&
                        rep.n == gd.index();
      if (!same) bad.push_back("round-trip");
    } catch (const Error&) {
      bad.push_back("round-trip");
    }
  }
  return bad;
}

}  // namespace monodromy
