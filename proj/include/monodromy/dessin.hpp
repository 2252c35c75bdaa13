#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monodromy/map_core.hpp"

namespace monodromy {

enum class Mark : std::uint8_t { None = 0, A2 = 1, B2 = 2 };

/// A genus-0 map whose vertices are trivalent (A6) or ends marked A2/B2.
/// `marks` is indexed by dart; trivalent darts carry Mark::None.
struct MarkedGraph {
  OrientedMap map;
  std::vector<Mark> marks;

  DartColors colors() const;
  bool operator==(const MarkedGraph&) const = default;
};

/// Validates valences, genus and marking. Throws NotTrivalent, InvalidMarking, GenusNotZero.
MarkedGraph make_marked_graph(OrientedMap map, std::vector<Mark> marks);

struct GraphDatum {
  int a6 = 0;
  int a2 = 0;
  int b2 = 0;

  int vertex_count() const { return a6 + a2 + b2; }
  int end_count() const { return a2 + b2; }
  int et() const { return 6 * vertex_count(); }
  int delta() const { return 6 * a6 + 2 * a2; }
  int index() const { return delta() / 2; }
  /// First Betti number of any connected graph with this census.
  int rk_h1() const { return (a6 - end_count()) / 2 + 1; }

  auto operator<=>(const GraphDatum&) const = default;
};

/// "2A6+A2+B2"; the empty datum renders as "0".
std::string format_gd(const GraphDatum& gd);
GraphDatum parse_gd(const std::string& text);

struct JGammaRamification {
  Partition v0, v1, v_inf;
  auto operator<=>(const JGammaRamification&) const = default;
};

/// "(3,1)|(2,2)|(3,1)"
std::string format_partition(const Partition& p);
std::string format_jgamma(const JGammaRamification& r);
Partition parse_partition(const std::string& text);

GraphDatum graph_datum(const MarkedGraph& g);
int et_gamma(const MarkedGraph& g);
int delta_gamma(const MarkedGraph& g);
int index(const MarkedGraph& g);

/// Bicolored refinement: darts 0..n-1 sit at A-vertices, darts n..2n-1 at B-vertices,
/// alpha pairs i with n+i, so each edge joins an A-vertex to a B-vertex.
struct BipartiteMap {
  OrientedMap map;
  int a_darts = 0;
};

BipartiteMap bipartite_refinement(const MarkedGraph& g);

/// v0, v1 from vertex valences of the refinement, v_inf from its faces.
JGammaRamification rd_jgamma(const MarkedGraph& g);

enum class StructureKind { Tree, Saturated, TreeWithEndLoops, LoopPlusTrees, Mixed };

struct StructureClass {
  StructureKind kind;
  int rk_h1;
};

const char* to_string(StructureKind k);
StructureClass structure_class(const MarkedGraph& g);

/// Number of trivalent vertices carrying a self-loop.
int end_loop_count(const MarkedGraph& g);
/// Number of edges whose two darts share a vertex.
int self_loop_count(const OrientedMap& m);
bool has_multi_edge(const OrientedMap& m);

/// Length of each cycle of the 2-core (the graph after repeatedly removing ends),
/// empty when the core is not a single cycle.
std::optional<int> single_cycle_length(const MarkedGraph& g);

/// Vertex id per dart (cycle index of sigma).
std::vector<int> vertex_of_dart(const OrientedMap& m);

}  // namespace monodromy
