#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monodromy/dessin.hpp"
#include "monodromy/hurwitz.hpp"

namespace monodromy {

/// Ramification of j_E over the ends of T_Gamma plus reduced partitions over
/// unspecified branch points.
struct RamDatum {
  int degree = 1;
  std::vector<Partition> over_a;
  std::vector<Partition> over_b;
  std::vector<Partition> unspecified;

  /// Sorted copy: each list in descending lexicographic order, unspecified parts reduced.
  RamDatum canonical() const;
  int total_branching() const;
  /// All local profiles padded to the degree, ready for realizability checks.
  BranchProfile branch_profile() const;

  bool operator==(const RamDatum&) const = default;
  auto operator<=>(const RamDatum&) const = default;
};

/// "[(3,1)_A,(2,2)_B,(2),(2)]"
std::string format_rd(const RamDatum& rd);
RamDatum parse_rd(int degree, const std::string& text);

struct AlphaBeta {
  int alpha1 = 0;
  int alpha2 = 0;
  int beta1 = 0;
};

/// Throws ShapeMismatch when the vector counts do not match the ends of `gd`.
AlphaBeta alphas_betas(const GraphDatum& gd, const RamDatum& rd);

int surface_et(int d, int delta, int alpha1, int alpha2, int beta1, int ell);

/// ET(E) - 12 ell < d ET(Gamma): some entry over an A2 end is >= 3 or over a B2 end is >= 2.
bool is_special(const GraphDatum& gd, const RamDatum& rd);
bool is_group_covering(const GraphDatum& gd, const RamDatum& rd);

/// Every datum reachable by one or more collisions of a simple branch point with
/// another fiber, in canonical order.
std::vector<RamDatum> degenerations(const RamDatum& rd);
bool is_degeneration_of(const RamDatum& lower, const RamDatum& upper);

struct FamilyRecord {
  GraphDatum gd;
  std::optional<MarkedGraph> graph;
  RamDatum rd;
  int ell = 0;
  int et_surface = 0;
  bool special = false;
  bool generic = true;
  int dimension = 0;
  std::optional<Constellation> witness;
};

/// Stable ordering key used for output: (gd, degree, rd, ell).
bool record_less(const FamilyRecord& a, const FamilyRecord& b);

int component_dimension(const RamDatum& rd, int ell);

struct ClassifyOptions {
  std::optional<GraphDatum> gd;          // restrict to one graph datum
  bool include_degenerations = false;    // also emit non-generic records
  int jobs = 1;
};

/// Special families for r = 1 (rational) or r = 2 (K3).
std::vector<FamilyRecord> classify_special(int r, const ClassifyOptions& opts = {});

/// All graph data that occur for enumerated graphs with ET(Gamma) <= 24 r.
std::vector<GraphDatum> candidate_graph_data(int r);

std::optional<FamilyRecord> general_family(const MarkedGraph& g, int r, int ell);

struct UnstableRow {
  GraphDatum gd;
  JGammaRamification rd;
};

/// Candidate triples with an order-3 point over 0 and entries <= 2 over 1 that close
/// at genus 0; each is kept when a constellation exists.
std::vector<JGammaRamification> unstable_candidates();
std::vector<UnstableRow> unstable_rational_table();

/// Constraint descriptions for the parametric rows; `member` tests a generic record.
struct ParametricFamily {
  int r;
  GraphDatum gd;
  std::string description;
  bool (*member)(const FamilyRecord&);
};

std::vector<ParametricFamily> parametric_families(int r);

}  // namespace monodromy
