#pragma once

#include <optional>
#include <vector>

#include "monodromy/dessin.hpp"

namespace monodromy {

/// Coset action of a finite-index subgroup of Z/3 * Z/2.
struct SubgroupRep {
  int n = 0;
  Perm sigma3;
  Perm sigma2;

  /// sigma3 then sigma2 (left-to-right product).
  Perm face_perm() const { return compose(sigma3, sigma2); }
  int genus() const;
  bool operator==(const SubgroupRep&) const = default;
  auto operator<=>(const SubgroupRep&) const = default;
};

/// Checks orders, transitivity and parity; throws NotPermutation on violation.
void validate(const SubgroupRep& rep);

/// Points are the darts at A-vertices, numbered in increasing dart order.
/// Throws DegenerateIndex for the graph with two B2 ends (index 0).
SubgroupRep to_permutation_pair(const MarkedGraph& g);

/// Throws GenusNotZero.
MarkedGraph from_permutation_pair(const SubgroupRep& rep);

/// Relabels points so that BFS from `base` (sigma3 before sigma2) numbers them in order.
SubgroupRep bfs_normal_form(const SubgroupRep& rep, int base);

/// Lexicographically least BFS normal form over all base points.
SubgroupRep canonical_rep(const SubgroupRep& rep);

/// One representative per conjugacy class, for every index 1..max_index, sorted by
/// (n, sigma3, sigma2). `genus_filter` keeps only that genus when set.
std::vector<SubgroupRep> enumerate_subgroups(int max_index, std::optional<int> genus_filter,
                                             int jobs = 1);

JGammaRamification rep_ramification(const SubgroupRep& rep);

/// Fixed points of sigma3 and sigma2 give (a2, b2); 3-cycles give a6.
GraphDatum rep_graph_datum(const SubgroupRep& rep);

}  // namespace monodromy
