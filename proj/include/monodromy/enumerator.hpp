#pragma once

#include <map>
#include <string>
#include <vector>

#include "monodromy/dessin.hpp"

namespace monodromy {

/// Connected planar maps with `trivalent` vertices of valence 3 and `ends` of valence 1,
/// one per orientation-preserving isomorphism class, sorted by canonical code.
std::vector<OrientedMap> enumerate_shapes(int trivalent, int ends);

/// All shapes with the given total vertex count.
std::vector<OrientedMap> enumerate_shapes_by_vertices(int vertices);

/// Every A2/B2 marking of the given shapes, deduplicated up to orientation-preserving
/// isomorphism (or up to any homeomorphism when `modulo_reflection`).
std::vector<MarkedGraph> mark_shapes(const std::vector<OrientedMap>& shapes, bool modulo_reflection);

/// All marked graphs with ET(Gamma) = et; et must be 12, 24, 36 or 48 (InvalidEt).
std::vector<MarkedGraph> enumerate_tgamma(int et, bool modulo_reflection = false);

/// All marked graphs of positive index at most `max_index`.
std::vector<MarkedGraph> enumerate_by_max_index(int max_index);

/// Category per graph; the categories partition the enumeration.
std::string breakdown_category(const MarkedGraph& g);

/// Category -> count over enumerate_tgamma(et, modulo_reflection).
std::map<std::string, int> breakdown_counts(int et, bool modulo_reflection = false);

/// Number of distinct shapes of trees with the given ET.
int tree_shape_count(int et);

}  // namespace monodromy
