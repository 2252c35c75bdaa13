#pragma once

#include <string>
#include <vector>

#include "monodromy/dessin.hpp"

namespace monodromy {

/// Names of the checks run by graph_invariant_violations.
std::vector<std::string> graph_invariant_names();

/// Names of the failed checks for one graph:
///   et-mod-12, index-half-delta, delta-inequality, equality-structure,
///   free-on-ends, round-trip.
std::vector<std::string> graph_invariant_violations(const MarkedGraph& g);

}  // namespace monodromy
