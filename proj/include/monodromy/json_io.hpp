#pragma once

#include <string>

#include "json.hpp"
#include "monodromy/dessin.hpp"
#include "monodromy/families.hpp"
#include "monodromy/hurwitz.hpp"
#include "monodromy/subgroup.hpp"
#include "monodromy/witness.hpp"

namespace monodromy {

using Json = nlohmann::ordered_json;

/// {"darts", "sigma", "alpha", "marks": {"<dart>": "A2"|"B2"}}
Json to_json(const MarkedGraph& g);
/// Throws ParseError on malformed input; map validation errors propagate.
MarkedGraph marked_graph_from_json(const Json& j);

Json to_json(const SubgroupRep& rep);
SubgroupRep subgroup_from_json(const Json& j);

Json to_json(const Constellation& c);
Json to_json(const RamDatum& rd);
Json to_json(const FamilyRecord& rec);
Json to_json(const Poly& p);
Json to_json(const MapWitness& w);
Json to_json(const WitnessReport& r);

/// Graphviz rendering; ends become leaf nodes (A2 white triangle, B2 black square).
std::string to_dot(const MarkedGraph& g, const std::string& name = "T");

}  // namespace monodromy
