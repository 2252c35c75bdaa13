#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monodromy/permutation.hpp"

namespace monodromy {

/// Rotation system: sigma turns counterclockwise around a vertex, alpha flips a dart to
/// the other half of its edge.
struct OrientedMap {
  int dart_count = 0;
  Perm sigma;
  Perm alpha;

  /// Face permutation, x -> sigma(alpha(x)).
  Perm phi() const;
  int vertex_count() const;
  int edge_count() const { return dart_count / 2; }
  int face_count() const;
  int euler_characteristic() const;

  /// Mirror image: sigma inverted, alpha unchanged.
  OrientedMap mirror() const;

  bool operator==(const OrientedMap&) const = default;
};

/// Validates and returns the map. Throws Error with NotPermutation, NotInvolution,
/// HasFixedPoint or NotConnected.
OrientedMap build_map(int dart_count, Perm sigma, Perm alpha);

int genus(const OrientedMap& m);

/// Per-dart color used by canonical codes and automorphisms; 0 means uncolored.
using DartColors = std::vector<std::uint8_t>;

struct MapIsoClass {
  std::string canonical_code;
  std::string reflected_code;

  /// Smaller of the two codes: equal for maps related by any homeomorphism.
  const std::string& unoriented_code() const {
    return reflected_code < canonical_code ? reflected_code : canonical_code;
  }
};

/// Minimal BFS code over all root darts. `colors` may be empty.
std::string canonical_code(const OrientedMap& m, const DartColors& colors = {});
MapIsoClass iso_class(const OrientedMap& m, const DartColors& colors = {});

/// Orientation-preserving automorphisms respecting `colors`, identity first.
std::vector<Perm> automorphisms(const OrientedMap& m, const DartColors& colors = {});

/// Relabels darts: dart x becomes relabel[x].
OrientedMap relabeled(const OrientedMap& m, const Perm& relabel);

}  // namespace monodromy
