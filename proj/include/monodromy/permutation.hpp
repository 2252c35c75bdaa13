#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace monodromy {

/// A permutation of {0, ..., n-1} stored as its image array.
using Perm = std::vector<int>;

/// Integer partition, always kept in descending order.
using Partition = std::vector<int>;

Perm identity_perm(int n);
bool is_permutation(std::span<const int> p);
Perm inverse(std::span<const int> p);

/// Left-to-right product: apply `a` first, then `b`; result[x] = b[a[x]].
Perm compose(std::span<const int> a, std::span<const int> b);

/// Cycles of `p`, each starting at its smallest point, ordered by that point.
std::vector<std::vector<int>> cycles(std::span<const int> p);
int cycle_count(std::span<const int> p);

/// Cycle lengths in descending order.
Partition cycle_type(std::span<const int> p);

/// True when the group generated by `gens` acts transitively on {0..n-1}.
bool is_transitive(int n, std::span<const Perm> gens);

/// Orbits of the group generated by `gens`, as a component id per point.
std::vector<int> orbit_ids(int n, std::span<const Perm> gens, int* orbit_count = nullptr);

/// A permutation with the given cycle type, cycles laid out consecutively.
Perm perm_with_cycle_type(int n, const Partition& type);

/// Sorts descending; helper for building canonical partitions.
Partition normalized(Partition p);

/// Sum of (part - 1): the branching contributed by one fiber.
int branching(const Partition& p);

bool is_partition_of(const Partition& p, int n);

}  // namespace monodromy
