#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "monodromy/permutation.hpp"

namespace monodromy {

struct BranchProfile {
  int degree = 1;
  std::vector<Partition> profiles;
};

/// Permutations with identity product (left to right) generating a transitive group.
/// `profiles[i]` is the cycle type of `perms[i]`; the order may differ from the input.
struct Constellation {
  int degree = 1;
  std::vector<Partition> profiles;
  std::vector<Perm> perms;
};

/// Genus from Riemann-Hurwitz, or nullopt when it is not a non-negative integer.
std::optional<int> rh_genus(const BranchProfile& bp);

/// Throws InvalidProfile for malformed data, DegreeTooLarge for degree > 12.
std::optional<Constellation> realizable(const BranchProfile& bp);

/// Cycle types, product and transitivity.
bool verify_constellation(const Constellation& c);

/// Calls `visit` for each permutation of the given cycle type until it returns false.
/// Returns false if stopped early.
bool for_each_in_class(int n, const Partition& type, const std::function<bool(const Perm&)>& visit);

BranchProfile parse_branch_profile(int degree, const std::string& text);

}  // namespace monodromy
