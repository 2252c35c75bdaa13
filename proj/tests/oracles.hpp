#pragma once

// Brute-force helpers used only by the tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "monodromy/map_core.hpp"
#include "monodromy/permutation.hpp"

namespace oracle {

using monodromy::Perm;

inline int orbit_count(const std::vector<Perm>& gens, int n) {
  std::vector<int> seen(n, 0);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& g : gens)
        if (!seen[g[x]]) {
          seen[g[x]] = 1;
          stack.push_back(g[x]);
        }
    }
  }
  return count;
}

inline Perm apply_then(const Perm& first, const Perm& second) {
  Perm r(first.size());
  for (size_t i = 0; i < first.size(); ++i) r[i] = second[first[i]];
  return r;
}

/// Every dart bijection commuting with sigma and alpha and preserving colors.
inline std::vector<Perm> brute_automorphisms(const monodromy::OrientedMap& m, const std::vector<std::uint8_t>& colors) {
  const int n = m.dart_count;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = p[m.sigma[x]] == m.sigma[p[x]] && p[m.alpha[x]] == m.alpha[p[x]];
      if (!colors.empty()) ok = ok && colors[x] == colors[p[x]];
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Perm random_perm(int n, std::mt19937_64& rng) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Conjugate a map by a relabeling: dart x becomes r[x].
inline monodromy::OrientedMap conjugate(const monodromy::OrientedMap& m, const Perm& r) {
  monodromy::OrientedMap out;
  out.dart_count = m.dart_count;
  out.sigma.assign(m.dart_count, 0);
  out.alpha.assign(m.dart_count, 0);
  for (int x = 0; x < m.dart_count; ++x) {
    out.sigma[r[x]] = r[m.sigma[x]];
    out.alpha[r[x]] = r[m.alpha[x]];
  }
  return out;
}

}  // namespace oracle
