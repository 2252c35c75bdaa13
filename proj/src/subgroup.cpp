#include "monodromy/subgroup.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <future>
#include <set>

#include "monodromy/error.hpp"

namespace monodromy {

int SubgroupRep::genus() const {
  int chi = cycle_count(sigma3) + cycle_count(sigma2) + cycle_count(face_perm()) - n;
  return (2 - chi) / 2;
}

void validate(const SubgroupRep& rep) {
  const auto n = static_cast<size_t>(rep.n);
  if (rep.n <= 0 || rep.sigma3.size() != n || rep.sigma2.size() != n ||
      !is_permutation(rep.sigma3) || !is_permutation(rep.sigma2))
    throw Error(ErrorCode::NotPermutation, "sigma3 and sigma2 must permute 0..n-1");
  for (size_t x = 0; x < n; ++x) {
    int s = rep.sigma3[x];
    if (rep.sigma3[static_cast<size_t>(rep.sigma3[static_cast<size_t>(s)])] != static_cast<int>(x))
      throw Error(ErrorCode::NotPermutation, "sigma3 does not have order dividing 3");
    if (rep.sigma2[static_cast<size_t>(rep.sigma2[x])] != static_cast<int>(x))
      throw Error(ErrorCode::NotPermutation, "sigma2 is not an involution");
  }
  std::array<Perm, 2> gens{rep.sigma3, rep.sigma2};
  if (!is_transitive(rep.n, gens)) throw Error(ErrorCode::NotConnected, "action is not transitive");
  int chi = cycle_count(rep.sigma3) + cycle_count(rep.sigma2) + cycle_count(rep.face_perm()) - rep.n;
  if (chi % 2 != 0 || chi > 2) throw Error(ErrorCode::NotPermutation, "Euler characteristic is not even");
}

SubgroupRep to_permutation_pair(const MarkedGraph& g) {
  const auto& m = g.map;
  std::vector<int> point(static_cast<size_t>(m.dart_count), -1);
  int n = 0;
  for (int d = 0; d < m.dart_count; ++d)
    if (g.marks[static_cast<size_t>(d)] != Mark::B2) point[static_cast<size_t>(d)] = n++;
  if (n == 0) throw Error(ErrorCode::DegenerateIndex, "graph has index 0");
  SubgroupRep rep{n, Perm(static_cast<size_t>(n)), Perm(static_cast<size_t>(n))};
  for (int d = 0; d < m.dart_count; ++d) {
    int p = point[static_cast<size_t>(d)];
    if (p < 0) continue;
    rep.sigma3[static_cast<size_t>(p)] = point[static_cast<size_t>(m.sigma[static_cast<size_t>(d)])];
    int q = point[static_cast<size_t>(m.alpha[static_cast<size_t>(d)])];
    rep.sigma2[static_cast<size_t>(p)] = q < 0 ? p : q;
  }
  return rep;
}

MarkedGraph from_permutation_pair(const SubgroupRep& rep) {
  validate(rep);
  if (rep.genus() != 0) throw Error(ErrorCode::GenusNotZero, "permutation pair has genus " + std::to_string(rep.genus()));
  const int n = rep.n;
  int extra = 0;
  for (int x = 0; x < n; ++x)
    if (rep.sigma2[static_cast<size_t>(x)] == x) ++extra;
  const int darts = n + extra;
  OrientedMap m{darts, Perm(static_cast<size_t>(darts)), Perm(static_cast<size_t>(darts))};
  std::vector<Mark> marks(static_cast<size_t>(darts), Mark::None);
  int next = n;
  for (int x = 0; x < n; ++x) {
    m.sigma[static_cast<size_t>(x)] = rep.sigma3[static_cast<size_t>(x)];
    if (rep.sigma3[static_cast<size_t>(x)] == x) marks[static_cast<size_t>(x)] = Mark::A2;
    int y = rep.sigma2[static_cast<size_t>(x)];
    if (y != x) {
      m.alpha[static_cast<size_t>(x)] = y;
    } else {
      m.alpha[static_cast<size_t>(x)] = next;
      m.alpha[static_cast<size_t>(next)] = x;
      m.sigma[static_cast<size_t>(next)] = next;
      marks[static_cast<size_t>(next)] = Mark::B2;
      ++next;
    }
  }
  return make_marked_graph(std::move(m), std::move(marks));
}

SubgroupRep bfs_normal_form(const SubgroupRep& rep, int base) {
  const int n = rep.n;
  std::vector<int> label(static_cast<size_t>(n), -1), order;
  order.reserve(static_cast<size_t>(n));
  label[static_cast<size_t>(base)] = 0;
  order.push_back(base);
  for (size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    for (const Perm* g : {&rep.sigma3, &rep.sigma2}) {
      int y = (*g)[static_cast<size_t>(x)];
      if (label[static_cast<size_t>(y)] < 0) {
        label[static_cast<size_t>(y)] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
  SubgroupRep out{n, Perm(static_cast<size_t>(n)), Perm(static_cast<size_t>(n))};
  for (int x = 0; x < n; ++x) {
    out.sigma3[static_cast<size_t>(label[static_cast<size_t>(x)])] = label[static_cast<size_t>(rep.sigma3[static_cast<size_t>(x)])];
    out.sigma2[static_cast<size_t>(label[static_cast<size_t>(x)])] = label[static_cast<size_t>(rep.sigma2[static_cast<size_t>(x)])];
  }
  return out;
}

SubgroupRep canonical_rep(const SubgroupRep& rep) {
  SubgroupRep best = bfs_normal_form(rep, 0);
  for (int b = 1; b < rep.n; ++b) {
    SubgroupRep c = bfs_normal_form(rep, b);
    if (std::tie(c.sigma3, c.sigma2) < std::tie(best.sigma3, best.sigma2)) best = std::move(c);
  }
  return best;
}

namespace {

// Low-index style search for transitive pairs in BFS normal form from point 0.
// Entries are filled in scan order (point, then sigma3 before sigma2); a fresh point is
// always the next unused label, so every pointed action appears exactly once.
class PairSearch {
 public:
  PairSearch(int n, std::function<void(const SubgroupRep&)> emit)
      : n_(n), s3_(static_cast<size_t>(n), -1), s3inv_(static_cast<size_t>(n), -1),
        s2_(static_cast<size_t>(n), -1), emit_(std::move(emit)) {}

  // Runs the search with the first decision (sigma3 at point 0) restricted to `branch`
  // when it is non-negative; branches are 0 (fixed), 1 (new point).
  void run(int branch) {
    used_ = 1;
    branch_ = branch;
    step();
  }

 private:
  bool chain_ok(int p) const {
    // The sigma3 chain through p must be a closed 1- or 3-cycle or an open path of <= 3 points.
    int start = p, len = 1;
    while (s3inv_[static_cast<size_t>(start)] >= 0 && s3inv_[static_cast<size_t>(start)] != p) {
      start = s3inv_[static_cast<size_t>(start)];
      if (++len > 3) return false;
    }
    if (s3inv_[static_cast<size_t>(start)] == p) {
      len = 1;
      for (int x = s3_[static_cast<size_t>(p)]; x != p; x = s3_[static_cast<size_t>(x)]) ++len;
      return len == 1 || len == 3;
    }
    len = 1;
    for (int x = start; s3_[static_cast<size_t>(x)] >= 0; x = s3_[static_cast<size_t>(x)]) {
      if (++len > 3) return false;
    }
    return true;
  }

  void step() {
    int p = -1;
    bool gen3 = false;
    for (int x = 0; x < used_; ++x) {
      if (s3_[static_cast<size_t>(x)] < 0) { p = x; gen3 = true; break; }
      if (s2_[static_cast<size_t>(x)] < 0) { p = x; gen3 = false; break; }
    }
    if (p < 0) {
      if (used_ == n_) {
        SubgroupRep rep{n_, s3_, s2_};
        emit_(rep);
      }
      return;
    }
    const bool first = (p == 0 && gen3);
    if (gen3) {
      for (int q = 0; q <= used_ && q < n_; ++q) {
        if (first && branch_ >= 0 && (q == 0 ? 0 : 1) != branch_) continue;
        if (s3inv_[static_cast<size_t>(q)] >= 0) continue;
        const bool fresh = (q == used_);
        if (fresh) ++used_;
        s3_[static_cast<size_t>(p)] = q;
        s3inv_[static_cast<size_t>(q)] = p;
        if (chain_ok(p)) step();
        s3_[static_cast<size_t>(p)] = -1;
        s3inv_[static_cast<size_t>(q)] = -1;
        if (fresh) --used_;
      }
    } else {
      for (int q = p; q <= used_ && q < n_; ++q) {
        if (q != p && s2_[static_cast<size_t>(q)] >= 0) continue;
        const bool fresh = (q == used_);
        if (fresh) ++used_;
        s2_[static_cast<size_t>(p)] = q;
        s2_[static_cast<size_t>(q)] = p;
        step();
        s2_[static_cast<size_t>(p)] = -1;
        s2_[static_cast<size_t>(q)] = -1;
        if (fresh) --used_;
      }
    }
  }

  int n_;
  int used_ = 1;
  int branch_ = -1;
  Perm s3_, s3inv_, s2_;
  std::function<void(const SubgroupRep&)> emit_;
};

std::vector<SubgroupRep> classes_of_index(int n, std::optional<int> genus_filter, int branch) {
  std::vector<SubgroupRep> out;
  PairSearch search(n, [&](const SubgroupRep& rep) {
    if (genus_filter && rep.genus() != *genus_filter) return;
    for (int b = 1; b < n; ++b) {
      SubgroupRep c = bfs_normal_form(rep, b);
      if (std::tie(c.sigma3, c.sigma2) < std::tie(rep.sigma3, rep.sigma2)) return;
    }
    out.push_back(rep);
  });
  search.run(branch);
  return out;
}

}  // namespace

std::vector<SubgroupRep> enumerate_subgroups(int max_index, std::optional<int> genus_filter, int jobs) {
  if (max_index > 24) throw Error(ErrorCode::InvalidProfile, "index bound above 24");
  std::vector<SubgroupRep> all;
  for (int n = 1; n <= max_index; ++n) {
    std::vector<SubgroupRep> part;
    if (jobs > 1 && n > 1) {
      auto f0 = std::async(std::launch::async, classes_of_index, n, genus_filter, 0);
      auto f1 = classes_of_index(n, genus_filter, 1);
      part = f0.get();
      part.insert(part.end(), f1.begin(), f1.end());
    } else {
      part = classes_of_index(n, genus_filter, -1);
    }
    std::sort(part.begin(), part.end());
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

JGammaRamification rep_ramification(const SubgroupRep& rep) {
  return JGammaRamification{cycle_type(rep.sigma3), cycle_type(rep.sigma2), cycle_type(rep.face_perm())};
}

GraphDatum rep_graph_datum(const SubgroupRep& rep) {
  GraphDatum gd;
  for (const auto& c : cycles(rep.sigma3)) (c.size() == 3 ? gd.a6 : gd.a2) += 1;
  for (int x = 0; x < rep.n; ++x)
    if (rep.sigma2[static_cast<size_t>(x)] == x) ++gd.b2;
  return gd;
}

}  // namespace monodromy
