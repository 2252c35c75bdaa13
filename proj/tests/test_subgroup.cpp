#include "doctest.h"
#include "graphs.hpp"
#include "oracles.hpp"

#include <map>

#include "monodromy/enumerator.hpp"
#include "monodromy/error.hpp"
#include "monodromy/subgroup.hpp"

using namespace monodromy;
using fixtures::edge;
using fixtures::star;
using fixtures::theta;

namespace {

/// Conjugacy classes of transitive pairs on n points by brute force over all relabelings.
std::map<int, int> brute_class_counts_by_genus(int n) {
  std::vector<Perm> all;
  Perm p = identity_perm(n);
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<Perm> order3, order2;
  for (const auto& q : all) {
    Perm q2 = oracle::apply_then(q, q);
    if (oracle::apply_then(q2, q) == identity_perm(n)) order3.push_back(q);
    if (q2 == identity_perm(n)) order2.push_back(q);
  }
  std::set<std::pair<Perm, Perm>> classes;
  std::map<int, int> by_genus;
  for (const auto& a : order3)
    for (const auto& b : order2) {
      if (oracle::orbit_count({a, b}, n) != 1) continue;
      std::pair<Perm, Perm> best;
      bool first = true;
      for (const auto& r : all) {
        Perm ca(n), cb(n);
        for (int x = 0; x < n; ++x) {
          ca[r[x]] = r[a[x]];
          cb[r[x]] = r[b[x]];
        }
        auto cand = std::make_pair(ca, cb);
        if (first || cand < best) best = cand, first = false;
      }
      if (classes.insert(best).second) {
        const int c = oracle::orbit_count({a}, n) + oracle::orbit_count({b}, n) +
                      oracle::orbit_count({oracle::apply_then(a, b)}, n);
        by_genus[(2 + n - c) / 2]++;
      }
    }
  return by_genus;
}

}  // namespace

TEST_CASE("permutation pairs of small graphs") {
  auto r = to_permutation_pair(star(Mark::B2, Mark::B2, Mark::B2));
  CHECK(r.n == 3);
  CHECK(cycle_type(r.sigma3) == Partition{3});
  CHECK(r.sigma2 == identity_perm(3));

  auto e = to_permutation_pair(edge(Mark::A2, Mark::B2));
  CHECK(e.n == 1);
  CHECK(e.sigma3 == Perm{0});
  CHECK(e.sigma2 == Perm{0});

  auto t = to_permutation_pair(theta());
  CHECK(t.n == 6);
  CHECK(cycle_type(t.sigma3) == Partition{3, 3});
  CHECK(cycle_type(t.sigma2) == Partition{2, 2, 2});
  CHECK(cycle_type(t.face_perm()) == Partition{2, 2, 2});

  try {
    to_permutation_pair(edge(Mark::B2, Mark::B2));
    FAIL("index 0 accepted");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::DegenerateIndex);
  }
}

TEST_CASE("from_permutation_pair") {
  auto g = from_permutation_pair(SubgroupRep{1, {0}, {0}});
  CHECK(graph_datum(g) == GraphDatum{0, 1, 1});

  bool tested = false;
  for (const auto& rep : enumerate_subgroups(6, std::nullopt)) {
    if (rep.genus() == 0) continue;
    tested = true;
    try {
      from_permutation_pair(rep);
      FAIL("genus 1 accepted");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::GenusNotZero);
    }
    break;
  }
  CHECK(tested);
  CHECK_THROWS_AS(validate(SubgroupRep{2, {0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(validate(SubgroupRep{2, {1, 0}, {1, 0}}), Error);
}

TEST_CASE("round trip over enumerated graphs") {
  for (int et : {12, 24, 36}) {
    for (const auto& g : enumerate_tgamma(et)) {
      if (index(g) == 0) continue;
      auto rep = to_permutation_pair(g);
      CHECK(rep.n == index(g));
      CHECK(rep.genus() == 0);
      auto rd = rd_jgamma(g);
      CHECK(cycle_type(rep.sigma3) == rd.v0);
      CHECK(cycle_type(rep.sigma2) == rd.v1);
      CHECK(cycle_type(rep.face_perm()) == rd.v_inf);
      CHECK(rep_graph_datum(rep) == graph_datum(g));
      auto back = from_permutation_pair(rep);
      CHECK(canonical_code(back.map, back.colors()) == canonical_code(g.map, g.colors()));
    }
  }
}

TEST_CASE("canonical representatives are conjugation invariant") {
  std::mt19937_64 rng(11);
  auto reps = enumerate_subgroups(7, std::nullopt);
  for (const auto& rep : reps) {
    CHECK(canonical_rep(rep) == rep);
    for (int k = 0; k < 5; ++k) {
      auto r = oracle::random_perm(rep.n, rng);
      SubgroupRep c{rep.n, Perm(rep.n), Perm(rep.n)};
      for (int x = 0; x < rep.n; ++x) {
        c.sigma3[r[x]] = r[rep.sigma3[x]];
        c.sigma2[r[x]] = r[rep.sigma2[x]];
      }
      CHECK(canonical_rep(c) == rep);
    }
  }
}

TEST_CASE("subgroup counts match brute force") {
  for (int n = 1; n <= 6; ++n) {
    auto brute = brute_class_counts_by_genus(n);
    std::map<int, int> ours;
    for (const auto& rep : enumerate_subgroups(n, std::nullopt))
      if (rep.n == n) ours[rep.genus()]++;
    CHECK_MESSAGE(ours == brute, "index " << n);
  }
  CHECK(enumerate_subgroups(1, std::nullopt).size() == 1);
  CHECK_THROWS_AS(enumerate_subgroups(25, std::nullopt), Error);
}

TEST_CASE("unique class for A6 with three B2 ends") {
  int hits = 0;
  for (const auto& rep : enumerate_subgroups(3, 0))
    if (rep_graph_datum(rep) == GraphDatum{1, 0, 3}) ++hits;
  CHECK(hits == 1);
}

TEST_CASE("parallel enumeration is deterministic") {
  CHECK(enumerate_subgroups(9, 0, 1) == enumerate_subgroups(9, 0, 4));
}
