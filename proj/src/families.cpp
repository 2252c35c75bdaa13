#include "monodromy/families.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "monodromy/enumerator.hpp"
#include "monodromy/error.hpp"
#include "monodromy/subgroup.hpp"

namespace monodromy {

namespace {

Partition reduced(const Partition& p) {
  Partition q;
  for (int e : p)
    if (e >= 2) q.push_back(e);
  return normalized(std::move(q));
}

Partition padded(const Partition& p, int d) {
  Partition q = p;
  int s = 0;
  for (int e : p) s += e;
  for (; s < d; ++s) q.push_back(1);
  return normalized(std::move(q));
}

void sort_desc(std::vector<Partition>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

// All partitions of n in descending order of parts, listed in descending lexicographic order.
std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Multisets of size k drawn from `items` (indices non-decreasing).
void for_each_multiset(size_t count, size_t k, const std::function<void(const std::vector<size_t>&)>& f) {
  std::vector<size_t> idx;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (idx.size() == k) {
      f(idx);
      return;
    }
    for (size_t i = start; i < count; ++i) {
      idx.push_back(i);
      rec(i);
      idx.pop_back();
    }
  };
  rec(0);
}

}  // namespace

RamDatum RamDatum::canonical() const {
  RamDatum c = *this;
  for (auto& p : c.over_a) p = normalized(p);
  for (auto& p : c.over_b) p = normalized(p);
  std::vector<Partition> u;
  for (const auto& p : c.unspecified) {
    Partition q = reduced(p);
    if (!q.empty()) u.push_back(std::move(q));
  }
  c.unspecified = std::move(u);
  sort_desc(c.over_a);
  sort_desc(c.over_b);
  sort_desc(c.unspecified);
  return c;
}

int RamDatum::total_branching() const {
  int b = 0;
  for (const auto& p : over_a) b += branching(p);
  for (const auto& p : over_b) b += branching(p);
  for (const auto& p : unspecified) b += branching(p);
  return b;
}

BranchProfile RamDatum::branch_profile() const {
  BranchProfile bp{degree, {}};
  for (const auto& p : over_a) bp.profiles.push_back(padded(p, degree));
  for (const auto& p : over_b) bp.profiles.push_back(padded(p, degree));
  for (const auto& p : unspecified) bp.profiles.push_back(padded(p, degree));
  return bp;
}

std::string format_rd(const RamDatum& rd) {
  std::string s = "[";
  bool first = true;
  auto add = [&](const Partition& p, const char* suffix) {
    if (!first) s += ",";
    first = false;
    s += format_partition(p) + suffix;
  };
  for (const auto& p : rd.over_a) add(p, "_A");
  for (const auto& p : rd.over_b) add(p, "_B");
  for (const auto& p : rd.unspecified) add(p, "");
  return s + "]";
}

RamDatum parse_rd(int degree, const std::string& text) {
  RamDatum rd;
  rd.degree = degree;
  size_t i = 0;
  while (i < text.size()) {
    size_t open = text.find('(', i);
    if (open == std::string::npos) break;
    size_t close = text.find(')', open);
    if (close == std::string::npos) throw Error(ErrorCode::ParseError, "unbalanced parenthesis in '" + text + "'");
    Partition p = parse_partition(text.substr(open, close - open + 1));
    i = close + 1;
    std::string tag;
    if (i + 1 < text.size() && text[i] == '_') {
      tag = text.substr(i + 1, 1);
      i += 2;
    }
    int power = 1;
    if (i < text.size() && text[i] == '^') {
      size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      power = std::stoi(text.substr(i + 1, j - i - 1));
      i = j;
    }
    for (int k = 0; k < power; ++k) {
      if (tag == "A") rd.over_a.push_back(p);
      else if (tag == "B") rd.over_b.push_back(p);
      else if (tag.empty()) rd.unspecified.push_back(p);
      else throw Error(ErrorCode::ParseError, "unknown subscript '" + tag + "'");
    }
  }
  for (const auto& p : rd.over_a)
    if (!is_partition_of(p, degree)) throw Error(ErrorCode::ParseError, "A-vector does not sum to the degree");
  for (const auto& p : rd.over_b)
    if (!is_partition_of(p, degree)) throw Error(ErrorCode::ParseError, "B-vector does not sum to the degree");
  return rd;
}

AlphaBeta alphas_betas(const GraphDatum& gd, const RamDatum& rd) {
  if (static_cast<int>(rd.over_a.size()) != gd.a2 || static_cast<int>(rd.over_b.size()) != gd.b2)
    throw Error(ErrorCode::ShapeMismatch, "need one vector per end of " + format_gd(gd));
  AlphaBeta ab;
  for (const auto& p : rd.over_a)
    for (int e : p) {
      if (e % 3 == 1) ++ab.alpha1;
      else if (e % 3 == 2) ++ab.alpha2;
    }
  for (const auto& p : rd.over_b)
    for (int e : p)
      if (e % 2 == 1) ++ab.beta1;
  return ab;
}

int surface_et(int d, int delta, int alpha1, int alpha2, int beta1, int ell) {
  return d * delta + 8 * alpha2 + 4 * alpha1 + 6 * beta1 + 12 * ell;
}

bool is_special(const GraphDatum& gd, const RamDatum& rd) {
  const AlphaBeta ab = alphas_betas(gd, rd);
  return surface_et(rd.degree, gd.delta(), ab.alpha1, ab.alpha2, ab.beta1, 0) < rd.degree * gd.et();
}

bool is_group_covering(const GraphDatum& gd, const RamDatum& rd) {
  alphas_betas(gd, rd);
  if (!rd.canonical().unspecified.empty()) return false;
  for (const auto& p : rd.over_a)
    for (int e : p)
      if (e != 1 && e != 3) return false;
  for (const auto& p : rd.over_b)
    for (int e : p)
      if (e != 1 && e != 2) return false;
  return true;
}

namespace {

// One collision: drop a simple point, merge two parts of one remaining local vector.
std::vector<RamDatum> one_step(const RamDatum& rd) {
  std::set<RamDatum> out;
  const RamDatum c = rd.canonical();
  for (size_t s = 0; s < c.unspecified.size(); ++s) {
    if (c.unspecified[s] != Partition{2}) continue;
    RamDatum base = c;
    base.unspecified.erase(base.unspecified.begin() + static_cast<std::ptrdiff_t>(s));
    auto merge_into = [&](std::vector<Partition> RamDatum::*list, size_t i, bool pad) {
      Partition v = pad ? padded((base.*list)[i], base.degree) : (base.*list)[i];
      for (size_t a = 0; a < v.size(); ++a)
        for (size_t b = a + 1; b < v.size(); ++b) {
          Partition w;
          for (size_t k = 0; k < v.size(); ++k)
            if (k != a && k != b) w.push_back(v[k]);
          w.push_back(v[a] + v[b]);
          RamDatum next = base;
          (next.*list)[i] = normalized(w);
          out.insert(next.canonical());
        }
    };
    for (size_t i = 0; i < base.over_a.size(); ++i) merge_into(&RamDatum::over_a, i, false);
    for (size_t i = 0; i < base.over_b.size(); ++i) merge_into(&RamDatum::over_b, i, false);
    for (size_t i = 0; i < base.unspecified.size(); ++i) merge_into(&RamDatum::unspecified, i, true);
    break;  // every simple point gives the same set of moves
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<RamDatum> degenerations(const RamDatum& rd) {
  std::set<RamDatum> seen;
  std::vector<RamDatum> frontier{rd.canonical()};
  while (!frontier.empty()) {
    std::vector<RamDatum> next;
    for (const auto& x : frontier)
      for (auto& y : one_step(x))
        if (seen.insert(y).second) next.push_back(std::move(y));
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool is_degeneration_of(const RamDatum& lower, const RamDatum& upper) {
  if (lower.degree != upper.degree) return false;
  const RamDatum target = lower.canonical();
  const RamDatum top = upper.canonical();
  if (target.total_branching() != top.total_branching()) return false;
  if (target.over_a.size() != top.over_a.size() || target.over_b.size() != top.over_b.size()) return false;
  std::set<RamDatum> seen;
  std::vector<RamDatum> frontier{top};
  while (!frontier.empty()) {
    std::vector<RamDatum> next;
    for (const auto& x : frontier)
      for (auto& y : one_step(x)) {
        if (y == target) return true;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return false;
}

bool record_less(const FamilyRecord& a, const FamilyRecord& b) {
  return std::tie(a.gd, a.rd.degree, a.ell, a.rd) < std::tie(b.gd, b.rd.degree, b.ell, b.rd);
}

int component_dimension(const RamDatum& rd, int ell) {
  return static_cast<int>(rd.canonical().unspecified.size()) + ell;
}

std::vector<GraphDatum> candidate_graph_data(int r) {
  std::set<GraphDatum> gds;
  for (int et = 12; et <= 24 * r; et += 12)
    for (const auto& g : enumerate_tgamma(et)) gds.insert(graph_datum(g));
  return {gds.begin(), gds.end()};
}

namespace {

std::optional<MarkedGraph> representative(const GraphDatum& gd) {
  if (gd.et() > 48) return std::nullopt;
  for (const auto& g : enumerate_tgamma(gd.et()))
    if (graph_datum(g) == gd) return g;
  return std::nullopt;
}

std::vector<FamilyRecord> classify_gd(int r, const GraphDatum& gd) {
  std::vector<FamilyRecord> out;
  const int target = 24 * r;
  const int delta = gd.delta();
  if (gd.index() <= 1 || gd.et() > target) return out;
  auto graph = representative(gd);
  for (int d = 2; d * delta <= target; ++d) {
    const auto parts = partitions_of(d);
    for_each_multiset(parts.size(), static_cast<size_t>(gd.a2), [&](const std::vector<size_t>& ia) {
      for_each_multiset(parts.size(), static_cast<size_t>(gd.b2), [&](const std::vector<size_t>& ib) {
        RamDatum rd;
        rd.degree = d;
        for (size_t i : ia) rd.over_a.push_back(parts[i]);
        for (size_t i : ib) rd.over_b.push_back(parts[i]);
        const int end_branching = rd.total_branching();
        const int simple = 2 * d - 2 - end_branching;
        if (simple < 0) return;
        const AlphaBeta ab = alphas_betas(gd, rd);
        const int base = surface_et(d, delta, ab.alpha1, ab.alpha2, ab.beta1, 0);
        if (base > target || (target - base) % 12 != 0) return;
        const int ell = (target - base) / 12;
        if (ell > 3) return;
        for (int i = 0; i < simple; ++i) rd.unspecified.push_back({2});
        if (!is_special(gd, rd) || is_group_covering(gd, rd)) return;
        auto witness = realizable(rd.branch_profile());
        if (!witness) return;
        FamilyRecord rec;
        rec.gd = gd;
        rec.graph = graph;
        rec.rd = rd.canonical();
        rec.ell = ell;
        rec.et_surface = surface_et(d, delta, ab.alpha1, ab.alpha2, ab.beta1, ell);
        rec.special = true;
        rec.dimension = component_dimension(rec.rd, ell);
        rec.witness = std::move(witness);
        out.push_back(std::move(rec));
      });
    });
  }
  for (auto& rec : out) {
    for (const auto& other : out) {
      if (&other == &rec || other.rd.degree != rec.rd.degree || other.ell != rec.ell) continue;
      if (is_degeneration_of(rec.rd, other.rd)) {
        rec.generic = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<FamilyRecord> classify_special(int r, const ClassifyOptions& opts) {
  if (r != 1 && r != 2) throw Error(ErrorCode::InvalidProfile, "surface class must be 1 or 2");
  std::vector<GraphDatum> gds;
  if (opts.gd) gds.push_back(*opts.gd);
  else gds = candidate_graph_data(r);
  std::vector<std::vector<FamilyRecord>> parts(gds.size());
  if (opts.jobs > 1) {
    // Warm the shared enumeration cache before fanning out.
    for (int et = 12; et <= 24 * r; et += 12) enumerate_tgamma(et);
    std::vector<std::future<std::vector<FamilyRecord>>> futures;
    size_t next = 0;
    while (next < gds.size()) {
      futures.clear();
      size_t start = next;
      for (int j = 0; j < opts.jobs && next < gds.size(); ++j, ++next)
        futures.push_back(std::async(std::launch::async, classify_gd, r, gds[next]));
      for (size_t j = 0; j < futures.size(); ++j) parts[start + j] = futures[j].get();
    }
  } else {
    for (size_t i = 0; i < gds.size(); ++i) parts[i] = classify_gd(r, gds[i]);
  }
  std::vector<FamilyRecord> out;
  for (auto& p : parts)
    for (auto& rec : p)
      if (rec.generic || opts.include_degenerations) out.push_back(std::move(rec));
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

std::optional<FamilyRecord> general_family(const MarkedGraph& g, int r, int ell) {
  if (ell < 0 || ell > 3) return std::nullopt;
  const int et = et_gamma(g);
  const int rest = 24 * r - 12 * ell;
  if (rest <= 0 || rest % et != 0) return std::nullopt;
  const int d = rest / et;
  const GraphDatum gd = graph_datum(g);
  FamilyRecord rec;
  rec.gd = gd;
  rec.graph = g;
  rec.rd.degree = d;
  Partition ones(static_cast<size_t>(d), 1);
  rec.rd.over_a.assign(static_cast<size_t>(gd.a2), ones);
  rec.rd.over_b.assign(static_cast<size_t>(gd.b2), ones);
  rec.rd.unspecified.assign(static_cast<size_t>(2 * d - 2), Partition{2});
  rec.ell = ell;
  const AlphaBeta ab = alphas_betas(gd, rec.rd);
  rec.et_surface = surface_et(d, gd.delta(), ab.alpha1, ab.alpha2, ab.beta1, ell);
  rec.special = false;
  rec.generic = true;
  rec.dimension = component_dimension(rec.rd, ell);
  if (d <= 12) rec.witness = realizable(rec.rd.branch_profile());
  return rec;
}

std::vector<JGammaRamification> unstable_candidates() {
  std::vector<JGammaRamification> out;
  for (int n = 3; n <= 4; ++n) {
    Partition v0 = n == 3 ? Partition{3} : Partition{3, 1};
    for (const auto& v1 : partitions_of(n)) {
      if (v1[0] > 2) continue;
      for (const auto& vi : partitions_of(n)) {
        BranchProfile bp{n, {v0, v1, vi}};
        if (rh_genus(bp) == 0) out.push_back({v0, v1, vi});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<UnstableRow> unstable_rational_table() {
  std::vector<UnstableRow> rows;
  for (const auto& cand : unstable_candidates()) {
    const int n = cand.v0.size() == 1 ? 3 : 4;
    auto c = realizable(BranchProfile{n, {cand.v0, cand.v1, cand.v_inf}});
    if (!c) continue;
    // Pick sigma3 (or its inverse) and sigma2 among the factors so that the face
    // permutation has the third type.
    std::optional<SubgroupRep> rep;
    for (size_t i = 0; i < c->perms.size() && !rep; ++i)
      for (size_t j = 0; j < c->perms.size() && !rep; ++j) {
        if (i == j) continue;
        for (const Perm& s3 : {c->perms[i], inverse(c->perms[i])}) {
          SubgroupRep cand_rep{n, s3, c->perms[j]};
          if (cycle_type(cand_rep.sigma3) == cand.v0 && cycle_type(cand_rep.sigma2) == cand.v1 &&
              rep_ramification(cand_rep) == cand) {
            rep = cand_rep;
            break;
          }
        }
      }
    if (!rep) continue;
    MarkedGraph g = from_permutation_pair(*rep);
    JGammaRamification got = rd_jgamma(g);
    if (got != cand) continue;
    rows.push_back({graph_datum(g), got});
  }
  std::sort(rows.begin(), rows.end(), [](const UnstableRow& a, const UnstableRow& b) {
    return std::tie(a.gd, a.rd) < std::tie(b.gd, b.rd);
  });
  return rows;
}

namespace {

bool member_2a2(const FamilyRecord& rec) {
  if (rec.gd != GraphDatum{0, 2, 0}) return false;
  const int d = rec.rd.degree;
  int n = 0;
  for (const auto& p : rec.rd.over_a)
    for (int e : p) {
      if (e == 3) ++n;
      else if (e != 1) return false;
    }
  if (n == 0) return false;
  const int free_part = d - n;
  if (free_part + rec.ell != 4) return false;
  const auto& u = rec.rd.unspecified;
  if (static_cast<int>(u.size()) != 2 * (free_part - 1)) return false;
  return std::all_of(u.begin(), u.end(), [](const Partition& p) { return p == Partition{2}; });
}

bool member_a6b2(const FamilyRecord& rec) {
  if (rec.gd != GraphDatum{1, 0, 1}) return false;
  const int d = rec.rd.degree;
  const Partition& beta = rec.rd.over_b.at(0);
  int odd = 0, even = 0;
  for (int e : beta) {
    if (e == 1) ++odd;
    else if (e == 2) ++even;
    else return false;
  }
  if (even == 0 || d + odd + 2 * rec.ell != 8) return false;
  const auto& u = rec.rd.unspecified;
  const int parts = static_cast<int>(beta.size());
  return static_cast<int>(u.size()) == d + parts - 2 &&
         std::all_of(u.begin(), u.end(), [](const Partition& p) { return p == Partition{2}; });
}

}  // namespace

std::vector<ParametricFamily> parametric_families(int r) {
  if (r != 2) return {};
  return {
      ParametricFamily{2, GraphDatum{0, 2, 0},
                       "[(3^n1,1^(d-3n1))_A,(3^n2,1^(d-3n2))_A,(2)^(2(d-n1-n2-1))] with d-n1-n2+ell=4, n1+n2>=1",
                       member_2a2},
      ParametricFamily{2, GraphDatum{1, 0, 1},
                       "[(2^e,1^o)_B,(2)^(d+e+o-2)] with d=2e+o, e>=1, d+o+2ell=8", member_a6b2},
  };
}

}  // namespace monodromy
