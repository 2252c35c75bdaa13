#include "monodromy/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "monodromy/error.hpp"

namespace monodromy {

std::optional<int> rh_genus(const BranchProfile& bp) {
  int total = 0;
  for (const auto& p : bp.profiles) total += branching(p);
  int twice = total - 2 * bp.degree + 2;
  if (twice < 0 || twice % 2 != 0) return std::nullopt;
  return twice / 2;
}

bool for_each_in_class(int n, const Partition& type, const std::function<bool(const Perm&)>& visit) {
  std::map<int, int> remaining;
  for (int len : type) ++remaining[len];
  Perm p(static_cast<size_t>(n), -1);
  std::vector<char> used(static_cast<size_t>(n), 0);
  std::vector<int> cyc;

  std::function<bool()> next_cycle;
  std::function<bool(int)> extend = [&](int len) -> bool {
    if (static_cast<int>(cyc.size()) == len) {
      for (int i = 0; i < len; ++i) p[static_cast<size_t>(cyc[static_cast<size_t>(i)])] = cyc[static_cast<size_t>((i + 1) % len)];
      return next_cycle();
    }
    for (int x = cyc[0] + 1; x < n; ++x) {
      if (used[static_cast<size_t>(x)]) continue;
      used[static_cast<size_t>(x)] = 1;
      cyc.push_back(x);
      bool go = extend(len);
      cyc.pop_back();
      used[static_cast<size_t>(x)] = 0;
      if (!go) return false;
    }
    return true;
  };
  next_cycle = [&]() -> bool {
    int first = -1;
    for (int x = 0; x < n; ++x)
      if (!used[static_cast<size_t>(x)]) { first = x; break; }
    if (first < 0) return visit(p);
    for (auto& [len, count] : remaining) {
      if (count == 0) continue;
      --count;
      used[static_cast<size_t>(first)] = 1;
      std::vector<int> saved = std::move(cyc);
      cyc = {first};
      bool go = extend(len);
      cyc = std::move(saved);
      used[static_cast<size_t>(first)] = 0;
      ++count;
      if (!go) return false;
    }
    return true;
  };
  return next_cycle();
}

namespace {

bool is_simple(const Partition& p) { return branching(p) == 1; }

Perm transposition(int n, int a, int b) {
  Perm t = identity_perm(n);
  std::swap(t[static_cast<size_t>(a)], t[static_cast<size_t>(b)]);
  return t;
}

// Transpositions with product `target` whose addition to `base` makes the group
// transitive, or nullopt when `t` transpositions cannot do it.
std::optional<std::vector<Perm>> complete(int n, const std::vector<Perm>& base, const Perm& target, int t) {
  int blocks = 0;
  std::vector<Perm> gens = base;
  gens.push_back(target);
  std::vector<int> block = orbit_ids(n, gens, &blocks);
  const int need = n - cycle_count(target) + 2 * (blocks - 1);
  if (t < need || (t - need) % 2 != 0) return std::nullopt;
  std::vector<Perm> out;
  std::vector<int> rep(static_cast<size_t>(blocks), -1);
  for (int x = 0; x < n; ++x)
    if (rep[static_cast<size_t>(block[static_cast<size_t>(x)])] < 0) rep[static_cast<size_t>(block[static_cast<size_t>(x)])] = x;
  for (int b = 1; b < blocks; ++b) {
    out.push_back(transposition(n, rep[0], rep[static_cast<size_t>(b)]));
    out.push_back(transposition(n, rep[0], rep[static_cast<size_t>(b)]));
  }
  for (const auto& c : cycles(target))
    for (size_t i = 1; i < c.size(); ++i) out.push_back(transposition(n, c[0], c[i]));
  while (static_cast<int>(out.size()) < t) {
    out.push_back(transposition(n, 0, 1));
    out.push_back(transposition(n, 0, 1));
  }
  return out;
}

}  // namespace

bool verify_constellation(const Constellation& c) {
  if (c.perms.size() != c.profiles.size()) return false;
  Perm prod = identity_perm(c.degree);
  for (size_t i = 0; i < c.perms.size(); ++i) {
    if (c.perms[i].size() != static_cast<size_t>(c.degree) || !is_permutation(c.perms[i])) return false;
    if (cycle_type(c.perms[i]) != normalized(c.profiles[i])) return false;
    prod = compose(prod, c.perms[i]);
  }
  if (prod != identity_perm(c.degree)) return false;
  return is_transitive(c.degree, c.perms);
}

std::optional<Constellation> realizable(const BranchProfile& bp) {
  const int d = bp.degree;
  if (d < 1) throw Error(ErrorCode::InvalidProfile, "degree must be positive");
  for (const auto& p : bp.profiles)
    if (!is_partition_of(p, d)) throw Error(ErrorCode::InvalidProfile, "profile " + std::to_string(p.size()) + "-part does not sum to degree");
  if (d > 12) throw Error(ErrorCode::DegreeTooLarge, "degree " + std::to_string(d) + " exceeds 12");

  std::vector<Partition> heavy;
  std::vector<Partition> trivial;
  int t = 0;
  for (const auto& p : bp.profiles) {
    Partition q = normalized(p);
    if (branching(q) == 0) trivial.push_back(q);
    else if (is_simple(q)) ++t;
    else heavy.push_back(q);
  }
  std::sort(heavy.begin(), heavy.end(), [](const Partition& a, const Partition& b) {
    return branching(a) != branching(b) ? branching(a) > branching(b) : a > b;
  });

  auto assemble = [&](std::vector<Perm> perms, const std::vector<Perm>& tail) {
    Constellation c;
    c.degree = d;
    c.profiles = heavy;
    c.perms = std::move(perms);
    for (const auto& tp : tail) {
      c.profiles.push_back(cycle_type(tp));
      c.perms.push_back(tp);
    }
    for (const auto& q : trivial) {
      c.profiles.push_back(q);
      c.perms.push_back(identity_perm(d));
    }
    return c;
  };

  std::optional<Constellation> found;
  auto try_finish = [&](const std::vector<Perm>& chosen, const Perm& product) -> bool {
    Perm target = inverse(product);
    if (t == 0) {
      if (target != identity_perm(d) || !is_transitive(d, chosen)) return false;
      found = assemble(chosen, {});
      return true;
    }
    auto tail = complete(d, chosen, target, t);
    if (!tail) return false;
    found = assemble(chosen, *tail);
    return true;
  };

  if (heavy.empty()) {
    try_finish({}, identity_perm(d));
  } else {
    std::vector<Perm> chosen{perm_with_cycle_type(d, heavy[0])};
    const size_t m = heavy.size();
    std::function<bool(size_t, const Perm&)> search = [&](size_t i, const Perm& product) -> bool {
      if (i == m) return try_finish(chosen, product);
      if (i == m - 1 && t == 0) {
        Perm last = inverse(product);
        if (cycle_type(last) != heavy[i]) return false;
        chosen.push_back(last);
        bool ok = try_finish(chosen, compose(product, last));
        chosen.pop_back();
        return ok;
      }
      bool done = false;
      for_each_in_class(d, heavy[i], [&](const Perm& g) {
        chosen.push_back(g);
        done = search(i + 1, compose(product, g));
        chosen.pop_back();
        return !done;
      });
      return done;
    };
    const Perm first = chosen[0];
    search(1, first);
  }
  if (found && !verify_constellation(*found))
    throw Error(ErrorCode::InvalidProfile, "internal error: constellation failed verification");
  return found;
}

BranchProfile parse_branch_profile(int degree, const std::string& text) {
  BranchProfile bp{degree, {}};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    Partition p;
    std::stringstream is(item);
    std::string num;
    while (std::getline(is, num, ',')) {
      num.erase(std::remove_if(num.begin(), num.end(), [](char c) { return c == ' ' || c == '(' || c == ')'; }), num.end());
      if (num.empty()) continue;
      if (num.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorCode::ParseError, "bad profile entry '" + num + "'");
      p.push_back(std::stoi(num));
    }
    if (p.empty()) throw Error(ErrorCode::ParseError, "empty profile in '" + text + "'");
    bp.profiles.push_back(normalized(std::move(p)));
  }
  return bp;
}

}  // namespace monodromy
