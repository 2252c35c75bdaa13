#include "monodromy/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "monodromy/error.hpp"

namespace monodromy {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::HasFixedPoint: return "HasFixedPoint";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::InvalidMarking: return "InvalidMarking";
    case ErrorCode::NotTrivalent: return "NotTrivalent";
    case ErrorCode::GenusNotZero: return "GenusNotZero";
    case ErrorCode::DegenerateIndex: return "DegenerateIndex";
    case ErrorCode::InvalidEt: return "InvalidEt";
    case ErrorCode::AlreadyStar: return "AlreadyStar";
    case ErrorCode::NotMultipleOf12: return "NotMultipleOf12";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NoRationalPoint: return "NoRationalPoint";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Perm identity_perm(int n) {
  Perm p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_permutation(std::span<const int> p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || static_cast<size_t>(x) >= p.size() || seen[static_cast<size_t>(x)]) return false;
    seen[static_cast<size_t>(x)] = 1;
  }
  return true;
}

Perm inverse(std::span<const int> p) {
  Perm inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[static_cast<size_t>(p[i])] = static_cast<int>(i);
  return inv;
}

Perm compose(std::span<const int> a, std::span<const int> b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[static_cast<size_t>(a[i])];
  return r;
}

std::vector<std::vector<int>> cycles(std::span<const int> p) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(p.size(), 0);
  for (size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    for (int x = static_cast<int>(s); !seen[static_cast<size_t>(x)]; x = p[static_cast<size_t>(x)]) {
      seen[static_cast<size_t>(x)] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

int cycle_count(std::span<const int> p) {
  return static_cast<int>(cycles(p).size());
}

Partition cycle_type(std::span<const int> p) {
  Partition t;
  for (const auto& c : cycles(p)) t.push_back(static_cast<int>(c.size()));
  return normalized(std::move(t));
}

std::vector<int> orbit_ids(int n, std::span<const Perm> gens, int* orbit_count) {
  std::vector<int> id(static_cast<size_t>(n), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (id[static_cast<size_t>(s)] >= 0) continue;
    id[static_cast<size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& g : gens) {
        int y = g[static_cast<size_t>(x)];
        if (id[static_cast<size_t>(y)] < 0) {
          id[static_cast<size_t>(y)] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  if (orbit_count) *orbit_count = next;
  return id;
}

bool is_transitive(int n, std::span<const Perm> gens) {
  if (n <= 1) return true;
  int count = 0;
  orbit_ids(n, gens, &count);
  return count == 1;
}

Perm perm_with_cycle_type(int n, const Partition& type) {
  Perm p = identity_perm(n);
  int start = 0;
  for (int len : type) {
    for (int i = 0; i < len; ++i) p[static_cast<size_t>(start + i)] = start + (i + 1) % len;
    start += len;
  }
  if (start != n) throw Error(ErrorCode::InvalidProfile, "cycle type does not sum to degree");
  return p;
}

Partition normalized(Partition p) {
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

int branching(const Partition& p) {
  int b = 0;
  for (int e : p) b += e - 1;
  return b;
}

bool is_partition_of(const Partition& p, int n) {
  int s = 0;
  for (int e : p) {
    if (e <= 0) return false;
    s += e;
  }
  return s == n;
}

}  // namespace monodromy
