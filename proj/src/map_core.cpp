#include "monodromy/map_core.hpp"

#include <algorithm>
#include <array>

#include "monodromy/error.hpp"

namespace monodromy {

Perm OrientedMap::phi() const { return compose(alpha, sigma); }

int OrientedMap::vertex_count() const { return cycle_count(sigma); }

int OrientedMap::face_count() const { return cycle_count(phi()); }

int OrientedMap::euler_characteristic() const {
  return vertex_count() - edge_count() + face_count();
}

OrientedMap OrientedMap::mirror() const { return OrientedMap{dart_count, inverse(sigma), alpha}; }

OrientedMap build_map(int dart_count, Perm sigma, Perm alpha) {
  if (dart_count < 0 || sigma.size() != static_cast<size_t>(dart_count) ||
      alpha.size() != static_cast<size_t>(dart_count) || !is_permutation(sigma) ||
      !is_permutation(alpha))
    throw Error(ErrorCode::NotPermutation, "sigma and alpha must permute 0..dart_count-1");
  for (int d = 0; d < dart_count; ++d) {
    if (alpha[static_cast<size_t>(d)] == d)
      throw Error(ErrorCode::HasFixedPoint, "alpha fixes dart " + std::to_string(d));
    if (alpha[static_cast<size_t>(alpha[static_cast<size_t>(d)])] != d)
      throw Error(ErrorCode::NotInvolution, "alpha is not an involution at dart " + std::to_string(d));
  }
  std::array<Perm, 2> gens{sigma, alpha};
  if (!is_transitive(dart_count, gens))
    throw Error(ErrorCode::NotConnected, "sigma and alpha do not act transitively");
  return OrientedMap{dart_count, std::move(sigma), std::move(alpha)};
}

int genus(const OrientedMap& m) { return (2 - m.euler_characteristic()) / 2; }

namespace {

// BFS labelling from `root`; writes the code into `out` and stops early once it
// exceeds `best` (returns false). Darts are visited in label order, sigma before alpha.
bool bfs_code(const OrientedMap& m, const DartColors& colors, int root, std::vector<int>& label,
              std::vector<int>& order, std::string& out, const std::string* best) {
  std::fill(label.begin(), label.end(), -1);
  order.clear();
  label[static_cast<size_t>(root)] = 0;
  order.push_back(root);
  out.clear();
  bool tied = best != nullptr;
  for (size_t i = 0; i < order.size(); ++i) {
    int d = order[i];
    std::array<int, 2> nbr{m.sigma[static_cast<size_t>(d)], m.alpha[static_cast<size_t>(d)]};
    for (int y : nbr) {
      if (label[static_cast<size_t>(y)] < 0) {
        label[static_cast<size_t>(y)] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
    std::array<char, 3> chunk{static_cast<char>(label[static_cast<size_t>(nbr[0])]),
                              static_cast<char>(label[static_cast<size_t>(nbr[1])]),
                              static_cast<char>(colors.empty() ? 0 : colors[static_cast<size_t>(d)])};
    for (char c : chunk) {
      if (tied) {
        unsigned char a = static_cast<unsigned char>(c);
        unsigned char b = static_cast<unsigned char>((*best)[out.size()]);
        if (a > b) return false;
        if (a < b) tied = false;
      }
      out.push_back(c);
    }
  }
  return true;
}

}  // namespace

std::string canonical_code(const OrientedMap& m, const DartColors& colors) {
  if (m.dart_count > 255) throw Error(ErrorCode::InvalidProfile, "map too large for byte codes");
  std::string best, cur;
  std::vector<int> label(static_cast<size_t>(m.dart_count)), order;
  for (int r = 0; r < m.dart_count; ++r) {
    if (bfs_code(m, colors, r, label, order, cur, best.empty() ? nullptr : &best)) {
      if (best.empty() || cur < best) best = cur;
    }
  }
  std::string header(1, static_cast<char>(m.dart_count));
  return header + best;
}

MapIsoClass iso_class(const OrientedMap& m, const DartColors& colors) {
  return MapIsoClass{canonical_code(m, colors), canonical_code(m.mirror(), colors)};
}

std::vector<Perm> automorphisms(const OrientedMap& m, const DartColors& colors) {
  std::vector<Perm> result;
  const int n = m.dart_count;
  if (n == 0) return {Perm{}};
  auto color = [&](int d) { return colors.empty() ? 0 : colors[static_cast<size_t>(d)]; };
  for (int t = 0; t < n; ++t) {
    if (color(0) != color(t)) continue;
    Perm img(static_cast<size_t>(n), -1);
    std::vector<int> stack{0};
    img[0] = t;
    bool ok = true;
    while (ok && !stack.empty()) {
      int d = stack.back();
      stack.pop_back();
      const std::array<const Perm*, 2> gens{&m.sigma, &m.alpha};
      for (const Perm* g : gens) {
        int x = (*g)[static_cast<size_t>(d)];
        int y = (*g)[static_cast<size_t>(img[static_cast<size_t>(d)])];
        if (img[static_cast<size_t>(x)] < 0) {
          if (color(x) != color(y)) {
            ok = false;
            break;
          }
          img[static_cast<size_t>(x)] = y;
          stack.push_back(x);
        } else if (img[static_cast<size_t>(x)] != y) {
          ok = false;
          break;
        }
      }
    }
    if (ok && is_permutation(img)) result.push_back(std::move(img));
  }
  return result;
}

OrientedMap relabeled(const OrientedMap& m, const Perm& relabel) {
  OrientedMap r{m.dart_count, Perm(m.sigma.size()), Perm(m.alpha.size())};
  for (size_t d = 0; d < m.sigma.size(); ++d) {
    r.sigma[static_cast<size_t>(relabel[d])] = relabel[static_cast<size_t>(m.sigma[d])];
    r.alpha[static_cast<size_t>(relabel[d])] = relabel[static_cast<size_t>(m.alpha[d])];
  }
  return r;
}

}  // namespace monodromy
