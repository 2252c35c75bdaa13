#include "monodromy/enumerator.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "monodromy/error.hpp"

namespace monodromy {

namespace {

// Plane trees with stubs, grown breadth-first from a root vertex; every complete tree is
// closed up by each non-crossing matching of its stubs along the single face.
class ShapeBuilder {
 public:
  ShapeBuilder(int trivalent, int ends) : trivalent_(trivalent), ends_(ends) {}

  std::vector<OrientedMap> run() {
    if (trivalent_ == 0) {
      if (ends_ == 2) add_vertex(1), add_vertex(1), link(0, 1), finish();
    } else if (3 * trivalent_ + ends_ >= 2 && (3 * trivalent_ + ends_) % 2 == 0) {
      add_vertex(3);
      pending_ = {0, 1, 2};
      grow(0);
    }
    std::vector<std::pair<std::string, OrientedMap>> sorted(found_.begin(), found_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<OrientedMap> out;
    for (auto& [code, m] : sorted) out.push_back(std::move(m));
    return out;
  }

 private:
  int add_vertex(int valence) {
    int first = static_cast<int>(sigma_.size());
    for (int i = 0; i < valence; ++i) {
      sigma_.push_back(first + (i + 1) % valence);
      alpha_.push_back(-1);
    }
    (valence == 3 ? used_tri_ : used_ends_) += 1;
    return first;
  }

  void remove_vertex(int valence) {
    sigma_.resize(sigma_.size() - static_cast<size_t>(valence));
    alpha_.resize(alpha_.size() - static_cast<size_t>(valence));
    (valence == 3 ? used_tri_ : used_ends_) -= 1;
  }

  void link(int a, int b) {
    alpha_[static_cast<size_t>(a)] = b;
    alpha_[static_cast<size_t>(b)] = a;
  }

  void grow(size_t pos) {
    if (pos == pending_.size()) {
      if (used_tri_ == trivalent_ && used_ends_ == ends_) close_up();
      return;
    }
    const int d = pending_[pos];
    // Stub: stays unmatched in the tree.
    stubs_.push_back(d);
    grow(pos + 1);
    stubs_.pop_back();
    if (used_ends_ < ends_) {
      int e = add_vertex(1);
      link(d, e);
      grow(pos + 1);
      alpha_[static_cast<size_t>(d)] = -1;
      remove_vertex(1);
    }
    if (used_tri_ < trivalent_) {
      int t = add_vertex(3);
      link(d, t);
      pending_.push_back(t + 1);
      pending_.push_back(t + 2);
      grow(pos + 1);
      pending_.pop_back();
      pending_.pop_back();
      alpha_[static_cast<size_t>(d)] = -1;
      remove_vertex(3);
    }
  }

  void close_up() {
    if (stubs_.size() % 2 != 0) return;
    // Face order of the stubs: walk x -> sigma(alpha(x)) with stubs treated as fixed by alpha.
    std::vector<int> face;
    const int start = 0;
    int x = start;
    do {
      int a = alpha_[static_cast<size_t>(x)];
      if (a < 0) {
        face.push_back(x);
        a = x;
      }
      x = sigma_[static_cast<size_t>(a)];
    } while (x != start);
    match(face, 0);
  }

  // Non-crossing perfect matchings of the stubs in face order, built with a stack.
  void match(const std::vector<int>& face, size_t pos) {
    if (pos == face.size()) {
      if (open_.empty()) finish();
      return;
    }
    const int s = face[pos];
    if (!open_.empty()) {
      int t = open_.back();
      open_.pop_back();
      link(t, s);
      match(face, pos + 1);
      alpha_[static_cast<size_t>(t)] = -1;
      alpha_[static_cast<size_t>(s)] = -1;
      open_.push_back(t);
    }
    if (open_.size() < face.size() - pos - 1) {
      open_.push_back(s);
      match(face, pos + 1);
      open_.pop_back();
    }
  }

  void finish() {
    OrientedMap m{static_cast<int>(sigma_.size()), sigma_, alpha_};
    if (genus(m) != 0) throw Error(ErrorCode::GenusNotZero, "stub matching produced a non-planar map");
    std::string code = canonical_code(m);
    found_.try_emplace(std::move(code), std::move(m));
  }

  int trivalent_, ends_;
  int used_tri_ = 0, used_ends_ = 0;
  Perm sigma_, alpha_;
  std::vector<int> pending_, stubs_, open_;
  std::unordered_map<std::string, OrientedMap> found_;
};

std::mutex cache_mutex;
std::map<std::pair<int, int>, std::vector<OrientedMap>>& shape_cache() {
  static std::map<std::pair<int, int>, std::vector<OrientedMap>> cache;
  return cache;
}

}  // namespace

std::vector<OrientedMap> enumerate_shapes(int trivalent, int ends) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = shape_cache().find({trivalent, ends});
    if (it != shape_cache().end()) return it->second;
  }
  auto shapes = ShapeBuilder(trivalent, ends).run();
  std::lock_guard<std::mutex> lock(cache_mutex);
  shape_cache()[{trivalent, ends}] = shapes;
  return shapes;
}

std::vector<OrientedMap> enumerate_shapes_by_vertices(int vertices) {
  std::vector<OrientedMap> out;
  for (int t = vertices; t >= 0; --t) {
    int k = vertices - t;
    // A connected graph needs at least t - k >= -2, and an even dart count.
    if (t - k < -2 || (3 * t + k) % 2 != 0) continue;
    auto s = enumerate_shapes(t, k);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

std::vector<MarkedGraph> mark_shapes(const std::vector<OrientedMap>& shapes, bool modulo_reflection) {
  std::vector<std::pair<std::string, MarkedGraph>> all;
  std::unordered_set<std::string> seen;
  for (const auto& m : shapes) {
    std::vector<int> end_darts;
    for (int d = 0; d < m.dart_count; ++d)
      if (m.sigma[static_cast<size_t>(d)] == d) end_darts.push_back(d);
    const size_t k = end_darts.size();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<Mark> marks(static_cast<size_t>(m.dart_count), Mark::None);
      for (size_t i = 0; i < k; ++i)
        marks[static_cast<size_t>(end_darts[i])] = (mask >> i) & 1u ? Mark::B2 : Mark::A2;
      MarkedGraph g{m, std::move(marks)};
      DartColors c = g.colors();
      std::string code = canonical_code(m, c);
      if (modulo_reflection) code = std::min(code, canonical_code(m.mirror(), c));
      if (seen.insert(code).second) all.emplace_back(std::move(code), std::move(g));
    }
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<MarkedGraph> out;
  out.reserve(all.size());
  for (auto& [code, g] : all) out.push_back(std::move(g));
  return out;
}

std::vector<MarkedGraph> enumerate_tgamma(int et, bool modulo_reflection) {
  if (et != 12 && et != 24 && et != 36 && et != 48)
    throw Error(ErrorCode::InvalidEt, "ET must be 12, 24, 36 or 48, got " + std::to_string(et));
  return mark_shapes(enumerate_shapes_by_vertices(et / 6), modulo_reflection);
}

std::vector<MarkedGraph> enumerate_by_max_index(int max_index) {
  std::vector<MarkedGraph> out;
  for (int t = 0; 3 * t <= max_index; ++t) {
    for (int k = 0; k <= t + 2; ++k) {
      if ((3 * t + k) % 2 != 0) continue;
      auto marked = mark_shapes(enumerate_shapes(t, k), false);
      for (auto& g : marked) {
        int idx = index(g);
        if (idx >= 1 && idx <= max_index) out.push_back(std::move(g));
      }
    }
  }
  return out;
}

std::string breakdown_category(const MarkedGraph& g) {
  const StructureClass sc = structure_class(g);
  const int loops = end_loop_count(g);
  const GraphDatum gd = graph_datum(g);
  if (sc.rk_h1 == 0) return "tree";
  if (sc.rk_h1 == loops) return "tree-with-" + std::to_string(loops) + "-end-loops";
  if (gd.end_count() == 0 && loops == 0) return "saturated-no-end-loops";
  if (sc.rk_h1 == 1) {
    auto len = single_cycle_length(g);
    return "loop-plus-trees-cycle-" + std::to_string(len.value_or(0));
  }
  if (gd.end_count() == 0) return "saturated-with-end-loops";
  return "mixed";
}

std::map<std::string, int> breakdown_counts(int et, bool modulo_reflection) {
  std::map<std::string, int> counts;
  for (const auto& g : enumerate_tgamma(et, modulo_reflection)) ++counts[breakdown_category(g)];
  return counts;
}

int tree_shape_count(int et) {
  std::unordered_set<std::string> shapes;
  for (const auto& m : enumerate_shapes_by_vertices(et / 6))
    if (m.edge_count() == m.vertex_count() - 1) shapes.insert(iso_class(m).unoriented_code());
  return static_cast<int>(shapes.size());
}

}  // namespace monodromy
