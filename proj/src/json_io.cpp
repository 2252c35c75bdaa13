#include "monodromy/json_io.hpp"

#include <sstream>

#include "monodromy/error.hpp"

namespace monodromy {

namespace {

Perm perm_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) throw Error(ErrorCode::ParseError, std::string("missing array: ") + key);
  Perm p;
  for (const auto& v : j.at(key)) {
    if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, std::string("non-integer entry in ") + key);
    p.push_back(v.get<int>());
  }
  return p;
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw Error(ErrorCode::ParseError, std::string("missing integer: ") + key);
  return j.at(key).get<int>();
}

Json partitions(const std::vector<Partition>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p);
  return a;
}

}  // namespace

Json to_json(const MarkedGraph& g) {
  Json j;
  j["darts"] = g.map.dart_count;
  j["sigma"] = g.map.sigma;
  j["alpha"] = g.map.alpha;
  Json marks = Json::object();
  for (int d = 0; d < g.map.dart_count; ++d)
    if (g.marks[d] != Mark::None) marks[std::to_string(d)] = g.marks[d] == Mark::A2 ? "A2" : "B2";
  j["marks"] = marks;
  return j;
}

MarkedGraph marked_graph_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "map record must be an object");
  const int n = int_field(j, "darts");
  OrientedMap m = build_map(n, perm_field(j, "sigma"), perm_field(j, "alpha"));
  std::vector<Mark> marks(n, Mark::None);
  if (j.contains("marks")) {
    if (!j.at("marks").is_object()) throw Error(ErrorCode::ParseError, "marks must be an object");
    for (const auto& [key, value] : j.at("marks").items()) {
      int d = -1;
      try {
        std::size_t used = 0;
        d = std::stoi(key, &used);
        if (used != key.size()) d = -1;
      } catch (const std::exception&) {
      }
      if (d < 0 || d >= n) throw Error(ErrorCode::ParseError, "bad dart key in marks: " + key);
      const std::string s = value.is_string() ? value.get<std::string>() : "";
      if (s == "A2") marks[d] = Mark::A2;
      else if (s == "B2") marks[d] = Mark::B2;
      else throw Error(ErrorCode::ParseError, "mark must be A2 or B2");
    }
  }
  return make_marked_graph(std::move(m), std::move(marks));
}

Json to_json(const SubgroupRep& rep) {
  Json j;
  j["n"] = rep.n;
  j["sigma3"] = rep.sigma3;
  j["sigma2"] = rep.sigma2;
  return j;
}

SubgroupRep subgroup_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "subgroup record must be an object");
  SubgroupRep rep{int_field(j, "n"), perm_field(j, "sigma3"), perm_field(j, "sigma2")};
  validate(rep);
  return rep;
}

Json to_json(const Constellation& c) {
  Json j;
  j["degree"] = c.degree;
  j["profiles"] = partitions(c.profiles);
  Json perms = Json::array();
  for (const auto& p : c.perms) perms.push_back(p);
  j["perms"] = perms;
  return j;
}

Json to_json(const RamDatum& rd) {
  Json j;
  j["degree"] = rd.degree;
  j["over_a"] = partitions(rd.over_a);
  j["over_b"] = partitions(rd.over_b);
  j["unspecified"] = partitions(rd.unspecified);
  j["text"] = format_rd(rd);
  return j;
}

Json to_json(const FamilyRecord& rec) {
  Json j;
  j["gd"] = format_gd(rec.gd);
  j["degree"] = rec.rd.degree;
  j["rd"] = to_json(rec.rd);
  j["ell"] = rec.ell;
  j["et_surface"] = rec.et_surface;
  j["special"] = rec.special;
  j["generic"] = rec.generic;
  j["dimension"] = rec.dimension;
  j["graph"] = rec.graph ? to_json(*rec.graph) : Json(nullptr);
  j["witness"] = rec.witness ? to_json(*rec.witness) : Json(nullptr);
  return j;
}

Json to_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.to_string());
  return a;
}

Json to_json(const MapWitness& w) {
  Json j;
  j["field"] = w.root == 0 ? "Q" : "Q(sqrt(" + std::to_string(w.root) + "))";
  j["degree"] = w.degree();
  j["numerator"] = to_json(w.numerator);
  j["denominator"] = to_json(w.denominator);
  return j;
}

Json to_json(const WitnessReport& r) {
  Json j;
  j["over_zero"] = r.over_zero;
  j["over_one"] = r.over_one;
  j["over_infinity"] = r.over_infinity;
  j["unspecified_branching"] = r.unspecified.total;
  j["unspecified_values"] = r.unspecified.critical_values;
  j["unspecified_simple"] = r.unspecified.all_simple;
  j["rh_closes"] = r.rh_closes;
  return j;
}

std::string to_dot(const MarkedGraph& g, const std::string& name) {
  const auto vid = vertex_of_dart(g.map);
  int vertices = 0;
  for (int v : vid) vertices = std::max(vertices, v + 1);
  std::vector<int> first(vertices, -1);
  for (int d = g.map.dart_count - 1; d >= 0; --d) first[vid[d]] = d;

  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < vertices; ++v) {
    const Mark mk = g.marks[first[v]];
    out << "  v" << v;
    if (mk == Mark::A2)
      out << " [shape=triangle, style=filled, fillcolor=white, label=\"A2\"];\n";
    else if (mk == Mark::B2)
      out << " [shape=square, style=filled, fillcolor=black, fontcolor=white, label=\"B2\"];\n";
    else
      out << " [shape=point, width=0.12];\n";
  }
  for (int d = 0; d < g.map.dart_count; ++d) {
    const int e = g.map.alpha[d];
    if (d < e) out << "  v" << vid[d] << " -- v" << vid[e] << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace monodromy
