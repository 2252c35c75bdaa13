#pragma once

// Table rows as printed, plus the normalization used to compare them with records.

#include <string>
#include <vector>

#include "monodromy/families.hpp"

namespace tables {

struct Row {
  std::string label;
  std::string gd;
  int degree;
  std::string rd;
  int ell;
};

inline const std::vector<Row>& k3_non_tree() {
  static const std::vector<Row> rows{
      {"k3-nt1", "2A6+2B2", 4, "[(2,2)_B,(2,2)_B,(2),(2)]", 0},
      {"k3-nt2", "2A6+2B2", 3, "[(2,1)_B,(2,1)_B,(2),(2)]", 0},
      {"k3-nt3", "2A6+A2+B2", 3, "[(3)_A,(2,1)_B,(2)]", 0},
      {"k3-nt4", "A6+A2", 6, "[(3,3)_A,(3,3)_A,(2),(2)]", 0},
      {"k3-nt5", "A6+A2", 5, "[(3,1,1)_A]", 0},
  };
  return rows;
}

inline const std::vector<Row>& k3_tree() {
  static const std::vector<Row> rows{
      {"j1", "A6+A2+2B2", 4, "[(1,1,1,1)_A,(2,2)_B,(2,2)_B,(2),(2)]", 0},
      {"j2", "A6+A2+2B2", 4, "[(3,1)_A,(2,2)_B,(2,2)_B]", 1},
      {"j3", "A6+A2+2B2", 4, "[(3,1)_A,(2,2)_B,(2,1,1)_B,(2)]", 0},
      {"j4", "A6+2A2+B2", 3, "[(3)_A,(1,1,1)_A,(2,1)_B]", 0},
      {"j5", "A6+A2+2B2", 3, "[(1,1,1)_A,(2,1)_B,(2,1)_B,(2),(2)]", 0},
      {"j6", "A6+A2+2B2", 3, "[(3)_A,(1,1,1)_B,(2,1)_B,(2)]", 0},
      {"j7", "A6+3B2", 8, "[(2,2,2,2)_B,(2,2,2,2)_B,(2,2,2,2)_B,(2),(2)]", 0},
      {"j8", "A6+3B2", 6, "[(2,2,2)_B,(2,2,2)_B,(2,2,1,1)_B,(2),(2)]", 0},
      {"j9", "A6+3B2", 6, "[(2,2,2)_B,(2,2,2)_B,(2,2,2)_B,(2)]", 1},
      {"j10", "A6+3B2", 5, "[(2,2,1)_B,(2,2,1)_B,(2,2,1)_B,(2),(2)]", 0},
      {"j11", "A6+3B2", 4, "[(2,1,1)_B,(2,1,1)_B,(2,2)_B,(2),(2)]", 0},
      {"j12", "A6+3B2", 4, "[(2,1,1)_B,(2,2)_B,(2,2)_B,(2)]", 1},
      {"j13", "A6+3B2", 3, "[(1,1,1)_B,(2,1)_B,(2,1)_B]", 0},
      {"j14", "A6+3B2", 3, "[(2,1)_B,(2,1)_B,(2,1)_B,(2)]", 1},
  };
  return rows;
}

inline const std::vector<Row>& rational() {
  static const std::vector<Row> rows{
      {"j15", "2A2", 6, "[(3,3)_A,(3,3)_A,(2),(2)]", 0},
      {"j16", "2A2", 4, "[(3,1)_A,(3,1)_A,(2),(2)]", 0},
      {"j17", "2A2", 3, "[(3)_A,(1,1,1)_A,(2),(2)]", 0},
      {"j18", "A6+B2", 4, "[(2,2)_B,(2),(2),(2),(2)]", 0},
      {"j19", "A6+B2", 3, "[(2,1)_B,(2),(2)]", 0},
      {"j20", "A6+A2", 3, "[(3)_A,(2),(2)]", 0},
  };
  return rows;
}

/// Drops A/B vectors beyond the ends of the graph datum and fills unspecified simple
/// points until Riemann-Hurwitz closes at genus 0.
inline monodromy::RamDatum normalized_rd(const Row& row) {
  using namespace monodromy;
  const GraphDatum gd = parse_gd(row.gd);
  RamDatum rd = parse_rd(row.degree, row.rd);
  if (static_cast<int>(rd.over_a.size()) > gd.a2) rd.over_a.resize(static_cast<size_t>(gd.a2));
  if (static_cast<int>(rd.over_b.size()) > gd.b2) rd.over_b.resize(static_cast<size_t>(gd.b2));
  while (rd.total_branching() < 2 * rd.degree - 2) rd.unspecified.push_back({2});
  return rd.canonical();
}

/// "GD | d | RD | ell" key for set comparisons.
inline std::string key(const std::string& gd, int degree, const monodromy::RamDatum& rd, int ell) {
  return gd + " | " + std::to_string(degree) + " | " + monodromy::format_rd(rd.canonical()) + " | ell=" +
         std::to_string(ell);
}

inline std::string key(const Row& row) {
  return key(monodromy::format_gd(monodromy::parse_gd(row.gd)), row.degree, normalized_rd(row), row.ell);
}

inline std::string key(const monodromy::FamilyRecord& rec) {
  return key(monodromy::format_gd(rec.gd), rec.rd.degree, rec.rd, rec.ell);
}

}  // namespace tables
