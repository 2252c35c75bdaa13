#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monodromy/permutation.hpp"
#include "monodromy/polynomial.hpp"

namespace monodromy {

/// f = numerator / denominator with coprime polynomials.
struct MapWitness {
  Poly numerator;
  Poly denominator;
  long root = 0;  // quadratic field of the coefficients, 0 for Q

  int degree() const { return std::max(numerator.degree(), denominator.degree()); }
};

/// Throws NotCoprime or DegenerateParameters (degree < 1).
MapWitness make_witness(Poly numerator, Poly denominator, long root = 0);

enum class Target { Zero, One, Infinity };

Partition ram_profile(const MapWitness& w, Target t);

/// Branching away from 0, 1, infinity.
struct UnspecifiedBranching {
  int total = 0;             // sum of (e - 1) over all other points
  int critical_values = 0;   // number of distinct critical values, when all are simple
  bool all_simple = false;   // each such value has a single simple critical point
};

UnspecifiedBranching unspecified_branching(const MapWitness& w);

struct WitnessReport {
  Partition over_zero, over_one, over_infinity;
  UnspecifiedBranching unspecified;
  bool rh_closes = false;  // total branching equals 2 deg - 2
};

WitnessReport verify_witness(const MapWitness& w);

/// x -> (a x + b) / (c x + d); ad - bc must be nonzero.
MapWitness precompose_mobius(const MapWitness& w, const FieldElem& a, const FieldElem& b,
                             const FieldElem& c, const FieldElem& d);

MapWitness construct_sq_even(const Poly& g11, const Poly& g11p, const Poly& g12, const Poly& g12p);
MapWitness construct_sq_cube(const Poly& g11, const Poly& g11p, const Poly& g12, const Poly& g12p);

/// Over Q(sqrt(-3)). The conic -zeta g1^2 - zeta^2 g2^2 = g3^2 is parametrized by
/// the line through (1, 1, 1) with direction (p, q). Throws NoRationalPoint when the
/// parametrization collapses.
MapWitness construct_cube_sq(const Poly& p, const Poly& q);

/// Degree 5 with three (2,2,1) fibers; b2 = s^2, branch `sign`, free parameter t = X1.
MapWitness construct_deg5_thG(const mpq_class& s, int sign, const mpq_class& t);

MapWitness construct_deg4_a(const mpq_class& c1, const mpq_class& c2);

/// Over Q(sqrt(-2)). The (2,2) fiber sits at +-1 and f - 1 is linear, which forces
/// c1 + c2 + 2 c3 = 0 and c1^2 + 2 c1 c3 + 3 c3^2 = 2. With c3 = (m + 1/m)/2 and
/// k = (m - 1/m)/2 this is c1 = -c3 + sign k sqrt(-2).
MapWitness construct_deg4_b(const mpq_class& m, int sign = 1);

/// Degree 3 with (2,1) over 0, 1 and infinity. The critical points over 0, 1, infinity
/// are normalized to 0, 1, infinity; `r` places the simple zero at 2 + r.
MapWitness construct_deg3_loop(const mpq_class& r);

/// Builds a witness for `name` from a seed or explicit parameters; throws on bad input.
struct WitnessCase {
  std::string name;
  MapWitness witness;
  std::map<std::string, std::string> params;
};

WitnessCase witness_from_seed(const std::string& name, std::uint64_t seed);
WitnessCase witness_from_params(const std::string& name, const std::map<std::string, std::string>& params);

/// Checks the construction-specific pattern (parity / divisibility / exact profiles).
bool check_case_pattern(const std::string& name, const WitnessReport& report);

std::vector<std::string> witness_case_names();

}  // namespace monodromy
