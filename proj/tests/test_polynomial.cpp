#include "doctest.h"

#include <random>
#include <set>

#include "monodromy/error.hpp"
#include "monodromy/polynomial.hpp"

using namespace monodromy;

namespace {

mpq_class small_rational(std::mt19937_64& rng) {
  mpq_class q(static_cast<long>(rng() % 15) - 7, static_cast<long>(rng() % 4) + 1);
  q.canonicalize();
  return q;
}

Poly random_poly(std::mt19937_64& rng, int degree) {
  std::vector<FieldElem> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(small_rational(rng));
  if (c.back().is_zero()) c.back() = FieldElem(1);
  return Poly(c);
}

}  // namespace

TEST_CASE("quadratic field arithmetic") {
  FieldElem r = FieldElem::sqrt_of(-2);
  CHECK(r * r == FieldElem(-2));
  FieldElem z(mpq_class(1, 2), mpq_class(3), -3);
  CHECK(z * z.inverse() == FieldElem(1));
  CHECK((z - z).is_zero());
  CHECK(FieldElem(mpq_class(2), mpq_class(0), -3).is_rational());
  CHECK_THROWS_AS(FieldElem::sqrt_of(-2) + FieldElem::sqrt_of(-3), Error);
  CHECK_THROWS_AS(FieldElem::sqrt_of(4), Error);
  CHECK_THROWS_AS(FieldElem(0).inverse(), Error);
  CHECK(FieldElem(mpq_class(1, 3)).to_string() == "1/3");
}

TEST_CASE("polynomial basics") {
  Poly p{1, 2, 1};
  CHECK(p == Poly::linear(1).pow(2));
  CHECK(p.degree() == 2);
  CHECK(p.derivative() == Poly{2, 2});
  CHECK(p.eval(FieldElem(2)) == FieldElem(9));
  CHECK((p - p).is_zero());
  CHECK(Poly{0, 0}.is_zero());
  CHECK(Poly{2, 4}.monic() == Poly{mpq_class(1, 2), 1});
  CHECK_THROWS_AS(p.divmod(Poly{}), Error);
}

TEST_CASE("division, gcd and resultants over random polynomials") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Poly a = random_poly(rng, 1 + static_cast<int>(rng() % 4));
    Poly b = random_poly(rng, 1 + static_cast<int>(rng() % 3));
    Poly c = random_poly(rng, static_cast<int>(rng() % 3));
    auto [q, r] = (a * c).divmod(b);
    CHECK(q * b + r == a * c);
    CHECK(r.degree() < b.degree());
    Poly g = gcd(a * c, b * c);
    CHECK((a * c).divmod(g).second.is_zero());
    CHECK((b * c).divmod(g).second.is_zero());
    CHECK(g.degree() >= c.degree());
    CHECK(resultant(a, b).is_zero() == (gcd(a, b).degree() > 0));
  }
}

TEST_CASE("resultant of linear factors") {
  Poly a = Poly::linear(-1) * Poly::linear(-2);
  Poly b = Poly::linear(-3);
  CHECK(resultant(a, b) == FieldElem(2));
  CHECK(resultant(a, Poly::linear(-2)).is_zero());
}

TEST_CASE("squarefree decomposition and multiplicities") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> mult;
    Poly p = Poly::constant(FieldElem(mpq_class(static_cast<long>(rng() % 5) + 1, 3)));
    std::set<long> used;
    const int roots = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < roots; ++i) {
      long r = static_cast<long>(rng() % 21) - 10;
      if (!used.insert(r).second) continue;
      int m = 1 + static_cast<int>(rng() % 4);
      mult.push_back(m);
      p = p * Poly::linear(FieldElem(r)).pow(m);
    }
    std::sort(mult.rbegin(), mult.rend());
    CHECK(root_multiplicities(p) == mult);
    Poly back = Poly::constant(p.lead());
    for (const auto& [f, i] : squarefree_decomposition(p)) {
      CHECK(gcd(f, f.derivative()).degree() == 0);
      back = back * f.pow(i);
    }
    CHECK(back == p);
  }
  // irreducible quadratic factor counts two simple roots
  Poly q = Poly{1, 0, 1} * Poly::linear(3).pow(2);
  CHECK(root_multiplicities(q) == std::vector<int>{2, 1, 1});
}

TEST_CASE("arithmetic over a quadratic field") {
  FieldElem r = FieldElem::sqrt_of(-3);
  Poly p = Poly::linear(r) * Poly::linear(-r);
  CHECK(p == Poly{3, 0, 1});
  Poly s = Poly::linear(r).pow(2) * Poly::linear(1);
  CHECK(root_multiplicities(s) == std::vector<int>{2, 1});
  CHECK(gcd(s, Poly::linear(r)) == Poly::linear(r));
}

TEST_CASE("interpolation and homogeneous composition") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    Poly p = random_poly(rng, 1 + static_cast<int>(rng() % 5));
    std::vector<FieldElem> xs, ys;
    for (int i = 0; i <= p.degree(); ++i) {
      xs.emplace_back(i + 1);
      ys.push_back(p.eval(FieldElem(i + 1)));
    }
    CHECK(interpolate(xs, ys) == p);
    // x -> (2x + 1)/(x - 3), evaluated at x = 5 against direct substitution
    Poly h = p.homogeneous_compose(Poly{1, 2}, Poly{-3, 1}, p.degree());
    FieldElem y = FieldElem(11) / FieldElem(2);
    FieldElem scale(1);
    for (int i = 0; i < p.degree(); ++i) scale *= FieldElem(2);
    CHECK(h.eval(FieldElem(5)) == p.eval(y) * scale);
  }
}
