#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace monodromy {

/// a + b*sqrt(root) with rational a, b. root == 0 marks a plain rational; a nonzero root
/// must be a squarefree integer other than 1.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(long v) : a_(v) {}  // NOLINT: implicit by design
  FieldElem(mpq_class a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  FieldElem(mpq_class a, mpq_class b, long root);

  static FieldElem sqrt_of(long root);

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  long root() const { return root_; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  friend FieldElem operator+(FieldElem x, const FieldElem& y) { return x += y; }
  friend FieldElem operator-(FieldElem x, const FieldElem& y) { return x -= y; }
  friend FieldElem operator*(FieldElem x, const FieldElem& y) { return x *= y; }
  friend FieldElem operator/(FieldElem x, const FieldElem& y) { return x /= y; }
  friend bool operator==(const FieldElem& x, const FieldElem& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (sgn(x.b_) == 0 || x.root_ == y.root_);
  }

  FieldElem inverse() const;
  std::string to_string() const;

 private:
  static long join(const FieldElem& x, const FieldElem& y);
  void normalize();

  mpq_class a_ = 0;
  mpq_class b_ = 0;
  long root_ = 0;
};

/// Univariate polynomial, coefficients ascending, no trailing zeros (zero polynomial is empty).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<FieldElem> coeffs);
  Poly(std::initializer_list<FieldElem> coeffs) : Poly(std::vector<FieldElem>(coeffs)) {}

  static Poly constant(const FieldElem& c);
  static Poly x();
  /// x + c
  static Poly linear(const FieldElem& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<FieldElem>& coeffs() const { return c_; }
  FieldElem coeff(int i) const;
  FieldElem lead() const;
  FieldElem eval(const FieldElem& x) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(const FieldElem& c, const Poly& p);
  friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }

  Poly pow(int e) const;
  Poly derivative() const;
  Poly monic() const;
  /// Quotient and remainder; throws DivisionByZero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  /// Substitute x -> num/den and clear denominators with den^n, n = `as_degree`.
  Poly homogeneous_compose(const Poly& num, const Poly& den, int as_degree) const;

  std::vector<std::string> to_strings() const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<FieldElem> c_;
};

/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& p, const Poly& q);

/// Yun decomposition: p = lead * prod factor_i^i; pairs (squarefree factor, i), i ascending.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

/// Multiplicities of the roots of p over the algebraic closure, descending.
std::vector<int> root_multiplicities(const Poly& p);

FieldElem resultant(const Poly& a, const Poly& b);

/// Polynomial through the points (xs[i], ys[i]).
Poly interpolate(const std::vector<FieldElem>& xs, const std::vector<FieldElem>& ys);

}  // namespace monodromy
