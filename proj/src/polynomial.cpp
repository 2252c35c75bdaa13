#include "monodromy/polynomial.hpp"

#include <algorithm>
#include <cstdlib>

#include "monodromy/error.hpp"

namespace monodromy {

FieldElem::FieldElem(mpq_class a, mpq_class b, long root) : a_(std::move(a)), b_(std::move(b)), root_(root) {
  if (root_ == 1 || (root_ == 0 && sgn(b_) != 0))
    throw Error(ErrorCode::FieldMismatch, "square root adjunction needs a non-square radicand");
  for (long k = 2; k * k <= std::abs(root_); ++k)
    if (root_ % (k * k) == 0) throw Error(ErrorCode::FieldMismatch, "radicand must be squarefree");
  normalize();
}

FieldElem FieldElem::sqrt_of(long root) { return FieldElem(0, 1, root); }

void FieldElem::normalize() {
  a_.canonicalize();
  b_.canonicalize();
}

long FieldElem::join(const FieldElem& x, const FieldElem& y) {
  if (x.root_ != 0 && y.root_ != 0 && x.root_ != y.root_) {
    if (sgn(x.b_) != 0 && sgn(y.b_) != 0)
      throw Error(ErrorCode::FieldMismatch, "elements of different quadratic fields");
    return sgn(x.b_) != 0 ? x.root_ : y.root_;
  }
  return x.root_ != 0 ? x.root_ : y.root_;
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  root_ = join(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  root_ = join(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  long r = join(*this, o);
  mpq_class na = a_ * o.a_ + b_ * o.b_ * r;
  mpq_class nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  root_ = r;
  return *this;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  mpq_class norm = a_ * a_ - b_ * b_ * root_;
  FieldElem r;
  r.a_ = a_ / norm;
  r.b_ = -b_ / norm;
  r.root_ = root_;
  return r;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  join(*this, o);
  return *this *= o.inverse();
}

std::string FieldElem::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string s;
  if (sgn(a_) != 0) s = a_.get_str() + (sgn(b_) > 0 ? "+" : "");
  s += b_.get_str() + "*sqrt(" + std::to_string(root_) + ")";
  return s;
}

Poly::Poly(std::vector<FieldElem> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldElem& c) { return Poly(std::vector<FieldElem>{c}); }
Poly Poly::x() { return Poly({FieldElem(0), FieldElem(1)}); }
Poly Poly::linear(const FieldElem& c) { return Poly({c, FieldElem(1)}); }

FieldElem Poly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(i)] : FieldElem(0);
}

FieldElem Poly::lead() const {
  if (c_.empty()) return FieldElem(0);
  return c_.back();
}

FieldElem Poly::eval(const FieldElem& x) const {
  FieldElem r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator+(const Poly& p, const Poly& q) {
  std::vector<FieldElem> r(std::max(p.c_.size(), q.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < p.c_.size()) r[i] += p.c_[i];
    if (i < q.c_.size()) r[i] += q.c_[i];
  }
  return Poly(std::move(r));
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  std::vector<FieldElem> r(p.c_.size() + q.c_.size() - 1);
  for (size_t i = 0; i < p.c_.size(); ++i)
    for (size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
  return Poly(std::move(r));
}

Poly operator*(const FieldElem& c, const Poly& p) {
  std::vector<FieldElem> r = p.c_;
  for (auto& x : r) x *= c;
  return Poly(std::move(r));
}

Poly Poly::pow(int e) const {
  Poly r = constant(1), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Poly Poly::derivative() const {
  std::vector<FieldElem> r;
  for (size_t i = 1; i < c_.size(); ++i) r.push_back(FieldElem(static_cast<long>(i)) * c_[i]);
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return lead().inverse() * *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<FieldElem> rem = c_;
  const int dd = d.degree();
  std::vector<FieldElem> quo(rem.size() >= d.c_.size() ? rem.size() - d.c_.size() + 1 : 0);
  const FieldElem inv = d.lead().inverse();
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    FieldElem q = rem[static_cast<size_t>(i)] * inv;
    if (q.is_zero()) continue;
    quo[static_cast<size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(i - dd + j)] -= q * d.c_[static_cast<size_t>(j)];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::homogeneous_compose(const Poly& num, const Poly& den, int as_degree) const {
  Poly r;
  for (int i = 0; i < static_cast<int>(c_.size()); ++i)
    r = r + c_[static_cast<size_t>(i)] * (num.pow(i) * den.pow(as_degree - i));
  return r;
}

std::vector<std::string> Poly::to_strings() const {
  std::vector<std::string> out;
  for (const auto& c : c_) out.push_back(c.to_string());
  return out;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const auto& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    if (i >= 1) s += "*x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

Poly gcd(const Poly& p, const Poly& q) {
  Poly a = p, b = q;
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() <= 0) return out;
  Poly dp = p.derivative();
  Poly a = gcd(p, dp);
  Poly b = p.divmod(a).first;
  Poly c = dp.divmod(a).first;
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = b.divmod(g).first;
    c = d.divmod(g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<int> root_multiplicities(const Poly& p) {
  std::vector<int> m;
  for (const auto& [f, i] : squarefree_decomposition(p))
    for (int k = 0; k < f.degree(); ++k) m.push_back(i);
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

FieldElem resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return FieldElem(0);
  const int m = a.degree(), n = b.degree();
  if (n == 0) {
    FieldElem r(1);
    for (int i = 0; i < m; ++i) r *= b.lead();
    return r;
  }
  if (m == 0) {
    FieldElem r(1);
    for (int i = 0; i < n; ++i) r *= a.lead();
    return r;
  }
  Poly rem = a.divmod(b).second;
  if (rem.is_zero()) return FieldElem(0);
  FieldElem scale(((m * n) % 2 == 0) ? 1 : -1);
  for (int i = 0; i < m - rem.degree(); ++i) scale *= b.lead();
  return scale * resultant(b, rem);
}

Poly interpolate(const std::vector<FieldElem>& xs, const std::vector<FieldElem>& ys) {
  Poly r;
  for (size_t i = 0; i < xs.size(); ++i) {
    Poly basis = Poly::constant(1);
    FieldElem denom(1);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * Poly::linear(-xs[j]);
      denom *= xs[i] - xs[j];
    }
    r = r + (ys[i] / denom) * basis;
  }
  return r;
}

}  // namespace monodromy
