#include "monodromy/witness.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "monodromy/error.hpp"

namespace monodromy {

namespace {

[[noreturn]] void degenerate(const std::string& what) {
  throw Error(ErrorCode::DegenerateParameters, "degenerate parameters: " + what);
}

Partition with_infinity(std::vector<int> m, int deficit) {
  if (deficit > 0) m.push_back(deficit);
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

int branching_of(const Partition& p) {
  int b = 0;
  for (int e : p) b += e - 1;
  return b;
}

/// Strip every factor of w that divides some power of m.
Poly strip_common(Poly w, const Poly& m) {
  for (;;) {
    Poly g = gcd(w, m);
    if (g.degree() <= 0) return w;
    w = w.divmod(g).first;
  }
}

bool squarefree(const Poly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

Poly half(const Poly& p) { return FieldElem(mpq_class(1, 2)) * p; }

}  // namespace

MapWitness make_witness(Poly numerator, Poly denominator, long root) {
  if (numerator.is_zero() || denominator.is_zero()) degenerate("zero polynomial");
  if (gcd(numerator, denominator).degree() > 0)
    throw Error(ErrorCode::NotCoprime, "numerator and denominator share a root");
  MapWitness w{std::move(numerator), std::move(denominator), root};
  if (w.degree() < 1) degenerate("constant map");
  return w;
}

Partition ram_profile(const MapWitness& w, Target t) {
  const int n = w.degree();
  Poly p;
  switch (t) {
    case Target::Zero: p = w.numerator; break;
    case Target::Infinity: p = w.denominator; break;
    case Target::One: p = w.numerator - w.denominator; break;
  }
  return with_infinity(root_multiplicities(p), n - p.degree());
}

UnspecifiedBranching unspecified_branching(const MapWitness& w) {
  const Poly& N = w.numerator;
  const Poly& D = w.denominator;
  const int n = w.degree();
  UnspecifiedBranching out;

  Poly W = N.derivative() * D - N * D.derivative();
  Poly rem = strip_common(W, N * D * (N - D));

  // The point at infinity is unspecified when f(inf) is finite and not 0 or 1.
  int at_inf = 0;
  FieldElem f_inf;
  if (N.degree() == D.degree() && !(N.lead() == D.lead())) {
    at_inf = (2 * n - 2) - W.degree();
    f_inf = N.lead() / D.lead();
  }
  const int m = std::max(rem.degree(), 0);
  out.total = m + at_inf;

  // R(y) = prod over critical points p of (N(p) - y D(p)).
  Poly R = Poly::constant(1);
  if (m > 0) {
    std::vector<FieldElem> ys, vals;
    for (int k = 0; static_cast<int>(ys.size()) <= m; ++k) {
      FieldElem y(k + 2);
      Poly G = N - y * D;
      if (G.is_zero()) continue;
      FieldElem scale(1);
      for (int i = 0; i < G.degree(); ++i) scale *= rem.lead();
      ys.push_back(y);
      vals.push_back(resultant(rem, G) / scale);
    }
    R = interpolate(ys, vals);
  }

  bool simple = squarefree(rem) && squarefree(R);
  if (at_inf > 0) simple = simple && at_inf == 1 && !R.eval(f_inf).is_zero();
  out.all_simple = simple;
  if (simple) {
    out.critical_values = m + (at_inf > 0 ? 1 : 0);
  } else {
    int distinct = 0;
    if (R.degree() > 0)
      for (const auto& [f, i] : squarefree_decomposition(R)) distinct += f.degree();
    if (at_inf > 0 && (m == 0 || !R.eval(f_inf).is_zero())) ++distinct;
    out.critical_values = distinct;
  }
  return out;
}

WitnessReport verify_witness(const MapWitness& w) {
  WitnessReport r;
  r.over_zero = ram_profile(w, Target::Zero);
  r.over_one = ram_profile(w, Target::One);
  r.over_infinity = ram_profile(w, Target::Infinity);
  r.unspecified = unspecified_branching(w);
  const int total = branching_of(r.over_zero) + branching_of(r.over_one) +
                    branching_of(r.over_infinity) + r.unspecified.total;
  r.rh_closes = total == 2 * w.degree() - 2;
  return r;
}

MapWitness precompose_mobius(const MapWitness& w, const FieldElem& a, const FieldElem& b,
                             const FieldElem& c, const FieldElem& d) {
  if ((a * d - b * c).is_zero()) degenerate("singular Moebius transformation");
  const int n = w.degree();
  Poly num = Poly({b, a});
  Poly den = Poly({d, c});
  return make_witness(w.numerator.homogeneous_compose(num, den, n),
                      w.denominator.homogeneous_compose(num, den, n), w.root);
}

namespace {

MapWitness split_square(const Poly& g11, const Poly& g11p, const Poly& g12, const Poly& g12p, int power) {
  Poly a = g11.pow(power) * g11p;
  Poly b = g12.pow(power) * g12p;
  Poly f0 = half(a + b);
  Poly finf = half(b - a);
  if (f0.is_zero() || finf.is_zero()) degenerate("vanishing half");
  if (!(f0 * f0 - finf * finf == a * b)) throw Error(ErrorCode::DegenerateParameters, "identity failed");
  return make_witness(f0 * f0, finf * finf);
}

}  // namespace

MapWitness construct_sq_even(const Poly& g11, const Poly& g11p, const Poly& g12, const Poly& g12p) {
  return split_square(g11, g11p, g12, g12p, 2);
}

MapWitness construct_sq_cube(const Poly& g11, const Poly& g11p, const Poly& g12, const Poly& g12p) {
  return split_square(g11, g11p, g12, g12p, 3);
}

MapWitness construct_cube_sq(const Poly& p, const Poly& q) {
  const FieldElem zeta(mpq_class(-1, 2), mpq_class(1, 2), -3);
  const FieldElem zeta2 = zeta * zeta;
  const FieldElem A = -zeta, B = -zeta2;
  Poly S = A * (p * p) + B * (q * q);
  Poly L = A * p + B * q;
  if (S.is_zero()) throw Error(ErrorCode::NoRationalPoint, "conic parametrization collapses");
  Poly g1 = S - FieldElem(2) * (L * p);
  Poly g2 = S - FieldElem(2) * (L * q);
  const Poly& g3 = S;
  if (!(A * (g1 * g1) + B * (g2 * g2) == g3 * g3))
    throw Error(ErrorCode::NoRationalPoint, "conic point check failed");
  Poly finf = (zeta - FieldElem(1)).inverse() * (g1 * g1 - g2 * g2);
  if (finf.is_zero()) throw Error(ErrorCode::NoRationalPoint, "conic parametrization collapses");
  Poly f0 = g1 * g1 + finf;
  Poly lhs = f0.pow(3) - finf.pow(3);
  Poly rhs = (g1 * g2 * g3).pow(2);
  if (!(lhs == rhs)) throw Error(ErrorCode::NoRationalPoint, "cube identity failed");
  return make_witness(f0.pow(3), finf.pow(3), -3);
}

MapWitness construct_deg5_thG(const mpq_class& s, int sign, const mpq_class& t) {
  if (sign != 1 && sign != -1) degenerate("sign must be +1 or -1");
  const mpq_class s2 = s * s;
  if (sgn(s) == 0 || s2 == 1) degenerate("s in {0, 1, -1}");
  const mpq_class X1 = t;
  const mpq_class X2 = X1 + (1 - s2) / 2;
  const mpq_class Y2 = (2 * s * (s - sign) * X1 - s2 * (s2 - 1)) / (s2 - 1);
  const mpq_class Y1 = sign * s * Y2;
  Poly q1({FieldElem(Y1), FieldElem(X1), FieldElem(1)});
  Poly q2({FieldElem(Y2), FieldElem(X2), FieldElem(1)});
  Poly F1 = q1 * q1 * Poly::linear(1);
  Poly F2 = q2 * q2 * Poly::linear(s2);
  Poly diff = F1 - F2;
  if (!diff.coeff(4).is_zero() || !diff.coeff(1).is_zero() || !diff.coeff(0).is_zero())
    degenerate("identity F1 - F2 = c1 x^2 (x + c2) does not close");
  if (diff.coeff(3).is_zero() || diff.coeff(2).is_zero()) degenerate("c1 or c2 vanishes");
  if (!squarefree(q1) || !squarefree(q2)) degenerate("quadratic factor is a square");
  if (q1.eval(FieldElem(-1)).is_zero() || q2.eval(FieldElem(-s2)).is_zero())
    degenerate("linear factor meets the quadratic");
  try {
    return make_witness(F1, F2);
  } catch (const Error&) {
    degenerate("F1 and F2 share a root");
  }
}

MapWitness construct_deg4_a(const mpq_class& c1, const mpq_class& c2) {
  const mpq_class c3 = -(c1 + c2) / 2;
  if (sgn(c3) == 0) degenerate("c3 = 0 makes f even, the two free critical values coincide");
  const std::vector<mpq_class> cs{c1, c2, c3};
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] == 1 || cs[i] == -1) degenerate("pole collides with a (2,2) point");
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (cs[i] == cs[j]) degenerate("poles collide");
  }
  Poly N = (Poly::x().pow(2) - Poly::constant(1)).pow(2);
  Poly D = Poly::linear(c1) * Poly::linear(c2) * Poly::linear(c3).pow(2);
  Poly g = N - D;
  if (g.degree() != 2 || !squarefree(g)) degenerate("fiber over 1 collapses");
  return make_witness(N, D);
}

MapWitness construct_deg4_b(const mpq_class& m, int sign) {
  if (sign != 1 && sign != -1) degenerate("sign must be +1 or -1");
  if (sgn(m) == 0 || m * m == 1) degenerate("m in {0, 1, -1}");
  const mpq_class c3 = (m + 1 / m) / 2;
  const mpq_class k = (m - 1 / m) / 2;
  const FieldElem c1(-c3, sign * k, -2);
  const FieldElem c2 = -c1 - FieldElem(2 * c3);
  Poly N = (Poly::x().pow(2) - Poly::constant(1)).pow(2);
  Poly D = Poly::linear(c1) * Poly::linear(c2) * Poly::linear(c3).pow(2);
  if ((N - D).degree() != 1) degenerate("f - 1 is not linear");
  return make_witness(N, D, -2);
}

MapWitness construct_deg3_loop(const mpq_class& r) {
  const mpq_class a = 2 + r;
  if (sgn(a) == 0 || sgn(r) == 0 || 1 + 2 * r == 0) degenerate("critical points collide");
  Poly N = Poly::x().pow(2) * Poly::linear(mpq_class(-a));
  Poly D({FieldElem(r), FieldElem(-(1 + 2 * r))});
  Poly g = N - D;
  // g = (x - 1)^2 (x - b); b must stay away from 1.
  auto [quot, remainder] = g.divmod(Poly::linear(-1).pow(2));
  if (!remainder.is_zero() || quot.eval(FieldElem(1)).is_zero()) degenerate("fiber over 1 collapses");
  try {
    return make_witness(N, D);
  } catch (const Error&) {
    degenerate("numerator and denominator share a root");
  }
}

namespace {

using Rng = std::mt19937_64;

mpq_class random_rational(Rng& rng, int span = 9, int max_den = 4) {
  std::uniform_int_distribution<int> num(-span, span), den(1, max_den);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

mpq_class random_nonzero(Rng& rng) {
  for (;;) {
    mpq_class q = random_rational(rng);
    if (sgn(q) != 0) return q;
  }
}

Poly random_poly(Rng& rng, int min_deg, int max_deg) {
  std::uniform_int_distribution<int> deg(min_deg, max_deg);
  const int d = deg(rng);
  std::vector<FieldElem> c;
  for (int i = 0; i < d; ++i) c.emplace_back(random_rational(rng));
  c.emplace_back(random_nonzero(rng));
  return Poly(std::move(c));
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

std::string poly_param(const Poly& p) {
  std::string s;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) s += ",";
    s += p.coeffs()[i].to_string();
  }
  return s;
}

mpq_class parse_rational(const std::string& text) {
  try {
    mpq_class q(text);
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "not a rational number: " + text);
  }
}

Poly parse_poly_param(const std::string& text) {
  std::vector<FieldElem> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) c.emplace_back(parse_rational(item));
  if (c.empty()) throw Error(ErrorCode::ParseError, "empty coefficient list");
  return Poly(std::move(c));
}

int parse_sign(const std::string& text) {
  if (text == "1" || text == "+1" || text == "+") return 1;
  if (text == "-1" || text == "-") return -1;
  throw Error(ErrorCode::ParseError, "sign must be +1 or -1: " + text);
}

const std::string& need(const std::map<std::string, std::string>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw Error(ErrorCode::ParseError, "missing parameter: " + key);
  return it->second;
}

void reject_unknown(const std::map<std::string, std::string>& params, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : params) {
    bool ok = false;
    for (const char* key : keys) ok = ok || k == key;
    if (!ok) throw Error(ErrorCode::ParseError, "unknown parameter: " + k);
  }
}

std::string get_or(const std::map<std::string, std::string>& params, const std::string& key, const std::string& def) {
  auto it = params.find(key);
  return it == params.end() ? def : it->second;
}

}  // namespace

std::vector<std::string> witness_case_names() {
  return {"sq-even", "sq-cube", "cube-sq", "deg5-thG", "deg4-a", "deg4-b", "deg3-loop"};
}

WitnessCase witness_from_params(const std::string& name, const std::map<std::string, std::string>& params) {
  WitnessCase wc{name, {}, params};
  if (name == "sq-even" || name == "sq-cube") {
    reject_unknown(params, {"g11", "g11p", "g12", "g12p"});
    Poly g11 = parse_poly_param(need(params, "g11")), g11p = parse_poly_param(need(params, "g11p"));
    Poly g12 = parse_poly_param(need(params, "g12")), g12p = parse_poly_param(need(params, "g12p"));
    wc.witness = name == "sq-even" ? construct_sq_even(g11, g11p, g12, g12p) : construct_sq_cube(g11, g11p, g12, g12p);
  } else if (name == "cube-sq") {
    reject_unknown(params, {"p", "q"});
    wc.witness = construct_cube_sq(parse_poly_param(need(params, "p")), parse_poly_param(need(params, "q")));
  } else if (name == "deg5-thG") {
    reject_unknown(params, {"s", "sign", "t"});
    wc.params["sign"] = get_or(params, "sign", "1");
    wc.params["t"] = get_or(params, "t", "0");
    wc.witness = construct_deg5_thG(parse_rational(need(params, "s")), parse_sign(wc.params["sign"]),
                                     parse_rational(wc.params["t"]));
  } else if (name == "deg4-a") {
    reject_unknown(params, {"c1", "c2"});
    wc.witness = construct_deg4_a(parse_rational(need(params, "c1")), parse_rational(need(params, "c2")));
  } else if (name == "deg4-b") {
    reject_unknown(params, {"m", "sign"});
    wc.params["sign"] = get_or(params, "sign", "1");
    wc.witness = construct_deg4_b(parse_rational(need(params, "m")), parse_sign(wc.params["sign"]));
  } else if (name == "deg3-loop") {
    reject_unknown(params, {"r"});
    wc.witness = construct_deg3_loop(parse_rational(need(params, "r")));
  } else {
    throw Error(ErrorCode::ParseError, "unknown witness case: " + name);
  }
  return wc;
}

WitnessCase witness_from_seed(const std::string& name, std::uint64_t seed) {
  const auto names = witness_case_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw Error(ErrorCode::ParseError, "unknown witness case: " + name);
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::map<std::string, std::string> params;
    if (name == "sq-even" || name == "sq-cube") {
      params["g11"] = poly_param(random_poly(rng, 1, 2));
      params["g11p"] = poly_param(random_poly(rng, 0, 1));
      params["g12"] = poly_param(random_poly(rng, 1, 2));
      params["g12p"] = poly_param(random_poly(rng, 0, 1));
    } else if (name == "cube-sq") {
      params["p"] = poly_param(random_poly(rng, 1, 1));
      params["q"] = poly_param(random_poly(rng, 0, 1));
    } else if (name == "deg5-thG") {
      params["s"] = rational_string(random_nonzero(rng));
      params["sign"] = std::uniform_int_distribution<int>(0, 1)(rng) ? "1" : "-1";
      params["t"] = rational_string(random_rational(rng));
    } else if (name == "deg4-a") {
      params["c1"] = rational_string(random_rational(rng));
      params["c2"] = rational_string(random_rational(rng));
    } else if (name == "deg4-b") {
      params["m"] = rational_string(random_nonzero(rng));
      params["sign"] = std::uniform_int_distribution<int>(0, 1)(rng) ? "1" : "-1";
    } else {
      params["r"] = rational_string(random_rational(rng));
    }
    try {
      return witness_from_params(name, params);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateParameters && e.code() != ErrorCode::NotCoprime &&
          e.code() != ErrorCode::NoRationalPoint)
        throw;
    }
  }
  degenerate("no admissible parameters found for seed");
}

bool check_case_pattern(const std::string& name, const WitnessReport& r) {
  if (!r.rh_closes) return false;
  auto all = [](const Partition& p, int k) {
    return std::all_of(p.begin(), p.end(), [k](int e) { return e % k == 0; });
  };
  auto exact = [&](const Partition& z, const Partition& o, const Partition& i, int unspecified) {
    return r.over_zero == z && r.over_one == o && r.over_infinity == i && r.unspecified.all_simple &&
           r.unspecified.total == unspecified && r.unspecified.critical_values == unspecified;
  };
  if (name == "sq-even" || name == "sq-cube") return all(r.over_zero, 2) && all(r.over_infinity, 2);
  if (name == "cube-sq") return all(r.over_zero, 3) && all(r.over_infinity, 3) && all(r.over_one, 2);
  if (name == "deg5-thG") return exact({2, 2, 1}, {2, 2, 1}, {2, 2, 1}, 2);
  if (name == "deg4-a") return exact({2, 2}, {2, 1, 1}, {2, 1, 1}, 2);
  if (name == "deg4-b") return exact({2, 2}, {3, 1}, {2, 1, 1}, 1);
  if (name == "deg3-loop") return exact({2, 1}, {2, 1}, {2, 1}, 1);
  return false;
}

}  // namespace monodromy
