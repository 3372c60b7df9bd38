#include "urs/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace urs {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(GaussRat a) {
  Poly p;
  if (!a.is_zero()) p.c_.push_back(std::move(a));
  return p;
}

Poly Poly::monomial(int deg, GaussRat lead) {
  if (deg < 0) throw std::invalid_argument("negative degree");
  Poly p;
  if (lead.is_zero()) return p;
  p.c_.assign(deg + 1, GaussRat(0));
  p.c_[deg] = std::move(lead);
  return p;
}

Poly Poly::linear_root(const GaussRat& r) {
  return Poly({-r, GaussRat(1)});
}

Poly Poly::from_roots(const std::vector<GaussRat>& roots) {
  Poly p = Poly::constant(GaussRat(1));
  for (const auto& r : roots) p = p * linear_root(r);
  return p;
}

const GaussRat& Poly::operator[](int i) const {
  static const GaussRat kZero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

GaussRat Poly::lead() const {
  if (c_.empty()) throw std::domain_error("lead of zero polynomial");
  return c_.back();
}

GaussRat Poly::eval(const GaussRat& x) const {
  GaussRat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), GaussRat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, GaussRat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

Poly operator*(const GaussRat& s, const Poly& p) {
  Poly r(p);
  if (s.is_zero()) return Poly();
  for (auto& c : r.c_) c *= s;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly acc = Poly::constant(GaussRat(1));
  Poly base(*this);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  GaussRat inv = lead().inverse();
  return inv * (*this);
}

DivModResult divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = a;
  std::vector<GaussRat> q;
  int db = b.degree();
  if (rem.degree() >= db) q.assign(rem.degree() - db + 1, GaussRat(0));
  GaussRat lb_inv = b.lead().inverse();
  while (!rem.is_zero() && rem.degree() >= db) {
    int shift = rem.degree() - db;
    GaussRat f = rem.lead() * lb_inv;
    q[shift] = f;
    rem = rem - Poly::monomial(shift, f) * b;
  }
  return {Poly(std::move(q)), std::move(rem)};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [quot, rem] = divmod(a, b);
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  return quot;
}

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return Poly();
  std::vector<GaussRat> c;
  c.reserve(p.degree());
  for (int i = 1; i <= p.degree(); ++i) c.push_back(GaussRat(i) * p[i]);
  return Poly(std::move(c));
}

Poly poly_gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero())
    throw std::domain_error("gcd of two zero polynomials");
  Poly a = p, b = q;
  while (!b.is_zero()) {
    Poly r = divmod(a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::vector<std::pair<Poly, int>> out;
  Poly f = p.monic();
  if (f.degree() == 0) return out;
  // Yun's algorithm, characteristic zero.
  Poly fp = derivative(f);
  Poly a = poly_gcd(f, fp);
  Poly b = exact_div(f, a);
  Poly c = exact_div(fp, a);
  Poly d = c - derivative(b);
  int m = 1;
  while (b.degree() > 0) {
    Poly g = poly_gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, m);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - derivative(b);
    ++m;
  }
  return out;
}

Poly squarefree_part(const Poly& p) {
  Poly r = Poly::constant(GaussRat(1));
  for (const auto& [f, m] : squarefree_decomposition(p)) r = r * f;
  return r;
}

int squarefree_degree(const Poly& p) { return squarefree_part(p).degree(); }

GaussRat resultant(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return GaussRat(0);
  if (f.degree() == 0) return f.lead().pow(g.degree());
  if (g.degree() == 0) return g.lead().pow(f.degree());
  Poly r = divmod(f, g).rem;
  if (r.is_zero()) return GaussRat(0);
  GaussRat sign = (f.degree() % 2 == 1 && g.degree() % 2 == 1) ? GaussRat(-1)
                                                               : GaussRat(1);
  return sign * g.lead().pow(f.degree() - r.degree()) * resultant(g, r);
}

Poly critical_value_resultant(const Poly& p) {
  if (p.degree() < 2)
    throw std::domain_error("no critical points: degree < 2");
  Poly dp = derivative(p);
  int dw = dp.degree();  // degree of R in w
  // R(w) = Res_z(p'(z), w - p(z)) recovered by Lagrange interpolation from
  // dw+1 scalar resultants.
  std::vector<GaussRat> xs, ys;
  for (int t = 0; t <= dw; ++t) {
    GaussRat w0(t);
    xs.push_back(w0);
    ys.push_back(resultant(dp, Poly::constant(w0) - p));
  }
  Poly r;
  for (int i = 0; i <= dw; ++i) {
    Poly li = Poly::constant(GaussRat(1));
    GaussRat denom(1);
    for (int j = 0; j <= dw; ++j) {
      if (j == i) continue;
      li = li * Poly::linear_root(xs[j]);
      denom *= xs[i] - xs[j];
    }
    r = r + (ys[i] / denom) * li;
  }
  return r;
}

Poly affine_substitute(const Poly& p, const GaussRat& alpha, const GaussRat& beta) {
  if (alpha.is_zero())
    throw std::invalid_argument("invalid transform: alpha = 0");
  return compose(p, Poly({beta, alpha}));
}

Poly reversal(const Poly& p, int n) {
  if (n < p.degree())
    throw std::invalid_argument("invalid transform: n < deg p");
  std::vector<GaussRat> c(n + 1, GaussRat(0));
  for (int i = 0; i <= p.degree(); ++i) c[n - i] = p[i];
  return Poly(std::move(c));
}

Poly reversal(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("reversal of zero polynomial");
  return reversal(p, p.degree());
}

Poly compose(const Poly& p, const Poly& q) {
  Poly acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * q + Poly::constant(*it);
  return acc;
}

}  // namespace urs
