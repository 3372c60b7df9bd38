#include "urs/sharing.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "urs/certifier.hpp"
#include "urs/text_format.hpp"

namespace urs {

RationalMap::RationalMap(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("rational map with zero denominator");
  if (num.is_zero()) {
    num_ = Poly::zero();
    den_ = Poly::constant(GaussRat(1));
    return;
  }
  Poly g = poly_gcd(num, den);
  num = exact_div(num, g);
  den = exact_div(den, g);
  GaussRat lead_inv = den.lead().inverse();
  num_ = lead_inv * num;
  den_ = lead_inv * den;
}

int RationalMap::degree() const {
  return std::max(num_.degree(), den_.degree());
}

GaussRat RationalMap::eval(const GaussRat& x) const {
  GaussRat d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("evaluation at a pole");
  return num_.eval(x) / d;
}

RationalMap RationalMap::operator-() const {
  RationalMap r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalMap operator+(const RationalMap& a, const RationalMap& b) {
  return RationalMap(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalMap operator-(const RationalMap& a, const RationalMap& b) { return a + (-b); }

RationalMap operator*(const RationalMap& a, const RationalMap& b) {
  return RationalMap(a.num_ * b.num_, a.den_ * b.den_);
}

RationalMap operator/(const RationalMap& a, const RationalMap& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero map");
  return RationalMap(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalMap& a, const RationalMap& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

RationalMap RationalMap::derivative_map() const {
  return RationalMap(derivative(num_) * den_ - num_ * derivative(den_), den_ * den_);
}

RationalMap RationalMap::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of the zero map");
  return RationalMap(den_, num_);
}

RationalMap compose_poly(const Poly& p, const RationalMap& f) {
  int n = p.degree();
  if (n < 0) throw std::domain_error("composition with the zero polynomial");
  Poly acc;
  // Horner with denominator homogenization: sum p_i num^i den^(n-i).
  for (int i = n; i >= 0; --i) {
    acc = acc * f.num() + Poly::constant(p[i]) * f.den().pow(n - i);
  }
  return RationalMap(acc, f.den().pow(n));
}

SharedSpectrum spectrum(const RationalMap& f, const Poly& p) {
  if (f.is_constant()) throw std::domain_error("spectrum of a constant map");
  if (p.is_zero()) throw std::domain_error("spectrum of the zero polynomial");

  SharedSpectrum out;
  int n = p.degree();
  if (n == 0) return out;

  // Numerator of P(f) before reduction; coprime to den^n since gcd(num,den)=1.
  Poly a;
  for (int i = n; i >= 0; --i)
    a = a * f.num() + Poly::constant(p[i]) * f.den().pow(n - i);
  for (auto& [factor, m] : squarefree_decomposition(a))
    out.strata.emplace_back(factor, m);
  out.infinity_mult = n * f.degree() - a.degree();
  return out;
}

namespace {

Poly stratum_or_one(const std::map<int, Poly>& strata, int m) {
  auto it = strata.find(m);
  return it == strata.end() ? Poly::constant(GaussRat(1)) : it->second;
}

std::map<int, Poly> strata_map(const SharedSpectrum& s) {
  std::map<int, Poly> out;
  for (const auto& [f, m] : s.strata) out[m] = f;
  return out;
}

Poly squarefree_union(const std::map<int, Poly>& strata, int above) {
  Poly prod = Poly::constant(GaussRat(1));
  for (const auto& [m, f] : strata)
    if (m > above) prod = prod * f;
  return prod;
}

std::optional<Poly> disagreement_witness(const Poly& a, const Poly& b) {
  Poly g = poly_gcd(a, b);
  Poly qa = exact_div(a, g);
  if (qa.degree() > 0) return qa;
  Poly qb = exact_div(b, g);
  if (qb.degree() > 0) return qb;
  return std::nullopt;
}

}  // namespace

ShareResult share_check(const RationalMap& f, const RationalMap& g, const Poly& p,
                        const ShareMode& mode) {
  SharedSpectrum sf = spectrum(f, p);
  SharedSpectrum sg = spectrum(g, p);
  auto mf = strata_map(sf);
  auto mg = strata_map(sg);

  auto differ = [](const Poly& a, const Poly& b, const std::string& what) {
    ShareResult r;
    r.equal = false;
    r.witness = disagreement_witness(a, b);
    r.detail = what;
    return r;
  };
  auto exact_upto = [&](int k) -> std::optional<ShareResult> {
    for (int m = 1; m <= k; ++m) {
      Poly a = stratum_or_one(mf, m), b = stratum_or_one(mg, m);
      if (a != b)
        return differ(a, b, "stratum of multiplicity " + std::to_string(m) + " differs");
    }
    return std::nullopt;
  };

  switch (mode.kind) {
    case ShareModeKind::CM: {
      int top = 0;
      for (const auto& [m, q] : mf) top = std::max(top, m);
      for (const auto& [m, q] : mg) top = std::max(top, m);
      if (auto d = exact_upto(top)) return *d;
      if (sf.infinity_mult != sg.infinity_mult)
        return {false, std::nullopt, "multiplicity at infinity differs"};
      return {true, std::nullopt, "all strata equal"};
    }
    case ShareModeKind::Weighted: {
      int k = mode.weight;
      if (auto d = exact_upto(k)) return *d;
      Poly uf = squarefree_union(mf, k), ug = squarefree_union(mg, k);
      if (uf != ug)
        return differ(uf, ug, "truncated (> k) squarefree locus differs");
      if (std::min(sf.infinity_mult, k + 1) != std::min(sg.infinity_mult, k + 1))
        return {false, std::nullopt, "truncated multiplicity at infinity differs"};
      return {true, std::nullopt, "strata 1..k equal; higher loci agree"};
    }
    case ShareModeKind::WeakWeight: {
      int k = mode.weight;
      if (auto d = exact_upto(k)) return *d;
      // the point at infinity participates only when present with mult <= k
      bool in_f = sf.infinity_mult >= 1 && sf.infinity_mult <= k;
      bool in_g = sg.infinity_mult >= 1 && sg.infinity_mult <= k;
      if (in_f != in_g || (in_f && sf.infinity_mult != sg.infinity_mult))
        return {false, std::nullopt, "low-multiplicity point at infinity differs"};
      return {true, std::nullopt, "strata 1..k equal"};
    }
    case ShareModeKind::IM: {
      Poly uf = squarefree_union(mf, 0), ug = squarefree_union(mg, 0);
      if (uf != ug) return differ(uf, ug, "supports differ");
      if ((sf.infinity_mult > 0) != (sg.infinity_mult > 0))
        return {false, std::nullopt, "presence at infinity differs"};
      return {true, std::nullopt, "supports equal"};
    }
  }
  throw std::logic_error("unreachable");
}

namespace {
/// Numerator of f - a (or the pole locus for a = infinity).
Poly point_locus(const RationalMap& f, const std::optional<GaussRat>& a) {
  if (!a) return f.den();
  return f.num() - Poly::constant(*a) * f.den();
}
}  // namespace

DeficiencyResult deficiency(const RationalMap& f, const std::optional<GaussRat>& a) {
  if (f.is_constant()) throw std::domain_error("deficiency of a constant map");
  int d = f.degree();
  Poly locus = point_locus(f, a);
  int finite = locus.is_zero() ? 0 : locus.degree();
  int distinct = locus.is_zero() || locus.degree() == 0 ? 0 : squarefree_degree(locus);
  int mu_inf = d - finite;
  DeficiencyResult out;
  out.delta = mpq_class(mu_inf, d);
  out.delta.canonicalize();
  out.theta = 1 - mpq_class(distinct, d);
  out.theta.canonicalize();
  return out;
}

SharedPointCounts classify_shared_points(const RationalMap& f, const RationalMap& g,
                                         const std::optional<GaussRat>& a) {
  if (f.is_constant() || g.is_constant())
    throw std::domain_error("classification needs non-constant maps");
  Poly lf = point_locus(f, a);
  Poly lg = point_locus(g, a);
  int inf_f = f.degree() - (lf.is_zero() ? 0 : lf.degree());
  int inf_g = g.degree() - (lg.is_zero() ? 0 : lg.degree());

  bool im_shared =
      (lf.degree() < 1 ? lg.degree() < 1 : lg.degree() >= 1 &&
           squarefree_part(lf) == squarefree_part(lg)) &&
      (inf_f > 0) == (inf_g > 0);
  if (!im_shared) throw std::invalid_argument("maps do not share the value IM");

  SharedPointCounts out;
  auto tally = [&out](int p, int q, long count) {
    if (p > q)
      out.nbar_L_f += count;
    else if (q > p)
      out.nbar_L_g += count;
    else if (p == 1)
      out.n_E_1 += count;
    else
      out.nbar_E_2 += count;
  };
  if (lf.degree() >= 1) {
    auto sf = squarefree_decomposition(lf);
    auto sg = squarefree_decomposition(lg);
    for (const auto& [pf, m1] : sf)
      for (const auto& [pg, m2] : sg) {
        int common = poly_gcd(pf, pg).degree();
        if (common > 0) tally(m1, m2, common);
      }
  }
  if (inf_f > 0 && inf_g > 0) tally(inf_f, inf_g, 1);
  out.nbar_star = out.nbar_L_f + out.nbar_L_g;
  return out;
}

RationalMap h_function(const RationalMap& f, const RationalMap& g, const Poly& p) {
  RationalMap F = compose_poly(p, f).reciprocal();
  RationalMap G = compose_poly(p, g).reciprocal();
  RationalMap Fp = F.derivative_map();
  RationalMap Gp = G.derivative_map();
  if (Fp.is_zero() || Gp.is_zero())
    throw std::domain_error("h_function needs nonzero F' and G'");
  return Fp.derivative_map() / Fp - Gp.derivative_map() / Gp;
}

RationalMap phi_function(const RationalMap& f, const RationalMap& g, const Poly& p) {
  RationalMap F = compose_poly(p, f).reciprocal();
  RationalMap G = compose_poly(p, g).reciprocal();
  if (F.is_zero() || G.is_zero())
    throw std::domain_error("phi_function needs nonzero F and G");
  return F.derivative_map() / F - G.derivative_map() / G;
}

std::optional<std::pair<RationalMap, RationalMap>> counterexample_witness(const Poly& p) {
  if (p.degree() < 1) return std::nullopt;

  auto validated = [&](RationalMap f, RationalMap g)
      -> std::optional<std::pair<RationalMap, RationalMap>> {
    if (f == g) return std::nullopt;
    if (!share_check(f, g, p, ShareMode::cm()).equal) return std::nullopt;
    return std::make_pair(std::move(f), std::move(g));
  };

  SymmetryReport sym = affine_symmetry(p);
  if (sym.kind == SymmetryKind::Continuous)
    return validated(RationalMap::identity(),
                     RationalMap::from_poly(Poly({GaussRat(0), GaussRat(2)})));
  if (sym.kind == SymmetryKind::Cyclic && sym.generator_exact)
    return validated(RationalMap::identity(),
                     RationalMap::from_poly(Poly({sym.gen_b, sym.gen_a})));

  // Zero sets closed under inversion admit the reciprocal pair.
  if (!p.constant_term().is_zero()) {
    Poly rev = reversal(p);
    if (p.lead() * rev == rev.lead() * p)
      return validated(RationalMap::identity(), RationalMap::identity().reciprocal());
  }
  return std::nullopt;
}

}  // namespace urs
