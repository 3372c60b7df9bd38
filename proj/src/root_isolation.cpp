#include "urs/root_isolation.hpp"

#include <cmath>
#include <algorithm>
#include <complex>
#include <stdexcept>

#include "urs/text_format.hpp"

namespace urs {

namespace {

struct MpfComplex {
  mpf_class re;
  mpf_class im;

  MpfComplex(int prec) : re(0, prec), im(0, prec) {}
  MpfComplex(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}

  static MpfComplex from(const GaussRat& g, int prec) {
    MpfComplex z(prec);
    z.re = mpf_class(g.re, prec);
    z.im = mpf_class(g.im, prec);
    return z;
  }

  MpfComplex operator+(const MpfComplex& o) const { return {re + o.re, im + o.im}; }
  MpfComplex operator-(const MpfComplex& o) const { return {re - o.re, im - o.im}; }
  MpfComplex operator*(const MpfComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  MpfComplex operator/(const MpfComplex& o) const {
    mpf_class n = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  mpf_class norm() const { return re * re + im * im; }
};

void poly_to_mpf(const Poly& p, int prec, std::vector<MpfComplex>& out) {
  out.clear();
  for (const auto& c : p.coeffs()) out.push_back(MpfComplex::from(c, prec));
}

void eval_with_derivative(const std::vector<MpfComplex>& c, const MpfComplex& z,
                          MpfComplex& v, MpfComplex& dv, int prec) {
  v = MpfComplex(prec);
  dv = MpfComplex(prec);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dv = dv * z + v;
    v = v * z + *it;
  }
}

/// Aberth-Ehrlich simultaneous iteration at `prec` bits. `seed` may carry
/// approximations from a lower-precision pass.
std::vector<MpfComplex> aberth(const Poly& f, int prec,
                               const std::vector<MpfComplex>* seed) {
  int d = f.degree();
  std::vector<MpfComplex> coeffs;
  poly_to_mpf(f, prec, coeffs);

  std::vector<MpfComplex> z;
  if (seed && static_cast<int>(seed->size()) == d) {
    for (const auto& s : *seed)
      z.emplace_back(mpf_class(s.re, prec), mpf_class(s.im, prec));
  } else {
    double r0 = 0.0;
    double lead = std::sqrt(f.lead().norm().get_d());
    for (int i = 0; i < d; ++i)
      r0 = std::max(r0, std::sqrt(f[i].norm().get_d()) / lead);
    r0 = 1.0 + r0;
    for (int j = 0; j < d; ++j) {
      double th = 2.0 * M_PI * (j + 0.5) / d + 0.42;
      z.emplace_back(mpf_class(r0 * std::cos(th), prec),
                     mpf_class(r0 * std::sin(th), prec));
    }
  }

  mpf_class tol(1, prec);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec - 6);
  int maxit = 60 + prec / 2;
  for (int it = 0; it < maxit; ++it) {
    bool converged = true;
    for (int j = 0; j < d; ++j) {
      MpfComplex v(prec), dv(prec);
      eval_with_derivative(coeffs, z[j], v, dv, prec);
      if (dv.norm() == 0) {
        // nudge off a critical point
        z[j].re += mpf_class(1e-3, prec);
        converged = false;
        continue;
      }
      MpfComplex w = v / dv;
      MpfComplex sum(prec);
      for (int k = 0; k < d; ++k) {
        if (k == j) continue;
        MpfComplex diff = z[j] - z[k];
        if (diff.norm() == 0) {
          diff.re += mpf_class(1e-3, prec);
        }
        MpfComplex one(mpf_class(1, prec), mpf_class(0, prec));
        sum = sum + one / diff;
      }
      MpfComplex one(mpf_class(1, prec), mpf_class(0, prec));
      MpfComplex denom = one - w * sum;
      MpfComplex corr = (denom.norm() == 0) ? w : w / denom;
      z[j] = z[j] - corr;
      mpf_class scale = z[j].norm();
      if (scale < 1) scale = 1;
      if (corr.norm() > tol * tol * scale) converged = false;
    }
    if (converged) break;
  }
  return z;
}

mpq_class mpf_to_mpq(const mpf_class& f) {
  mpq_class q;
  mpq_set_f(q.get_mpq_t(), f.get_mpf_t());
  return q;
}

long floor_log2_pos(const mpq_class& q) {
  long ln = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2));
  long ld = static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
  long e = ln - ld;
  mpq_class lo;
  if (e >= 0) {
    mpz_class t = 1;
    t <<= e;
    lo = mpq_class(t);
  } else {
    mpz_class t = 1;
    t <<= -e;
    lo = mpq_class(1) / mpq_class(t);
  }
  if (q < lo) return e - 1;
  if (q >= lo * 2) return e + 1;
  return e;
}

mpq_class dyadic_round_nearest(const mpq_class& q, int bits) {
  if (q == 0) return 0;
  mpq_class a = abs(q);
  long s = bits - 1 - floor_log2_pos(a);
  mpq_class scaled = a;
  if (s >= 0) {
    mpz_class sh = 1;
    sh <<= s;
    scaled *= mpq_class(sh);
  } else {
    mpz_class sh = 1;
    sh <<= -s;
    scaled /= mpq_class(sh);
  }
  scaled += mpq_class(1, 2);
  mpz_class t;
  mpz_fdiv_q(t.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
  mpq_class out;
  if (s >= 0) {
    mpz_class den = 1;
    den <<= s;
    out = mpq_class(t, den);
    out.canonicalize();
  } else {
    mpz_class sh = 1;
    sh <<= -s;
    out = mpq_class(t * sh);
  }
  return (q < 0) ? mpq_class(-out) : out;
}

struct Candidate {
  mpq_class re, im, radius;
  int stratum;
  int mult;
  const Poly* factor;
  bool exact;
};

/// Exact a posteriori certificate: the disk around c of radius
/// d*|F(c)/F'(c)| contains at least one root of the squarefree factor F.
/// Returns false when F'(c) vanishes (center unusable at this precision).
bool certified_radius(const Poly& f, const Poly& df, const GaussRat& c, int deg,
                      mpq_class& radius_out) {
  GaussRat v = f.eval(c);
  if (v.is_zero()) {
    radius_out = 0;
    return true;
  }
  GaussRat dv = df.eval(c);
  if (dv.is_zero()) return false;
  mpq_class ratio2 = mpq_class(deg * deg) * v.norm() / dv.norm();
  radius_out = dyadic_round_up(sqrt_upper_bound(ratio2), 64);
  return true;
}

/// Round q to the nearest multiple of 2^g (g may be negative).
mpq_class round_to_grid(const mpq_class& q, long g) {
  mpq_class scaled = q;
  if (g >= 0) {
    mpz_class sh = 1;
    sh <<= g;
    scaled /= mpq_class(sh);
  } else {
    mpz_class sh = 1;
    sh <<= -g;
    scaled *= mpq_class(sh);
  }
  scaled += mpq_class(1, 2);
  mpz_class t;
  mpz_fdiv_q(t.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
  mpq_class out;
  if (g >= 0) {
    mpz_class sh = 1;
    sh <<= g;
    out = mpq_class(t * sh);
  } else {
    mpz_class den = 1;
    den <<= -g;
    out = mpq_class(t, den);
    out.canonicalize();
  }
  return out;
}

/// Snap the center onto a nearby low-complexity dyadic point when that point
/// is an exact root, so rational roots come back with radius 0. Both
/// coordinates are rounded on one absolute grid scaled to the root magnitude,
/// so numerical noise on a zero coordinate collapses to exact zero.
void try_snap(const Poly& f, mpq_class& cre, mpq_class& cim, mpq_class& radius,
              bool& exact, int prec) {
  mpq_class mag = 1;
  mpq_class are(abs(cre)), aim(abs(cim));
  if (are > mag) mag = are;
  if (aim > mag) mag = aim;
  long e = floor_log2_pos(mag);
  for (int bits : {prec / 2, prec / 4, 24, 8}) {
    if (bits < 2) continue;
    mpq_class r = round_to_grid(cre, e - bits);
    mpq_class i = round_to_grid(cim, e - bits);
    if (f.eval(GaussRat(r, i)).is_zero()) {
      cre = r;
      cim = i;
      radius = 0;
      exact = true;
      return;
    }
  }
}

}  // namespace

mpq_class default_radius_bound() {
  mpz_class den = 1;
  den <<= 53;
  return mpq_class(1, den);
}

bool disks_disjoint(const Disk& a, const Disk& b) {
  mpq_class dr = a.center_re - b.center_re;
  mpq_class di = a.center_im - b.center_im;
  mpq_class rr = a.radius + b.radius;
  return dr * dr + di * di > rr * rr;
}

std::vector<RootCluster> isolate_roots(const Poly& p, const mpq_class& radius_bound,
                                       int precision_bits) {
  if (p.degree() < 1)
    throw std::domain_error("root isolation needs degree >= 1");
  if (radius_bound <= 0)
    throw std::invalid_argument("radius bound must be positive");

  auto strata = squarefree_decomposition(p);
  std::vector<std::vector<MpfComplex>> seeds(strata.size());
  std::vector<const std::vector<MpfComplex>*> seed_ptrs(strata.size(), nullptr);

  for (int prec = precision_bits; prec <= 1 << 20; prec *= 2) {
    std::vector<Candidate> cands;
    bool ok = true;
    for (size_t s = 0; s < strata.size() && ok; ++s) {
      const Poly& f = strata[s].first;
      Poly df = derivative(f);
      int d = f.degree();
      auto roots = aberth(f, prec, seed_ptrs[s]);
      seeds[s] = roots;
      seed_ptrs[s] = &seeds[s];
      for (const auto& z : roots) {
        Candidate c;
        c.re = mpf_to_mpq(z.re);
        c.im = mpf_to_mpq(z.im);
        c.stratum = static_cast<int>(s);
        c.mult = strata[s].second;
        c.factor = &strata[s].first;
        c.exact = false;
        if (!certified_radius(f, df, GaussRat(c.re, c.im), d, c.radius)) {
          ok = false;
          break;
        }
        if (c.radius > 0)
          try_snap(f, c.re, c.im, c.radius, c.exact, prec);
        if (c.radius > radius_bound) {
          ok = false;
          break;
        }
        cands.push_back(std::move(c));
      }
    }
    if (!ok) continue;

    bool disjoint = true;
    for (size_t i = 0; i < cands.size() && disjoint; ++i)
      for (size_t j = i + 1; j < cands.size() && disjoint; ++j) {
        mpq_class dr = cands[i].re - cands[j].re;
        mpq_class di = cands[i].im - cands[j].im;
        mpq_class rr = cands[i].radius + cands[j].radius;
        if (!(dr * dr + di * di > rr * rr)) disjoint = false;
      }
    if (!disjoint) continue;

    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      if (a.re != b.re) return a.re < b.re;
      return a.im < b.im;
    });
    std::vector<RootCluster> out;
    out.reserve(cands.size());
    for (auto& c : cands) {
      RootCluster rc;
      rc.disk = Disk{c.re, c.im, c.radius};
      rc.multiplicity = c.mult;
      rc.source_stratum = c.stratum;
      rc.factor = *c.factor;
      out.push_back(std::move(rc));
    }
    return out;
  }
  throw std::runtime_error("root isolation: precision exhausted");
}

std::vector<RootCluster> isolate_roots(const Poly& p) {
  return isolate_roots(p, default_radius_bound());
}

RootCluster refine(const RootCluster& c, const mpq_class& radius_bound) {
  if (radius_bound <= 0)
    throw std::invalid_argument("radius bound must be positive");
  if (c.disk.radius <= radius_bound) return c;

  const Poly& f = c.factor;
  Poly df = derivative(f);
  int d = f.degree();
  long need = 64;
  if (radius_bound < 1) need = -floor_log2_pos(radius_bound) + 64;

  for (int prec = std::max(128L, need); prec <= 1 << 20; prec *= 2) {
    std::vector<MpfComplex> coeffs;
    poly_to_mpf(f, prec, coeffs);
    MpfComplex z(mpf_class(c.disk.center_re, prec), mpf_class(c.disk.center_im, prec));
    for (int it = 0; it < 40 + prec / 4; ++it) {
      MpfComplex v(prec), dv(prec);
      eval_with_derivative(coeffs, z, v, dv, prec);
      if (dv.norm() == 0) break;
      MpfComplex w = v / dv;
      z = z - w;
      if (w.norm() == 0) break;
    }
    RootCluster out = c;
    out.disk.center_re = mpf_to_mpq(z.re);
    out.disk.center_im = mpf_to_mpq(z.im);
    mpq_class radius;
    if (!certified_radius(f, df, GaussRat(out.disk.center_re, out.disk.center_im), d,
                          radius))
      continue;
    bool exact = radius == 0;
    if (!exact) try_snap(f, out.disk.center_re, out.disk.center_im, radius, exact, prec);
    out.disk.radius = radius;
    if (radius <= radius_bound) return out;
  }
  throw std::runtime_error("refine: precision exhausted");
}

}  // namespace urs
