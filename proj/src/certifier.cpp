#include "urs/certifier.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "urs/text_format.hpp"

namespace urs {

namespace {

std::string cardinality_phrase(const Poly& p) {
  return std::to_string(squarefree_degree(p)) + " elements";
}

Hypothesis symmetry_hypothesis(const SymmetryReport& sym) {
  switch (sym.kind) {
    case SymmetryKind::TrivialOnly:
      return {"no_nontrivial_affine_symmetry", true,
              "centered support has gap gcd 1"};
    case SymmetryKind::Cyclic:
      return {"no_nontrivial_affine_symmetry", false,
              "cyclic affine symmetry of order " + std::to_string(sym.order)};
    case SymmetryKind::Continuous:
      return {"no_nontrivial_affine_symmetry", false,
              "continuous scaling symmetry (monomial)"};
  }
  return {"no_nontrivial_affine_symmetry", false, "?"};
}

std::vector<std::string> uniqueness_conditional(bool asserted) {
  if (asserted)
    return {"uniqueness-polynomial status asserted by caller; necessary "
            "conditions checked"};
  return {"conclusion conditional on P being a uniqueness polynomial; "
          "status not decided, only the affine-symmetry refutation was run"};
}

void seal(Certificate& c, std::string conclusion) {
  if (c.all_pass()) c.conclusion = std::move(conclusion);
}

}  // namespace

bool Certificate::all_pass() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const Hypothesis& h) { return h.pass; });
}

std::string theorem_id_str(TheoremId id) {
  switch (id) {
    case TheoremId::Fujimoto_T11_CM: return "Fujimoto_T11_CM";
    case TheoremId::Fujimoto_Bai_WeakWeight: return "Fujimoto_Bai_WeakWeight";
    case TheoremId::Equiv_Weight2_C21: return "Equiv_Weight2_C21";
    case TheoremId::Equiv_Weak3_C32: return "Equiv_Weak3_C32";
    case TheoremId::Equiv_All_C33: return "Equiv_All_C33";
    case TheoremId::TwoSet_T42: return "TwoSet_T42";
    case TheoremId::TwoSet_T43: return "TwoSet_T43";
    case TheoremId::GapForm_TB: return "GapForm_TB";
  }
  return "?";
}

CriticalStructure critical_structure(const Poly& p) {
  if (p.degree() < 2)
    throw std::domain_error("critical structure needs degree >= 2");
  CriticalStructure cs;
  Poly dp = derivative(p);
  cs.k = squarefree_degree(dp);
  cs.clusters = isolate_roots(dp);
  cs.no_simple_critical_zero =
      std::all_of(cs.clusters.begin(), cs.clusters.end(),
                  [](const RootCluster& c) { return c.multiplicity >= 2; });
  cs.separation = squarefree_degree(critical_value_resultant(p)) == cs.k;
  return cs;
}

SymmetryReport affine_symmetry(const Poly& p) {
  int n = p.degree();
  if (n < 1) throw std::domain_error("affine symmetry needs degree >= 1");

  SymmetryReport rep;
  rep.centroid = -p[n - 1] / (GaussRat(n) * p[n]);
  Poly centered = affine_substitute(p, GaussRat(1), rep.centroid);

  long d = 0;
  for (int i = 0; i < n; ++i)
    if (!centered[i].is_zero()) d = std::gcd(d, static_cast<long>(n - i));
  if (d == 0) {
    rep.kind = SymmetryKind::Continuous;
    return rep;
  }
  if (d == 1) {
    rep.kind = SymmetryKind::TrivialOnly;
    return rep;
  }

  rep.kind = SymmetryKind::Cyclic;
  rep.order = static_cast<int>(d);
  if (d == 2 || d == 4) {
    rep.generator_exact = true;
    rep.gen_a = (d == 2) ? GaussRat(-1) : GaussRat::imaginary_unit();
    rep.gen_b = rep.centroid * (GaussRat(1) - rep.gen_a);
    rep.gen_c = rep.gen_a.pow(n);
    Poly lhs = compose(p, Poly({rep.gen_b, rep.gen_a}));
    if (lhs != rep.gen_c * p)
      throw std::logic_error("affine symmetry generator failed verification");
  } else {
    rep.generator_tag = "primitive root of unity of order " + std::to_string(d);
  }
  return rep;
}

GapFormResult gap_form_check(const Poly& p) {
  GapFormResult r;
  r.n = p.degree();
  if (r.n < 1) {
    r.reason = "not a non-constant polynomial";
    return r;
  }
  if (!p[1].is_zero()) {
    r.reason = "has a z^1 term";
    return r;
  }
  int m = -1;
  for (int i = r.n - 1; i >= 2; --i)
    if (!p[i].is_zero()) {
      m = i;
      break;
    }
  if (m < 0) {
    r.reason = "no middle term a_m z^m with 2 <= m < n";
    return r;
  }
  r.middle_top = m;
  if (r.n - m < 3) {
    r.reason = "n - m < 3";
    return r;
  }
  for (int q = 2; q <= m; ++q)
    if (!p[q].is_zero() && q % 3 != 0) {
      r.witness_p = q;
      break;
    }
  if (r.witness_p < 0) {
    r.reason = "no index p in [2, m] with a_p != 0 and gcd(p,3) = 1";
    return r;
  }
  r.pass = true;
  r.reason = "shape matches with witness p = " + std::to_string(r.witness_p);
  return r;
}

std::vector<Certificate> certify_fujimoto(const Poly& p, Mode mode,
                                          bool uniqueness_asserted) {
  int n = p.degree();
  if (n < 1) throw std::domain_error("certify needs degree >= 1");

  std::vector<Hypothesis> hyp;
  bool simple = poly_gcd(p, derivative(p)).degree() == 0;
  hyp.push_back({"distinct_zeros", simple,
                 simple ? "gcd(P,P') = 1" : "P has a multiple zero"});

  int k = 0;
  bool separation = false, shape = false;
  if (n >= 2) {
    Poly dp = derivative(p);
    auto strata = squarefree_decomposition(dp);
    int min_q = 0;
    for (const auto& [f, m] : strata) {
      k += f.degree();
      if (min_q == 0 || m < min_q) min_q = m;
    }
    separation = squarefree_degree(critical_value_resultant(p)) == k;
    shape = k >= 3 || (k == 2 && min_q >= 2);
  }
  hyp.push_back({"critical_value_separation", separation,
                 "distinct critical values = " + std::to_string(separation ? k : -1) +
                     ", k = " + std::to_string(k)});
  hyp.push_back({"critical_shape", shape,
                 "k = " + std::to_string(k) +
                     (shape ? "" : " (needs k >= 3, or k = 2 with min q >= 2)")});

  int bound = mode == Mode::Meromorphic ? 2 * k + 6 : 2 * k + 2;
  hyp.push_back({"degree_threshold", n > bound,
                 "n = " + std::to_string(n) + " vs n > " + std::to_string(bound)});

  hyp.push_back(symmetry_hypothesis(affine_symmetry(p)));

  std::string urs = mode == Mode::Meromorphic ? "URSM" : "URSE";
  Certificate cm{TheoremId::Fujimoto_T11_CM, mode, hyp, "",
                 uniqueness_conditional(uniqueness_asserted)};
  seal(cm, "S is a " + urs + " with " + cardinality_phrase(p));

  Certificate weak{TheoremId::Fujimoto_Bai_WeakWeight, mode, hyp, "",
                   uniqueness_conditional(uniqueness_asserted)};
  weak.hypotheses.push_back({"weak_weight_at_least_3", true, "l >= 3 fixed"});
  seal(weak, "S is a " + urs + "_{l)} for every l >= 3, with " + cardinality_phrase(p));
  return {std::move(cm), std::move(weak)};
}

std::vector<Certificate> certify_weight_equivalence(const Poly& p, Mode mode) {
  int n = p.degree();
  if (n < 2) throw std::domain_error("certify needs degree >= 2");

  std::vector<Hypothesis> hyp;
  bool simple = poly_gcd(p, derivative(p)).degree() == 0;
  hyp.push_back({"distinct_zeros", simple,
                 simple ? "gcd(P,P') = 1" : "P has a multiple zero"});
  int k = squarefree_degree(derivative(p));
  int bound = mode == Mode::Meromorphic ? 2 * k + 7 : 2 * k + 3;
  hyp.push_back({"degree_threshold", n >= bound,
                 "n = " + std::to_string(n) + " vs n >= " + std::to_string(bound) +
                     " (k = " + std::to_string(k) + ")"});

  std::string urs = mode == Mode::Meromorphic ? "URSM" : "URSE";
  std::vector<std::string> cond = {
      "the equivalence upgrades an existing URS; it does not establish one"};

  Certificate c21{TheoremId::Equiv_Weight2_C21, mode, hyp, "", cond};
  seal(c21, "S is a " + urs + "_2 iff S is a " + urs);
  Certificate c32{TheoremId::Equiv_Weak3_C32, mode, hyp, "", cond};
  seal(c32, "S is a " + urs + "_{3)} iff S is a " + urs);
  Certificate c33{TheoremId::Equiv_All_C33, mode, hyp, "", cond};
  seal(c33, urs + ", " + urs + "_2 and " + urs + "_{3)} are equivalent for S");
  return {std::move(c21), std::move(c32), std::move(c33)};
}

TwoSetResult certify_two_set(const Poly& p, Mode mode) {
  int n = p.degree();
  if (n < 2) throw std::domain_error("certify needs degree >= 2");

  TwoSetResult out;
  CriticalStructure cs = critical_structure(p);
  out.s1 = isolate_roots(p);
  out.s2 = cs.clusters;

  bool simple = poly_gcd(p, derivative(p)).degree() == 0;
  Hypothesis h_simple{"distinct_zeros", simple,
                      simple ? "gcd(P,P') = 1" : "P has a multiple zero"};
  Hypothesis h_sep{"critical_value_separation", cs.separation,
                   "k = " + std::to_string(cs.k)};
  Hypothesis h_sym = symmetry_hypothesis(affine_symmetry(p));
  std::string urs_pair = mode == Mode::Meromorphic ? "meromorphic" : "entire";

  {
    Certificate c{TheoremId::TwoSet_T42, mode, {}, "", uniqueness_conditional(false)};
    c.hypotheses = {h_simple, h_sep};
    c.hypotheses.push_back({"k_at_least_3", cs.k >= 3, "k = " + std::to_string(cs.k)});
    int bound = mode == Mode::Meromorphic ? cs.k + 7 : cs.k + 3;
    c.hypotheses.push_back({"degree_threshold", n >= bound,
                            "n = " + std::to_string(n) + " vs n >= " +
                                std::to_string(bound)});
    c.hypotheses.push_back(h_sym);
    seal(c, "sharing S1 with weight 2 and S2 IM forces f = g for non-constant " +
                urs_pair + " functions");
    out.certificates.push_back(std::move(c));
  }
  {
    Certificate c{TheoremId::TwoSet_T43, mode, {}, "", uniqueness_conditional(false)};
    c.hypotheses = {h_simple, h_sep};
    c.hypotheses.push_back({"k_at_least_2", cs.k >= 2, "k = " + std::to_string(cs.k)});
    c.hypotheses.push_back({"no_simple_critical_zero", cs.no_simple_critical_zero,
                            cs.no_simple_critical_zero ? "all q_j >= 2"
                                                       : "P' has a simple zero"});
    int bound = mode == Mode::Meromorphic ? std::max(10 - 2 * cs.k, 5) : 5;
    c.hypotheses.push_back({"degree_threshold", n >= bound,
                            "n = " + std::to_string(n) + " vs n >= " +
                                std::to_string(bound)});
    c.hypotheses.push_back(h_sym);
    seal(c, "sharing S1 with weight 3 and S2 IM forces f = g for non-constant " +
                urs_pair + " functions");
    out.certificates.push_back(std::move(c));
  }
  return out;
}

bool deficiency_inequality(const mpq_class& theta_f, const mpq_class& theta_g,
                           const mpq_class& delta0, int n, int k) {
  auto in_range = [](const mpq_class& q) { return q >= 0 && q <= 1; };
  if (!in_range(theta_f) || !in_range(theta_g) || !in_range(delta0))
    throw std::invalid_argument("deficiency arguments must lie in [0,1]");
  if (n < 1 || k < 0) throw std::invalid_argument("bad n or k");
  mpq_class lhs = theta_f + theta_g + delta0 / 2;
  mpq_class rhs(2 * k + 6 - n, 2);
  rhs.canonicalize();
  return lhs > rhs;
}

}  // namespace urs
