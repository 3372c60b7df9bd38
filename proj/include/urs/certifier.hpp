#ifndef URS_CERTIFIER_HPP
#define URS_CERTIFIER_HPP

#include <string>
#include <vector>

#include "urs/families.hpp"
#include "urs/poly.hpp"
#include "urs/root_isolation.hpp"

namespace urs {

/// Critical-point structure of a polynomial: distinct zeros of P' with their
/// multiplicities, plus the critical-value separation flag.
struct CriticalStructure {
  int k = 0;
  std::vector<RootCluster> clusters;  // roots of P', multiplicity = q_j
  bool separation = false;
  bool no_simple_critical_zero = false;  // all q_j >= 2
};

enum class SymmetryKind { TrivialOnly, Cyclic, Continuous };

/// Affine self-maps L(z) = az+b with P(L(z)) = c P(z). A nontrivial symmetry
/// refutes the uniqueness-polynomial property.
struct SymmetryReport {
  SymmetryKind kind = SymmetryKind::TrivialOnly;
  int order = 1;  // minimal d > 1 for Cyclic
  GaussRat centroid;
  bool generator_exact = false;  // generator expressible in Q(i)
  GaussRat gen_a, gen_b, gen_c;  // P(a z + b) = c P(z), when exact
  std::string generator_tag;     // root-of-unity tag otherwise
};

enum class TheoremId {
  Fujimoto_T11_CM,
  Fujimoto_Bai_WeakWeight,
  Equiv_Weight2_C21,
  Equiv_Weak3_C32,
  Equiv_All_C33,
  TwoSet_T42,
  TwoSet_T43,
  GapForm_TB,
};

std::string theorem_id_str(TheoremId id);

struct Hypothesis {
  std::string name;
  bool pass;
  std::string evidence;
};

struct Certificate {
  TheoremId theorem_id;
  Mode mode = Mode::Meromorphic;
  std::vector<Hypothesis> hypotheses;
  std::string conclusion;  // nonempty only when every hypothesis passes
  std::vector<std::string> conditional_on;

  bool all_pass() const;
};

CriticalStructure critical_structure(const Poly& p);

SymmetryReport affine_symmetry(const Poly& p);

struct GapFormResult {
  bool pass = false;
  int n = -1;
  int middle_top = -1;  // largest middle exponent with nonzero coefficient
  int witness_p = -1;
  std::string reason;
};

/// Shape check for a_n z^n + sum_{j=2..m} a_j z^j + a_0 with n-m >= 3 and
/// some a_p != 0, 2 <= p <= m, gcd(p,3) = 1.
GapFormResult gap_form_check(const Poly& p);

/// Certificates for the CM unique-range-set theorem and its weak-weight
/// variant (weight l >= 3).
std::vector<Certificate> certify_fujimoto(const Poly& p, Mode mode,
                                          bool uniqueness_asserted);

/// Equivalence certificates URSM <=> URSM_2 <=> URSM_{3)} at n >= 2k+7
/// (resp. 2k+3).
std::vector<Certificate> certify_weight_equivalence(const Poly& p, Mode mode);

struct TwoSetResult {
  std::vector<Certificate> certificates;
  std::vector<RootCluster> s1;  // zeros of P
  std::vector<RootCluster> s2;  // distinct critical points
};

TwoSetResult certify_two_set(const Poly& p, Mode mode);

/// Exact test of Theta_f + Theta_g + delta0/2 > (2k+6-n)/2.
bool deficiency_inequality(const mpq_class& theta_f, const mpq_class& theta_g,
                           const mpq_class& delta0, int n, int k);

}  // namespace urs

#endif
