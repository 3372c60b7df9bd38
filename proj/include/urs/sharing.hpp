#ifndef URS_SHARING_HPP
#define URS_SHARING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "urs/poly.hpp"

namespace urs {

/// Reduced ratio of two polynomials over Q(i); the denominator is monic and
/// coprime to the numerator.
class RationalMap {
 public:
  RationalMap() : num_(Poly::zero()), den_(Poly::constant(GaussRat(1))) {}
  RationalMap(Poly num, Poly den);
  static RationalMap from_poly(Poly p) { return RationalMap(std::move(p), Poly::constant(GaussRat(1))); }
  static RationalMap identity() { return from_poly(Poly({GaussRat(0), GaussRat(1)})); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int degree() const;
  bool is_constant() const { return degree() < 1; }
  bool is_zero() const { return num_.is_zero(); }

  GaussRat eval(const GaussRat& x) const;  // throws on a pole

  RationalMap operator-() const;
  friend RationalMap operator+(const RationalMap& a, const RationalMap& b);
  friend RationalMap operator-(const RationalMap& a, const RationalMap& b);
  friend RationalMap operator*(const RationalMap& a, const RationalMap& b);
  friend RationalMap operator/(const RationalMap& a, const RationalMap& b);
  friend bool operator==(const RationalMap& a, const RationalMap& b);
  friend bool operator!=(const RationalMap& a, const RationalMap& b) { return !(a == b); }

  RationalMap derivative_map() const;
  RationalMap reciprocal() const;

 private:
  Poly num_;
  Poly den_;
};

/// P(f) as a reduced rational map.
RationalMap compose_poly(const Poly& p, const RationalMap& f);

/// Multiplicity strata of the S-points of f, S the zero set of p: strata[m]
/// is the monic squarefree polynomial whose roots carry exact multiplicity m
/// in the pulled-back divisor; infinity handled via degree deficit.
struct SharedSpectrum {
  std::vector<std::pair<Poly, int>> strata;  // (stratum polynomial, multiplicity)
  int infinity_mult = 0;
};

SharedSpectrum spectrum(const RationalMap& f, const Poly& p);

enum class ShareModeKind { CM, Weighted, WeakWeight, IM };

struct ShareMode {
  ShareModeKind kind;
  int weight = 0;  // k for Weighted / WeakWeight

  static ShareMode cm() { return {ShareModeKind::CM}; }
  static ShareMode weighted(int k) { return {ShareModeKind::Weighted, k}; }
  static ShareMode weak_weight(int k) { return {ShareModeKind::WeakWeight, k}; }
  static ShareMode im() { return {ShareModeKind::IM}; }
};

struct ShareResult {
  bool equal = false;
  std::optional<Poly> witness;  // stratum factor isolating a disagreeing point
  std::string detail;
};

ShareResult share_check(const RationalMap& f, const RationalMap& g, const Poly& p,
                        const ShareMode& mode);

struct DeficiencyResult {
  mpq_class delta;
  mpq_class theta;
};

/// Exact Nevanlinna deficiencies of a rational map at a (nullopt = infinity).
DeficiencyResult deficiency(const RationalMap& f, const std::optional<GaussRat>& a);

struct SharedPointCounts {
  long nbar_L_f = 0;   // points where mult_f > mult_g, reduced count
  long nbar_L_g = 0;
  long n_E_1 = 0;      // points with mult_f = mult_g = 1
  long nbar_E_2 = 0;   // points with mult_f = mult_g >= 2, reduced count
  long nbar_star = 0;  // = nbar_L_f + nbar_L_g
};

/// Requires f and g to share a IM; throws otherwise.
SharedPointCounts classify_shared_points(const RationalMap& f, const RationalMap& g,
                                         const std::optional<GaussRat>& a);

/// H = F''/F' - G''/G' with F = 1/P(f), G = 1/P(g).
RationalMap h_function(const RationalMap& f, const RationalMap& g, const Poly& p);
/// phi = F'/F - G'/G.
RationalMap phi_function(const RationalMap& f, const RationalMap& g, const Poly& p);

/// A pair (f, g), f != g, sharing the zero set of p CM — a constructive
/// refutation of the uniqueness-polynomial property when one exists within
/// the affine/reciprocal search space.
std::optional<std::pair<RationalMap, RationalMap>> counterexample_witness(const Poly& p);

}  // namespace urs

#endif
