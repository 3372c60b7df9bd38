#ifndef URS_POLY_HPP
#define URS_POLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "urs/gauss_rat.hpp"

namespace urs {

/// Dense univariate polynomial over Q(i), coefficients stored lowest degree
/// first. The zero polynomial has an empty coefficient vector; otherwise the
/// leading coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<GaussRat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly constant(GaussRat a);
  static Poly monomial(int deg, GaussRat lead = GaussRat(1));
  /// z - r
  static Poly linear_root(const GaussRat& r);
  static Poly from_roots(const std::vector<GaussRat>& roots);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<GaussRat>& coeffs() const { return c_; }
  const GaussRat& operator[](int i) const;
  GaussRat lead() const;
  GaussRat constant_term() const { return c_.empty() ? GaussRat(0) : c_[0]; }

  GaussRat eval(const GaussRat& x) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const GaussRat& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const;
  Poly monic() const;

 private:
  std::vector<GaussRat> c_;
  void trim();
};

struct DivModResult {
  Poly quot;
  Poly rem;
};

/// Exact division with remainder over the field Q(i); throws on zero divisor.
DivModResult divmod(const Poly& a, const Poly& b);
/// Exact division; throws if the remainder is nonzero.
Poly exact_div(const Poly& a, const Poly& b);

Poly derivative(const Poly& p);

/// Monic gcd via the Euclidean algorithm. Throws if both inputs are zero.
Poly poly_gcd(const Poly& p, const Poly& q);

/// Yun-style squarefree decomposition: pairwise coprime monic squarefree
/// factors F_m with prod F_m^m = p/lead(p), multiplicities strictly
/// increasing. Throws on the zero polynomial.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

/// p with all multiplicities stripped: monic, same distinct roots.
Poly squarefree_part(const Poly& p);
int squarefree_degree(const Poly& p);

/// Res_z(f(z), g(z)) over Q(i).
GaussRat resultant(const Poly& f, const Poly& g);

/// R(w) = Res_z(p'(z), w - p(z)); its distinct roots are the critical values
/// of p. Throws if deg p < 2.
Poly critical_value_resultant(const Poly& p);

/// p composed with z -> alpha*z + beta; alpha must be nonzero.
Poly affine_substitute(const Poly& p, const GaussRat& alpha, const GaussRat& beta);

/// Coefficient sequence reversed within length n+1, i.e. z^n p(1/z).
/// Requires n >= deg p.
Poly reversal(const Poly& p, int n);
Poly reversal(const Poly& p);

/// p(q(z)) by Horner over polynomials.
Poly compose(const Poly& p, const Poly& q);

}  // namespace urs

#endif
