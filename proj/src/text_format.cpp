#include "urs/text_format.hpp"

#include <cctype>

namespace urs {

namespace {

struct Scanner {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected digits", pos);
    return mpz_class(std::string(s.substr(start, pos - start)), 10);
  }

  /// `p` or `p/q`, no sign.
  mpq_class rational() {
    mpz_class num = integer();
    if (consume('/')) {
      size_t den_pos = pos;
      mpz_class den = integer();
      if (den == 0) throw ParseError("zero denominator", den_pos);
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }

  /// One signed part: real rational or imaginary `[rat]i`. Returns the value
  /// and whether it was imaginary.
  std::pair<mpq_class, bool> part() {
    int sign = 1;
    if (consume('-'))
      sign = -1;
    else
      consume('+');
    skip_ws();
    if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      return {mpq_class(sign), true};
    }
    mpq_class r = rational();
    if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      return {sign * r, true};
    }
    return {sign * r, false};
  }

  GaussRat gauss_rat() {
    auto [v1, imag1] = part();
    skip_ws();
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (imag1)
        throw ParseError("real part must precede imaginary part", pos);
      size_t p2 = pos;
      auto [v2, imag2] = part();
      if (!imag2) throw ParseError("expected imaginary part", p2);
      return GaussRat(v1, v2);
    }
    return imag1 ? GaussRat(mpq_class(0), v1) : GaussRat(v1);
  }

  Poly poly() {
    expect('[');
    std::vector<GaussRat> coeffs;
    coeffs.push_back(gauss_rat());
    while (consume(',')) coeffs.push_back(gauss_rat());
    expect(']');
    return Poly(std::move(coeffs));
  }

  void expect_keyword(std::string_view kw) {
    skip_ws();
    if (s.substr(pos, kw.size()) != kw)
      throw ParseError("expected '" + std::string(kw) + "'", pos);
    pos += kw.size();
  }

  void end() {
    if (!eof()) throw ParseError("trailing characters", pos);
  }
};

}  // namespace

GaussRat parse_gauss_rat(std::string_view text) {
  Scanner sc{text};
  GaussRat g = sc.gauss_rat();
  sc.end();
  return g;
}

Poly parse_poly(std::string_view text) {
  Scanner sc{text};
  Poly p = sc.poly();
  sc.end();
  return p;
}

RationalMapLiteral parse_rational_map_literal(std::string_view text) {
  Scanner sc{text};
  sc.expect('{');
  sc.expect_keyword("num");
  sc.expect(':');
  Poly num = sc.poly();
  sc.expect(',');
  sc.expect_keyword("den");
  sc.expect(':');
  Poly den = sc.poly();
  sc.expect('}');
  sc.end();
  return {std::move(num), std::move(den)};
}

std::string rational_str(const mpq_class& q) {
  std::string out = q.get_num().get_str();
  if (q.get_den() != 1) out += "/" + q.get_den().get_str();
  return out;
}

std::string GaussRat::str() const { return urs::to_string(*this); }

std::string to_string(const GaussRat& g) {
  if (g.im == 0) return rational_str(g.re);
  mpq_class ai = abs(g.im);
  std::string imag = (ai == 1) ? "i" : rational_str(ai) + "i";
  if (g.re == 0) return (g.im < 0 ? "-" : "") + imag;
  return rational_str(g.re) + (g.im < 0 ? "-" : "+") + imag;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "[ 0 ]";
  std::string out = "[ ";
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ", ";
    out += to_string(p.coeffs()[i]);
  }
  return out + " ]";
}

std::string dyadic_to_hex(const mpq_class& q) {
  if (q == 0) return "0x0p+0";
  mpz_class den = q.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1)
    throw std::domain_error("not a dyadic rational");
  long k = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1;
  mpz_class a = abs(q.get_num());
  long bits = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
  long exp = bits - 1 - k;
  mpz_class frac = a;
  mpz_clrbit(frac.get_mpz_t(), bits - 1);
  long fbits = bits - 1;
  long pad = (4 - fbits % 4) % 4;
  frac <<= pad;
  std::string hex = frac.get_str(16);
  // restore leading zero hex digits lost by get_str
  long want = (fbits + pad) / 4;
  while (static_cast<long>(hex.size()) < want) hex.insert(hex.begin(), '0');
  while (!hex.empty() && hex.back() == '0') hex.pop_back();
  std::string out = (q < 0) ? "-0x1" : "0x1";
  if (!hex.empty()) out += "." + hex;
  out += "p";
  out += (exp >= 0 ? "+" : "") + std::to_string(exp);
  return out;
}

mpq_class hex_to_dyadic(std::string_view text) {
  Scanner sc{text};
  sc.skip_ws();
  int sign = 1;
  if (sc.consume('-')) sign = -1;
  sc.expect('0');
  if (!sc.consume('x') && !sc.consume('X'))
    throw ParseError("expected 'x'", sc.pos);
  auto hexval = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  mpz_class mant = 0;
  long fdigits = 0;
  bool any = false, frac = false;
  while (sc.pos < sc.s.size()) {
    char c = sc.s[sc.pos];
    if (c == '.' && !frac) {
      frac = true;
      ++sc.pos;
      continue;
    }
    int v = hexval(c);
    if (v < 0) break;
    mant = mant * 16 + v;
    if (frac) ++fdigits;
    any = true;
    ++sc.pos;
  }
  if (!any) throw ParseError("expected hex digits", sc.pos);
  if (!sc.consume('p') && !sc.consume('P'))
    throw ParseError("expected 'p'", sc.pos);
  int esign = 1;
  if (sc.consume('-'))
    esign = -1;
  else
    sc.consume('+');
  mpz_class e = sc.integer();
  sc.end();
  if (!e.fits_slong_p()) throw ParseError("exponent out of range", 0);
  long exp = esign * e.get_si() - 4 * fdigits;
  mpq_class out(sign * mant);
  if (exp >= 0) {
    mpz_class sh = 1;
    sh <<= exp;
    out *= mpq_class(sh);
  } else {
    mpz_class sh = 1;
    sh <<= -exp;
    out /= mpq_class(sh);
  }
  out.canonicalize();
  return out;
}

namespace {
long floor_log2(const mpq_class& q) {
  // q > 0
  long ln = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2));
  long ld = static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
  long e = ln - ld;
  // sizeinbase is only accurate to within one bit of the ratio; fix up.
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
}  // namespace

mpq_class dyadic_round_up(const mpq_class& q, int bits) {
  if (q == 0) return 0;
  if (q < 0) throw std::domain_error("dyadic_round_up: negative input");
  long s = bits - 1 - floor_log2(q);
  mpz_class t;
  if (s >= 0) {
    mpz_class num = q.get_num();
    num <<= s;
    mpz_cdiv_q(t.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_class den = 1;
    den <<= s;
    mpq_class out(t, den);
    out.canonicalize();
    return out;
  }
  mpz_class den = q.get_den();
  den <<= -s;
  mpz_cdiv_q(t.get_mpz_t(), q.get_num().get_mpz_t(), den.get_mpz_t());
  mpz_class sh = 1;
  sh <<= -s;
  return mpq_class(t * sh);
}

mpq_class sqrt_upper_bound(const mpq_class& q) {
  if (q < 0) throw std::domain_error("sqrt of negative rational");
  if (q == 0) return 0;
  mpz_class prod = q.get_num() * q.get_den();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), prod.get_mpz_t());
  if (root * root < prod) root += 1;  // exact when num*den is a perfect square
  mpq_class out(root, q.get_den());
  out.canonicalize();
  return out;
}

}  // namespace urs
