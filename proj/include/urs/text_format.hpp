#ifndef URS_TEXT_FORMAT_HPP
#define URS_TEXT_FORMAT_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "urs/poly.hpp"

namespace urs {

/// Parse failure with the byte offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t offset)
      : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

/// Coefficient literal: `RE`, `RE+IMi`, `RE-IMi`, or a pure imaginary part,
/// RE and IM being `p` or `p/q` integer pairs. Whitespace-insensitive.
GaussRat parse_gauss_rat(std::string_view text);

/// `[ c0, c1, ... ]`, lowest degree first.
Poly parse_poly(std::string_view text);

std::string to_string(const GaussRat& g);
std::string to_string(const Poly& p);

struct RationalMapLiteral {
  Poly num;
  Poly den;
};

/// `{num:[...],den:[...]}`.
RationalMapLiteral parse_rational_map_literal(std::string_view text);

/// Lossless hex-float form of a dyadic rational (denominator a power of two),
/// e.g. `0x1.8p-53`. Throws std::domain_error for non-dyadic input.
std::string dyadic_to_hex(const mpq_class& q);
mpq_class hex_to_dyadic(std::string_view text);

/// Smallest-exponent dyadic upper bound of q with `bits` significant bits.
mpq_class dyadic_round_up(const mpq_class& q, int bits);

/// Rational r with r*r >= q, tight to roughly the integer sqrt; q >= 0.
mpq_class sqrt_upper_bound(const mpq_class& q);

}  // namespace urs

#endif
