#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace e7dirac {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when a mathematical invariant that should hold by construction
/// fails. Seeing one means a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Converts an integral rational to int64; throws if it is not integral or
/// does not fit.
std::int64_t to_int64(const Rational& q);

/// Exact vector in the eight-coordinate realization of the E7 weight space.
struct AmbientVector {
  std::array<Rational, 8> coords{};

  AmbientVector() = default;
  explicit AmbientVector(const std::array<Rational, 8>& c) : coords(c) {}

  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  AmbientVector& operator+=(const AmbientVector& o);
  AmbientVector& operator-=(const AmbientVector& o);
  AmbientVector& operator*=(const Rational& s);

  bool is_zero() const;

  friend AmbientVector operator+(AmbientVector a, const AmbientVector& b) { return a += b; }
  friend AmbientVector operator-(AmbientVector a, const AmbientVector& b) { return a -= b; }
  friend AmbientVector operator*(const Rational& s, AmbientVector a) { return a *= s; }
  friend AmbientVector operator-(AmbientVector a) { return a *= Rational(-1); }
  friend bool operator==(const AmbientVector& a, const AmbientVector& b) {
    return a.coords == b.coords;
  }
  /// Lexicographic; used only to give sets a canonical order.
  friend bool operator<(const AmbientVector& a, const AmbientVector& b);
};

/// Builds an ambient vector from eight integers divided by a common
/// denominator, e.g. make_ambient({1,-1,-1,-1,-1,-1,-1,1}, 2).
AmbientVector make_ambient(const std::array<long, 8>& numerators, long denominator = 1);

std::string to_string(const AmbientVector& v);

/// Seven coordinates in either the fundamental-weight basis or the
/// compact basis {varpi_1..varpi_6, zeta/3}.
using Coords7 = std::array<Rational, 7>;
std::string to_string(const Coords7& c);

}  // namespace e7dirac
