#pragma once

// Explicit root datum of E7(-25) in the eight-coordinate realization, with
// the basis conversions and K-type predicates everything else builds on.
//
// Conventions:
//  * The invariant form is the standard dot product on the eight coordinates,
//    so every root has squared length 2 and coroots coincide with roots.
//  * alpha_1..alpha_7 are the simple roots; alpha_1..alpha_6 are compact
//    (they are gamma_1..gamma_6 of the E6 factor of k) and alpha_7 is the
//    unique noncompact simple root.
//  * "zeta basis" coordinates [a..g] mean a*zeta_1 + ... + g*zeta_7.
//  * "varpi basis" coordinates [a..g] mean a*varpi_1 + ... + f*varpi_6 + (g/3)*zeta.

#include "e7dirac/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace e7dirac {

inline constexpr int kRank = 7;
inline constexpr int kCompactRank = 6;
inline constexpr std::size_t kPositiveRootCount = 63;
inline constexpr std::size_t kCompactPositiveCount = 36;
inline constexpr std::size_t kNoncompactPositiveCount = 27;

enum class Basis { Zeta, Varpi };

/// Highest weight of a K-type in the varpi basis: a..f >= 0, g any integer,
/// subject to the integrality condition checked by is_k_type().
struct KType {
  std::array<std::int64_t, 7> c{};

  KType() = default;
  /// Validates nonnegativity of a..f and the K-type integrality condition.
  explicit KType(const std::array<std::int64_t, 7>& coords);

  std::int64_t operator[](std::size_t i) const { return c[i]; }
  Coords7 to_coords() const;

  friend auto operator<=>(const KType&, const KType&) = default;
  friend bool operator==(const KType&, const KType&) = default;
};

std::string to_string(const KType& k);

/// Infinitesimal character in the zeta basis.
struct InfChar {
  Coords7 c{};

  InfChar() = default;
  explicit InfChar(const Coords7& coords) : c(coords) {}
  static InfChar from_ints(const std::array<std::int64_t, 7>& coords);

  /// True when every coordinate is an integer.
  bool is_integral() const;
  friend bool operator==(const InfChar& a, const InfChar& b) { return a.c == b.c; }
};

std::string to_string(const InfChar& l);

struct RootDatum {
  std::array<AmbientVector, 7> simple_roots;
  std::vector<AmbientVector> positive_roots;     // 63, sorted by height then lexicographically
  std::array<AmbientVector, 7> fundamental_weights;  // zeta_1..zeta_7
  std::array<AmbientVector, 6> compact_simple;   // gamma_1..gamma_6
  std::vector<AmbientVector> compact_positive;   // 36
  std::vector<AmbientVector> pplus_roots;        // 27, pair +1 with zeta
  std::vector<AmbientVector> pminus_roots;       // 27, negatives of pplus
  std::array<AmbientVector, 6> varpi;            // fundamental weights of the E6 factor
  AmbientVector rho, rho_c, rho_n, zeta, beta;
  AmbientVector span_complement;                 // spans the orthogonal complement of the 7-dim span
  std::array<std::array<Rational, 7>, 7> cartan; // <alpha_i, alpha_j>
  std::array<std::array<Rational, 7>, 7> zeta_gram;  // <zeta_i, zeta_j>
};

/// Constructs the datum from the seven simple roots and checks every
/// structural invariant; throws InternalError if any fails.
RootDatum build_root_datum();

/// Shared immutable instance, built on first use.
const RootDatum& root_datum();

Rational inner(const AmbientVector& u, const AmbientVector& v);
Rational norm_sq(const AmbientVector& v);
/// <v, root^vee> = 2 (v, root) / (root, root). Throws std::invalid_argument for root = 0.
Rational pair_coroot(const AmbientVector& v, const AmbientVector& root);

/// Reflection of v in the hyperplane orthogonal to root.
AmbientVector reflect(const AmbientVector& v, const AmbientVector& root);

/// True when v lies in the span of the simple roots.
bool in_span(const AmbientVector& v);

AmbientVector to_ambient(Basis basis, const Coords7& coords);
AmbientVector to_ambient(const KType& k);
AmbientVector to_ambient(const InfChar& l);
/// Throws std::domain_error if v is outside the span of the simple roots.
Coords7 from_ambient(Basis basis, const AmbientVector& v);

/// K-type integrality: -2a/3 - b - 4c/3 - 2d - 5e/3 - 4f/3 + g/3 is an integer.
/// Throws std::domain_error if any of a..f is negative.
bool is_k_type(const std::array<std::int64_t, 7>& coords);

/// [a,b,c,d,e,f,g] -> [f,b,e,d,c,a,-g].
KType contragredient(const KType& k);
/// Lowest weight [-f,-b,-e,-d,-c,-a,g] of the k-type with highest weight k.
std::array<std::int64_t, 7> lowest_weight(const KType& k);

/// Varpi-basis coordinates of an ambient weight as integers; throws if any
/// coordinate is not integral.
std::array<std::int64_t, 7> varpi_ints(const AmbientVector& v);

}  // namespace e7dirac
