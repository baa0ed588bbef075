#pragma once

// Metrics on K-types: the lambda norm (projection onto a chamber cone), the
// spin norm (minimum over the PRV components of E_mu (x) S_G), u-small hull
// membership, the Dirac inequality, and the atlas height.

#include "e7dirac/e7_structure.hpp"
#include "e7dirac/exact_lp.hpp"
#include "e7dirac/weyl.hpp"

#include <vector>

namespace e7dirac {

/// Nearest point to eta in the simplicial cone C^(j) generated by
/// w^(j) zeta_1..w^(j) zeta_7. Enumerates the 128 faces; the face whose
/// exact Gram solve has nonnegative coefficients and whose residual pairs
/// nonpositively with every generator is the answer. Throws
/// std::domain_error if eta is outside the span.
AmbientVector cone_project(const AmbientVector& eta, const Chamber& chamber);

struct LambdaDatum {
  AmbientVector lambda_a;
  Rational lambda_norm_sq;
  int witness_chamber = 0;
};

/// Chambers j for which mu + 2 rho_c is dominant, in index order.
std::vector<int> allowable_chambers(const KType& mu);

/// lambda_a(mu) = P(mu + 2 rho_c - rho^(j)) for the first allowable j. Every
/// other allowable chamber is checked to give the same vector (InternalError
/// otherwise).
LambdaDatum lambda_datum(const KType& mu);

struct SpinDatum {
  Rational spin_norm_sq;
  std::vector<int> achieving_chambers;
  std::vector<KType> prv_weights;  // {mu - rho_n^(j)} for each achieving j
};

/// min over j of || {mu - rho_n^(j)} + rho_c ||^2, with the achieving chambers.
SpinDatum spin_datum(const KType& mu);
Rational spin_norm_sq(const KType& mu);

/// Vertices of the u-small hull are the W(k)-orbits of kHullScale * rho_n^(j),
/// i.e. the sums 2 rho(u cap p) of Salamanca-Riba and Vogan. With this scale
/// the hull holds 21294 K-types; with scale 1 it would hold 868.
inline constexpr long kHullScale = 2;

/// The u-small feasibility program for mu: variables t_0..t_55, s_1..s_6 >= 0
/// with sum t = 1 and sum t_j 2rho_n^(j) - mu = sum s_i gamma_i, written in
/// varpi coordinates (six E6 rows, the zeta row, the convexity row).
lp::IntProblem usmall_program(const KType& mu);
lp::Result usmall_certificate(const KType& mu);
bool is_usmall(const KType& mu);

enum class DiracRelation { Strict, Equality, Violated };
const char* to_string(DiracRelation r);

/// Compares ||Lambda||^2 with the squared spin norm of mu.
DiracRelation dirac_inequality_holds(const InfChar& lambda, const KType& mu);

/// Sum of <lambda_a(mu), alpha^vee> over the positive roots of the witness
/// chamber, i.e. 2 <lambda_a(mu), rho^(j)>.
std::int64_t atlas_height(const KType& mu);
std::int64_t atlas_height(const LambdaDatum& lambda);

}  // namespace e7dirac
