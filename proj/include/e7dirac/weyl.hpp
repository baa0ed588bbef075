#pragma once

// Weyl-group algorithms for E7(-25): dominant representatives, the 56
// positive systems containing the fixed compact positive system, and the
// Weyl dimension formula for the E6 factor of k.

#include "e7dirac/e7_structure.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace e7dirac {

enum class Group { G, K };

/// Simple-reflection indices, 1-based (1..7 for W(g), 1..6 for W(k)).
/// The word [i1, ..., ik] denotes the group element s_i1 s_i2 ... s_ik.
using WeylWord = std::vector<int>;

/// Applies the group element denoted by word to v (rightmost letter first).
AmbientVector apply_word(const WeylWord& word, AmbientVector v);
/// Applies the inverse of the element denoted by word.
AmbientVector apply_inverse(const WeylWord& word, AmbientVector v);

struct DominantRep {
  AmbientVector dominant;
  WeylWord word;  // apply_word(word, v) == dominant
};

/// Reflects at the lowest-index simple root with negative pairing until none
/// remains. For Group::K only gamma_1..gamma_6 are used, so the zeta
/// component is untouched. Throws std::domain_error if v is outside the span.
DominantRep dominant_rep(const AmbientVector& v, Group group);

bool is_dominant(const AmbientVector& v, Group group);

struct Chamber {
  int index = 0;
  WeylWord word;                                   // w^(j), w^(j) rho = rho^(j)
  AmbientVector rho_j;                             // rho^(j)
  AmbientVector rho_n_j;                           // rho^(j) - rho_c
  std::array<AmbientVector, 7> simple_roots;       // w^(j) alpha_i
  std::array<AmbientVector, 7> fundamental_weights;  // w^(j) zeta_i, generators of C^(j)
};

/// Breadth-first search from the standard positive system, crossing only
/// noncompact simple walls. Chamber 0 is the standard one; throws
/// InternalError unless exactly 56 chambers are found.
std::vector<Chamber> enumerate_chambers();

/// Cached result of enumerate_chambers().
const std::vector<Chamber>& chambers();

/// Positive roots of the j-th positive system, w^(j) applied to the standard ones.
std::vector<AmbientVector> chamber_positive_roots(const Chamber& c);

/// True when v is dominant for the positive system of chamber c.
bool is_chamber_dominant(const AmbientVector& v, const Chamber& c);

/// Weyl dimension of the k-type with highest weight k (the central zeta part
/// contributes a one-dimensional character).
Integer weyl_dim_k(const KType& k);

/// Dimensions of the 56 summands E_{rho_n^(j)} of the spin module.
std::vector<Integer> spin_module_summands();

/// True iff the summands add up to 2^27 = dim of the spin module of p.
bool spin_module_dimension_check();

/// Pairs (i, j), i < j, of chambers whose rho_n^(i) and rho_n^(j) coincide.
std::vector<std::pair<int, int>> coincident_spin_summands();

namespace detail {

/// Weight scaled by 6 so that K-types and the rho_n^(j) have integer
/// coordinates; used by the hot loops of the norm computations.
using ScaledWeight = std::array<std::int64_t, 8>;
inline constexpr std::int64_t kScale = 6;

ScaledWeight to_scaled(const AmbientVector& v);
AmbientVector from_scaled(const ScaledWeight& x);

/// In-place K-dominant representative of a scaled weight whose pairings with
/// the compact simple roots are integers (before scaling).
void k_dominate_scaled(ScaledWeight& x);

std::int64_t dot(const ScaledWeight& x, const ScaledWeight& y);

}  // namespace detail

}  // namespace e7dirac
