#pragma once

// Screening pipeline: admissibility of infinitesimal characters, the u-small
// census, the Certs and Omega sets, Dirac cohomology candidates, spin lowest
// K-types and the Dirac index parity test.

#include "e7dirac/norms.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace e7dirac {

/// The sixteen coordinate sums (0-based zeta-basis indices) that must be
/// positive for the infinitesimal character of a Dirac series member.
/// Unused trailing slots are -1.
inline constexpr std::array<std::array<int, 3>, 16> kHpSums = {{
    {0, 2, -1}, {1, 3, -1}, {2, 3, -1}, {3, 4, -1}, {4, 5, -1}, {5, 6, -1},
    {0, 1, 4}, {0, 1, 5}, {0, 1, 6}, {0, 3, 5}, {0, 3, 6},
    {0, 4, 6}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {2, 4, 6},
}};

/// Nonnegative integer coordinates and all sixteen sums positive.
bool hp_admissible(const InfChar& lambda);

/// For Lambda whose coordinates in kHpSums[sum_index] vanish: true iff for
/// every w in W^1 some varpi coordinate a..f of w Lambda is zero, so that
/// w Lambda can never be {mu - rho_n^(j)} + rho_c. Throws
/// std::invalid_argument if the selected coordinates are not zero or any
/// coordinate is not a nonnegative integer.
bool zero_sum_witness(const InfChar& lambda, std::size_t sum_index = 0);

/// Box enclosing every u-small K-type, from the support function of the hull:
/// <mu, varpi_k> <= max_j <2 rho_n^(j), varpi_k> bounds coordinate k by
/// dividing by <varpi_k, varpi_k>; g is bounded by the extreme zeta pairings.
struct UsmallBox {
  std::array<std::int64_t, 6> cap{};
  std::int64_t g_min = 0;
  std::int64_t g_max = 0;
};
UsmallBox usmall_box();

struct UsmallCensus {
  std::vector<KType> ktypes;  // canonical order
  std::size_t lp_calls = 0;  // integral points that survived the cuts
};

/// All u-small K-types. Candidates inside usmall_box() are pruned by two exact
/// necessary conditions (support functions in the varpi_k directions, and in
/// the (varpi_k, zeta) planes) before the exact LP decides. jobs > 1 splits
/// the g range across threads.
UsmallCensus enumerate_usmall_ktypes(unsigned jobs = 1);

struct CertsEntry {
  KType ktype;
  Rational spin_norm_sq;
  Rational lambda_norm_sq;
  Rational gap;  // spin_norm_sq - lambda_norm_sq
};

inline const Rational kCertsGap{94};

/// Members of the census with spin^2 - lambda^2 >= 94, canonical order.
std::vector<CertsEntry> compute_certs(const std::vector<KType>& usmall, unsigned jobs = 1);

/// Dominant integral Lambda (nonnegative integer zeta coordinates) with
/// lo <= ||Lambda||^2 <= hi, by branch and bound on the positive Gram matrix.
std::vector<InfChar> enumerate_omega(const Rational& lo = Rational(108), const Rational& hi = Rational(469, 2));

/// Every K-type whose atlas height is at most height_cap. Completeness: with
/// witness chamber j, rho^(j) lies in C^(j), so the height is at least
/// 2 <mu + 2 rho_c, rho^(j)> - 2 ||rho||^2; each chamber is scanned over
/// mu + 2 rho_c = sum c_i w^(j) zeta_i with that bound.
std::vector<KType> ktypes_up_to_height(std::int64_t height_cap, unsigned jobs = 1);

inline const Rational kUlargeGapBound{79};

struct UlargeGapScan {
  std::int64_t height_cap = 0;
  std::size_t ktypes = 0;
  std::size_t usmall = 0;
  std::size_t ularge = 0;
  Rational max_gap;             // over the u-large ones
  std::optional<KType> argmax;
  std::vector<KType> violations;  // u-large with spin^2 - lambda^2 > 79
};

/// spin^2 - lambda^2 over the u-large K-types of height <= height_cap.
UlargeGapScan scan_ularge_gap(std::int64_t height_cap = 400, unsigned jobs = 1);

struct DiracCandidate {
  std::array<std::int64_t, 7> gamma;  // varpi coordinates of w Lambda - rho_c
  int chamber = 0;                    // w = w^(chamber)
};

struct DiracCandidateSet {
  InfChar inf_char;  // G-dominant representative
  std::vector<DiracCandidate> gammas;  // sorted by gamma, one witness each
};

/// { w Lambda - rho_c : w in W^1 } intersected with the K-dominant cone.
DiracCandidateSet dirac_candidate_gammas(const InfChar& lambda);

struct SpinLktResult {
  Rational min_spin_sq;
  std::vector<std::size_t> achievers;  // indices into the input
  bool hd_nonzero = false;             // min_spin_sq == ||Lambda||^2
};

/// Throws std::invalid_argument on an empty list.
SpinLktResult spin_lkts(const std::vector<std::pair<KType, std::int64_t>>& ktypes, const InfChar& lambda);

struct DiracIndexParity {
  std::vector<Integer> values;  // B(mu_i - mu, zeta), one per spin LKT
  bool no_cancellation = false;  // all values of one parity
};

/// Throws std::invalid_argument on an empty set and std::domain_error if a
/// pairing is not an integer.
DiracIndexParity dirac_index_parity(const KType& lkt, const std::vector<KType>& spin_lkts);
bool dirac_index_no_cancellation(const KType& lkt, const std::vector<KType>& spin_lkts);
/// Parity test on already computed pairings.
bool same_parity(const std::vector<Integer>& values);

}  // namespace e7dirac
