#pragma once

// Fixture ingestion for data normally exported from atlas (KGB involutions,
// parameters, K-type branching, the appendix tables, string counts) and the
// counts that are reproduced from it.
//
// Grammar: UTF-8, one record per line, '#' starts a comment, fields are
// separated by '|'.
//   kgb:          id | support ("full", "empty" or comma list of 0..6) | 7 rows of 7 ints, ';'-separated
//   params:       x | lambda (7 ints) | nu (7 rationals) | flags (comma list of unitary, fs; may be empty)
//   branching:    mult | ktype (7 ints, varpi basis) | height
//   table:        table-id (the infinitesimal character, 7 ints) | x | x' or "-" | lambda | nu |
//                 spin LKTs (';'-separated 7-tuples, optional "LKT:" prefix) | clubsuit 0/1
//   dirac_counts: S ("empty" or comma list of 0..6) | N(S)

#include "e7dirac/screening.hpp"

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace e7dirac {

/// Malformed fixture input; the message names the source and line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A fixture file that the caller asked for does not exist.
class MissingFixture : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using IntMatrix7 = std::array<std::array<std::int64_t, 7>, 7>;
using Ints7 = std::array<std::int64_t, 7>;

struct KgbRecord {
  std::int64_t id = 0;
  std::vector<int> support;  // sorted simple-root indices 0..6
  IntMatrix7 theta{};        // (theta v)_r = sum_c theta[r][c] v_c on zeta coordinates

  bool fully_supported() const { return support.size() == 7; }
};

struct AtlasParameter {
  std::int64_t x = 0;
  Ints7 lambda{};
  Coords7 nu{};
  bool unitary = false;
  bool fully_supported = false;
};

struct BranchingEntry {
  std::int64_t multiplicity = 0;
  KType ktype;
  std::int64_t height = 0;
};

struct TableRow {
  InfChar inf_char;
  std::int64_t x = 0;
  std::optional<std::int64_t> x_prime;
  Ints7 lambda{};
  Coords7 nu{};
  std::vector<Ints7> spin_lkts;  // raw tuples; integrality is a verification item
  std::vector<bool> lkt_flags;   // marked "LKT:" in the table
  bool unipotent = false;
  std::size_t line = 0;
};

struct DiracCount {
  std::vector<int> subset;  // sorted, proper subset of 0..6
  std::int64_t count = 0;
};

/// Applies theta to zeta coordinates.
Coords7 apply_theta(const IntMatrix7& theta, const Coords7& v);

/// theta^2 = I and theta^T G theta = G for the Gram matrix G of the zeta basis.
bool is_orthogonal_involution(const IntMatrix7& theta);

std::vector<KgbRecord> parse_kgb(std::istream& in, const std::string& source = "<kgb>");
std::vector<AtlasParameter> parse_params(std::istream& in, const std::string& source = "<params>");
std::vector<BranchingEntry> parse_branching(std::istream& in, const std::string& source = "<branching>");
std::vector<TableRow> parse_table(std::istream& in, const std::string& source = "<table>");
std::vector<DiracCount> parse_dirac_counts(std::istream& in, const std::string& source = "<dirac_counts>");

/// File variants; throw MissingFixture if the file does not exist.
std::vector<KgbRecord> load_kgb(const std::filesystem::path& p);
std::vector<AtlasParameter> load_params(const std::filesystem::path& p);
std::vector<BranchingEntry> load_branching(const std::filesystem::path& p);
std::vector<TableRow> load_table(const std::filesystem::path& p);
std::vector<DiracCount> load_dirac_counts(const std::filesystem::path& p);

/// nu = (Lambda - theta Lambda) / 2 in zeta coordinates.
Coords7 nu_from_involution(const InfChar& lambda, const KgbRecord& x);
/// Squared norm of a zeta-coordinate vector.
Rational norm_sq_nu(const Coords7& nu);

/// (1 + theta) lambda / 2 + nu. Throws std::invalid_argument if p.x != x.id.
InfChar infinitesimal_char(const AtlasParameter& p, const KgbRecord& x);

/// A set of mutually orthogonal positive roots spanning the -1 eigenspace of
/// theta, as simple-root coefficient vectors. Then
/// ||(L - theta L)/2||^2 = sum_i <L, beta_i>^2 / 2.
std::vector<Ints7> minus_eigenspace_frame(const IntMatrix7& theta);

struct PhiResult {
  std::vector<InfChar> phi;                    // canonical order
  std::map<std::int64_t, std::size_t> partition;  // largest coordinate -> count
  std::int64_t max_coordinate = 0;
  std::size_t involutions = 0;                 // distinct fully supported thetas used
};

/// Every hp-admissible Lambda with a zero coordinate and ||nu||^2 < nu_bound
/// for some fully supported involution. Each involution is enumerated by
/// branch and bound with coordinates capped at coord_cap; throws
/// std::runtime_error if an accepted Lambda reaches the cap (the cap was
/// active, so completeness is not established) and std::invalid_argument if
/// no record is fully supported.
PhiResult enumerate_phi(const std::vector<KgbRecord>& kgb, std::int64_t coord_cap = 64,
                        const Rational& nu_bound = Rational(94), unsigned jobs = 1);

struct HjCounts {
  std::size_t total = 0;
  std::size_t fully_supported = 0;
  std::size_t old_bound = 0;  // fully supported with ||nu||^2 <= 399/2
  std::size_t new_bound = 0;  // fully supported with ||nu||^2 < 94
};

/// Full support is read from the KGB record of each parameter when present,
/// otherwise from the parameter's own flag.
HjCounts hj_filter(const std::vector<AtlasParameter>& params, const std::vector<KgbRecord>& kgb);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct TableRowReport {
  std::int64_t x = 0;
  std::vector<Check> checks;
  bool passed() const;
};

/// In-core consistency of one appendix row: K-type integrality, spin norm
/// equal to ||Lambda||^2, a PRV witness conjugate to Lambda, Lambda dominant
/// and hp-admissible, and no repeated spin LKT.
TableRowReport verify_table_row(const TableRow& row);

/// Adds one row per x' entry: same lambda and nu, spin LKTs replaced by
/// their contragredients.
std::vector<TableRow> expand_primed_rows(const std::vector<TableRow>& rows);

struct StringCounts {
  std::map<std::vector<int>, std::int64_t> n_of_s;
  std::array<std::optional<std::int64_t>, 7> n_i;  // empty when a subset of that size is missing
  std::optional<std::int64_t> total;
  std::vector<std::vector<int>> missing;  // proper subsets absent from the fixture
};

/// Aggregates N_i = sum over #S = i of N(S). With allow_partial = false a
/// missing proper subset is an error (std::runtime_error); otherwise the
/// affected N_i and the total are left empty.
StringCounts count_strings(const std::vector<DiracCount>& counts, bool allow_partial = false);

}  // namespace e7dirac
