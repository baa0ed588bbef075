#include "e7dirac/acceptance.hpp"

#include "e7dirac/atlas_ingest.hpp"
#include "e7dirac/norms.hpp"
#include "e7dirac/screening.hpp"
#include "e7dirac/weyl.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace e7dirac {

namespace {

using I7 = std::array<std::int64_t, 7>;

class Outcome {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool passed() const { return failures_.empty(); }
  std::string detail() const {
    std::ostringstream os;
    const auto& v = failures_.empty() ? notes_ : failures_;
    for (std::size_t i = 0; i < v.size() && i < 6; ++i) os << (i ? "; " : "") << v[i];
    if (v.size() > 6) os << "; +" << v.size() - 6 << " more";
    return os.str();
  }

 private:
  std::vector<std::string> failures_, notes_;
};

std::string str(std::size_t n) { return std::to_string(n); }

template <class T>
std::string mismatch(const std::string& what, const T& got, const T& want) {
  std::ostringstream os;
  os << what << ": got " << got << ", expected " << want;
  return os.str();
}

std::string s7(const I7& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < 7; ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::set<KType> certs_list() {
  std::set<KType> s;
  auto add = [&](I7 v) { s.insert(KType(v)); };
  add({0, 0, 0, 0, 0, 0, 0});
  add({0, 2, 0, 0, 0, 0, 0});
  for (int m = -3; m <= 3; ++m) add({0, 1, 0, 0, 0, 0, 3 * m});
  for (int m = -1; m <= 1; ++m) add({0, 0, 0, 1, 0, 0, 3 * m});
  for (int m = -2; m <= 2; ++m) add({1, 0, 0, 0, 0, 1, 3 * m});
  for (int m = 1; m <= 4; ++m) {
    add({0, 0, 0, 0, 0, 0, 3 * m});
    add({0, 0, 0, 0, 0, 0, -3 * m});
  }
  for (int m = 2; m <= 3; ++m) {
    add({0, 0, 0, 0, 0, 3, 3 * m});
    add({3, 0, 0, 0, 0, 0, -3 * m});
  }
  for (int m = -4; m <= 2; ++m) {
    add({0, 0, 0, 0, 0, 1, 3 * m + 1});
    add({1, 0, 0, 0, 0, 0, -3 * m - 1});
  }
  for (int m = -2; m <= 3; ++m) {
    add({0, 0, 0, 0, 0, 2, 3 * m - 1});
    add({2, 0, 0, 0, 0, 0, -3 * m + 1});
  }
  for (int m = -2; m <= 2; ++m) {
    add({0, 0, 0, 0, 1, 0, 3 * m - 1});
    add({0, 0, 1, 0, 0, 0, -3 * m + 1});
  }
  for (int m = -1; m <= 1; ++m) {
    add({0, 1, 0, 0, 0, 1, 3 * m + 1});
    add({1, 1, 0, 0, 0, 0, -3 * m - 1});
  }
  return s;
}

const std::set<I7>& phi1_list() {
  static const std::set<I7> s{
      {0, 0, 1, 1, 1, 1, 1}, {0, 1, 1, 0, 1, 1, 1}, {0, 1, 1, 1, 0, 1, 1}, {0, 1, 1, 1, 1, 0, 1}, {0, 1, 1, 1, 1, 1, 0},
      {0, 1, 1, 1, 1, 1, 1}, {1, 0, 0, 1, 1, 1, 1}, {1, 0, 1, 1, 0, 1, 0}, {1, 0, 1, 1, 0, 1, 1}, {1, 0, 1, 1, 1, 0, 1},
      {1, 0, 1, 1, 1, 1, 0}, {1, 0, 1, 1, 1, 1, 1}, {1, 1, 0, 1, 0, 1, 1}, {1, 1, 0, 1, 1, 0, 1}, {1, 1, 0, 1, 1, 1, 0},
      {1, 1, 0, 1, 1, 1, 1}, {1, 1, 1, 0, 1, 0, 1}, {1, 1, 1, 0, 1, 1, 0}, {1, 1, 1, 0, 1, 1, 1}, {1, 1, 1, 1, 0, 1, 0},
      {1, 1, 1, 1, 0, 1, 1}, {1, 1, 1, 1, 1, 0, 1}, {1, 1, 1, 1, 1, 1, 0}};
  return s;
}

const std::map<std::int64_t, std::size_t>& phi_partition() {
  static const std::map<std::int64_t, std::size_t> m{{1, 23},    {2, 921},   {3, 7817},  {4, 27246}, {5, 42088},
                                                     {6, 39685}, {7, 28107}, {8, 17649}, {9, 9042},  {10, 4022},
                                                     {11, 1359}, {12, 220},  {13, 13}};
  return m;
}

const UsmallCensus& census(unsigned jobs) {
  static std::once_flag once;
  static UsmallCensus c;
  std::call_once(once, [&] { c = enumerate_usmall_ktypes(jobs); });
  return c;
}

bool has_gamma(const DiracCandidateSet& s, const I7& g) {
  return std::any_of(s.gammas.begin(), s.gammas.end(), [&](const DiracCandidate& c) { return c.gamma == g; });
}

// Loads a fixture or records why it could not.
template <class F>
auto try_load(Outcome& out, const std::string& name, F f) -> std::optional<decltype(f())> {
  try {
    return f();
  } catch (const MissingFixture&) {
    out.expect(false, "fixture missing: " + name);
  } catch (const std::exception& e) {
    out.expect(false, name + ": " + e.what());
  }
  return std::nullopt;
}

Outcome c1(const AcceptanceOptions&) {
  Outcome o;
  const auto& cs = chambers();
  const auto& d = root_datum();
  o.expect(cs.size() == 56, mismatch("chambers", cs.size(), std::size_t{56}));
  o.expect(d.rho == make_ambient({0, 2, 4, 6, 8, 10, -17, 17}, 2), "rho is " + to_string(d.rho));
  o.expect(!cs.empty() && cs[0].rho_j == d.rho, "rho^(0) differs from rho");
  std::set<AmbientVector> distinct;
  for (const auto& c : cs) {
    o.expect(is_dominant(c.rho_n_j, Group::K), "rho_n^(" + std::to_string(c.index) + ") not K-dominant");
    for (const auto& g : d.compact_positive)
      o.expect(inner(g, c.rho_j) > 0, "chamber " + std::to_string(c.index) + " misses a compact positive root");
    distinct.insert(c.rho_j);
  }
  o.expect(distinct.size() == 56, "rho^(j) not distinct");
  o.note("56 chambers, rho^(0) = " + to_string(d.rho));
  return o;
}

Outcome c2(const AcceptanceOptions&) {
  Outcome o;
  Integer total = 0;
  for (const auto& x : spin_module_summands()) total += x;
  o.expect(total == Integer(134217728), "sum of dimensions is " + total.get_str());
  o.expect(spin_module_dimension_check(), "spin_module_dimension_check failed");
  o.note("sum = " + total.get_str());
  return o;
}

Outcome c3(const AcceptanceOptions& opt) {
  Outcome o;
  const auto& c = census(opt.jobs);
  o.expect(c.ktypes.size() == 21294, mismatch("u-small K-types", c.ktypes.size(), std::size_t{21294}));
  o.note(str(c.ktypes.size()) + " u-small K-types, " + str(c.lp_calls) + " LP calls");
  return o;
}

Outcome c4(const AcceptanceOptions& opt) {
  Outcome o;
  const auto certs = compute_certs(census(opt.jobs).ktypes, opt.jobs);
  std::set<KType> got;
  for (const auto& e : certs) {
    got.insert(e.ktype);
    o.expect(e.gap >= kCertsGap, to_string(e.ktype) + " gap " + to_string(e.gap));
    o.expect(e.lambda_norm_sq >= 14 && e.lambda_norm_sq <= 49,
             to_string(e.ktype) + " lambda^2 " + to_string(e.lambda_norm_sq));
  }
  const auto want = certs_list();
  o.expect(got.size() == 71, mismatch("Certs size", got.size(), std::size_t{71}));
  for (const auto& k : want)
    if (!got.count(k)) o.expect(false, "missing " + to_string(k));
  for (const auto& k : got)
    if (!want.count(k)) o.expect(false, "extra " + to_string(k));
  o.note(str(got.size()) + " entries, set equal to the list");
  return o;
}

Outcome c5(const AcceptanceOptions&) {
  Outcome o;
  const auto omega = enumerate_omega();
  o.expect(omega.size() == 4676, mismatch("|Omega|", omega.size(), std::size_t{4676}));
  o.note("|Omega| = " + str(omega.size()));
  return o;
}

Outcome c6(const AcceptanceOptions&) {
  Outcome o;
  const auto& d = root_datum();
  auto eq = [&](const Rational& got, const Rational& want, const std::string& what) {
    o.expect(got == want, what + " = " + to_string(got) + ", expected " + to_string(want));
  };
  eq(norm_sq(d.rho), Rational(399, 2), "||rho||^2");
  eq(pair_coroot(d.rho, d.beta), Rational(17), "(rho, beta^v)");
  eq(spin_norm_sq(KType({0, 0, 0, 0, 0, 0, -12})), Rational(231, 2), "spin^2 [0,0,0,0,0,0,-12]");
  eq(spin_norm_sq(KType({0, 0, 0, 0, 0, 0, -24})), Rational(159, 2), "spin^2 [0,0,0,0,0,0,-24]");
  eq(norm_sq(to_ambient(InfChar::from_ints({1, 0, 1, 1, 0, 1, 0}))), Rational(78), "||[1,0,1,1,0,1,0]||^2");
  o.note("five values exact");
  return o;
}

Outcome c7(const AcceptanceOptions&) {
  Outcome o;
  const auto a = dirac_candidate_gammas(InfChar::from_ints({1, 1, 1, 0, 1, 1, 1}));
  const std::vector<I7> twelve{{1, 0, 0, 0, 0, 0, 11}, {0, 0, 0, 0, 0, 1, -11}, {2, 0, 0, 0, 0, 0, 1},
                               {0, 0, 0, 0, 0, 2, -1}, {0, 0, 0, 0, 1, 0, 5},   {0, 0, 1, 0, 0, 0, -5},
                               {0, 0, 0, 0, 0, 0, 15}, {0, 0, 0, 0, 0, 0, -15}, {0, 1, 0, 0, 0, 0, 9},
                               {0, 1, 0, 0, 0, 0, -9}, {1, 0, 0, 0, 0, 1, 3},   {1, 0, 0, 0, 0, 1, -3}};
  std::size_t hit = 0;
  for (const auto& g : twelve) {
    const bool h = has_gamma(a, g);
    hit += h;
    o.expect(h, "L(-4 zeta) candidate " + s7(g) + " missing");
  }
  const auto b = dirac_candidate_gammas(InfChar::from_ints({1, 1, 1, 0, 1, 0, 1}));
  o.expect(has_gamma(b, {0, 0, 0, 0, 0, 0, 3}), "zeta not a candidate for L(-8 zeta)");
  o.expect(has_gamma(b, {0, 0, 0, 0, 0, 0, -3}), "-zeta not a candidate for L(-8 zeta)");
  o.expect(b.gammas.size() == 2, str(b.gammas.size()) + " K-dominant candidates for L(-8 zeta), expected 2");

  std::vector<std::pair<KType, std::int64_t>> fam;
  for (std::int64_t n = 0; n <= 20; ++n) fam.push_back({KType({0, 0, 0, 0, 0, n, -12 - 2 * n}), 1});
  const auto r = spin_lkts(fam, InfChar::from_ints({1, 1, 1, 0, 1, 1, 1}));
  o.expect(r.achievers == std::vector<std::size_t>{0, 1, 2, 3, 4, 5}, "spin LKT achievers are not n = 0..5");
  o.expect(r.hd_nonzero, "Dirac cohomology of L(-4 zeta) vanishes");
  o.note(str(hit) + "/12 weights, +-zeta present, achievers n = 0..5");
  return o;
}

Outcome c8(const AcceptanceOptions&) {
  Outcome o;
  const auto r = dirac_index_parity(KType({0, 0, 0, 0, 0, 0, 3}), {KType({0, 0, 0, 0, 0, 1, 25}),
                                                                    KType({4, 0, 0, 0, 0, 1, 9}),
                                                                    KType({0, 0, 0, 0, 0, 5, -7})});
  const std::vector<Integer> want{Integer(11), Integer(3), Integer(5)};
  std::string got;
  for (const auto& v : r.values) got += (got.empty() ? "" : ",") + v.get_str();
  o.expect(r.values == want, "values (" + got + "), expected (11,3,5)");
  o.expect(r.no_cancellation, "parities differ");
  o.note("values (" + got + ")");
  return o;
}

Outcome c9(const AcceptanceOptions& opt) {
  Outcome o;
  const auto kgb = try_load(o, "kgb_fs_involutions.txt",
                            [&] { return load_kgb(opt.fixture_dir / "kgb_fs_involutions.txt"); });
  if (!kgb) return o;
  PhiResult phi;
  try {
    phi = enumerate_phi(*kgb, opt.coord_cap, Rational(94), opt.jobs);
  } catch (const std::exception& e) {
    o.expect(false, std::string("enumerate_phi: ") + e.what());
    return o;
  }
  o.expect(phi.phi.size() == 178192, mismatch("|Phi|", phi.phi.size(), std::size_t{178192}));
  for (const auto& [k, n] : phi_partition()) {
    const auto it = phi.partition.find(k);
    const std::size_t got = it == phi.partition.end() ? 0 : it->second;
    o.expect(got == n, mismatch("|Phi" + std::to_string(k) + "|", got, n));
  }
  o.expect(phi.max_coordinate == 13, mismatch("largest coordinate", phi.max_coordinate, std::int64_t{13}));
  std::set<I7> got1;
  for (const auto& l : phi.phi) {
    I7 v{};
    for (std::size_t i = 0; i < 7; ++i) v[i] = to_int64(l.c[i]);
    if (*std::max_element(v.begin(), v.end()) == 1) got1.insert(v);
  }
  o.expect(got1 == phi1_list(), "Phi1 differs from the 23-element list");
  o.note("|Phi| = " + str(phi.phi.size()) + " from " + str(phi.involutions) + " involutions");
  return o;
}

Outcome c10(const AcceptanceOptions& opt) {
  Outcome o;
  const auto& dir = opt.fixture_dir;
  std::vector<std::string> parts;

  // two parameters at [1,0,1,1,1,0,8]
  {
    const auto params = try_load(o, "params_1011108.txt", [&] { return load_params(dir / "params_1011108.txt"); });
    const auto kgb = try_load(o, "kgb_1011108.txt", [&] { return load_kgb(dir / "kgb_1011108.txt"); });
    if (params && kgb) {
      const auto c = hj_filter(*params, *kgb);
      const bool ok = c.total == 525 && c.fully_supported == 246 && c.old_bound == 218 && c.new_bound == 29;
      std::ostringstream os;
      os << "(" << c.total << "," << c.fully_supported << "," << c.old_bound << "," << c.new_bound << ")";
      o.expect(ok, "hj counts " + os.str() + ", expected (525,246,218,29)");
      parts.push_back("hj " + os.str());
    }
  }
  // branching of the representation at [1,0,1,1,0,1,0]
  {
    const auto br =
        try_load(o, "branching_1011010.txt", [&] { return load_branching(dir / "branching_1011010.txt"); });
    if (br) {
      o.expect(br->size() == 157, mismatch("K-types up to height 248", br->size(), std::size_t{157}));
      std::vector<std::pair<KType, std::int64_t>> ks;
      for (const auto& e : *br) {
        o.expect(e.height <= 248 && e.height == atlas_height(e.ktype), "height of " + to_string(e.ktype));
        ks.push_back({e.ktype, e.multiplicity});
      }
      if (!ks.empty()) {
        const auto r = spin_lkts(ks, InfChar::from_ints({1, 0, 1, 1, 0, 1, 0}));
        o.expect(r.min_spin_sq == Rational(159, 2), "min spin^2 " + to_string(r.min_spin_sq));
        o.expect(!r.hd_nonzero, "Dirac cohomology should vanish");
        parts.push_back("min spin^2 " + to_string(r.min_spin_sq));
      }
    }
  }
  // trivial and minimal representations
  {
    const auto params = try_load(o, "params_rho_minimal.txt", [&] { return load_params(dir / "params_rho_minimal.txt"); });
    const auto kgb = try_load(o, "kgb_named.txt", [&] { return load_kgb(dir / "kgb_named.txt"); });
    if (params && kgb) {
      std::map<std::int64_t, Rational> want{{3016, Rational(371, 2)}, {2989, Rational(97)}, {2988, Rational(97)}};
      std::size_t minimal = 0;
      for (const auto& p : *params) {
        const auto it = std::find_if(kgb->begin(), kgb->end(), [&](const KgbRecord& r) { return r.id == p.x; });
        if (it == kgb->end() || !want.count(p.x)) {
          o.expect(false, "no KGB record for x = " + std::to_string(p.x));
          continue;
        }
        const InfChar lam = infinitesimal_char(p, *it);
        o.expect(norm_sq_nu(p.nu) == want[p.x], "x = " + std::to_string(p.x) + " ||nu||^2 " + to_string(norm_sq_nu(p.nu)));
        o.expect(nu_from_involution(lam, *it) == p.nu, "x = " + std::to_string(p.x) + " nu not reproduced");
        if (lam == InfChar::from_ints({1, 1, 1, 0, 1, 1, 1}) && p.unitary) ++minimal;
      }
      o.expect(minimal == 2, mismatch("unitary parameters at [1,1,1,0,1,1,1]", minimal, std::size_t{2}));
      o.expect(pair_coroot(root_datum().rho, root_datum().beta) == 17, "GK pairing");
      parts.push_back("nu^2 371/2, 97, 97");
    }
  }
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : "; ") + p;
  o.note(s);
  return o;
}

Outcome c11(const AcceptanceOptions& opt) {
  Outcome o;
  const auto rows = try_load(o, "tables.txt", [&] { return load_table(opt.fixture_dir / "tables.txt"); });
  if (!rows) return o;
  const auto all = expand_primed_rows(*rows);
  o.expect(all.size() == 73, mismatch("rows", all.size(), std::size_t{73}));
  std::set<std::int64_t> ids;
  std::size_t lkts = 0;
  for (const auto& r : all) {
    ids.insert(r.x);
    const auto rep = verify_table_row(r);
    for (const auto& c : rep.checks)
      o.expect(c.passed, "x = " + std::to_string(r.x) + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
    const Rational target = norm_sq(to_ambient(r.inf_char));
    for (const auto& k : r.spin_lkts) {
      ++lkts;
      if (is_k_type(k)) o.expect(spin_norm_sq(KType(k)) == target, "x = " + std::to_string(r.x) + " " + s7(k));
    }
  }
  o.expect(ids.size() == all.size(), "repeated x");
  o.note(str(all.size()) + " rows, " + str(lkts) + " spin LKTs");
  return o;
}

Outcome c12(const AcceptanceOptions& opt) {
  Outcome o;
  const auto counts =
      try_load(o, "dirac_counts.txt", [&] { return load_dirac_counts(opt.fixture_dir / "dirac_counts.txt"); });
  if (!counts) return o;
  const auto s = count_strings(*counts, true);
  const std::array<std::int64_t, 7> want{56, 84, 102, 133, 164, 181, 158};
  std::string got;
  for (std::size_t i = 0; i < 7; ++i) {
    got += (i ? "," : "") + (s.n_i[i] ? std::to_string(*s.n_i[i]) : std::string("?"));
    o.expect(s.n_i[i] == want[i], "N_" + std::to_string(i) + " = " +
                                      (s.n_i[i] ? std::to_string(*s.n_i[i]) : "unknown") + ", expected " +
                                      std::to_string(want[i]));
  }
  o.expect(s.total == 878, "total " + (s.total ? std::to_string(*s.total) : std::string("unknown")) + ", expected 878");
  if (!s.missing.empty()) o.expect(false, str(s.missing.size()) + " subsets missing from the fixture");
  o.note("N = (" + got + "), total " + std::to_string(s.total.value_or(-1)));
  return o;
}

Outcome c13(const AcceptanceOptions& opt) {
  Outcome o;
  const auto& d = root_datum();
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<std::int64_t> a(0, 6), g(-60, 60);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 6);

  std::size_t checked = 0;
  while (checked < opt.random_ktypes) {
    I7 v{};
    for (std::size_t i = 0; i < 6; ++i) v[i] = a(rng);
    v[6] = g(rng);
    if (!is_k_type(v)) continue;
    ++checked;
    const KType mu(v);
    const std::string name = to_string(mu);
    const auto ld = lambda_datum(mu);
    for (int j : allowable_chambers(mu)) {
      const auto& c = chambers()[static_cast<std::size_t>(j)];
      const AmbientVector p = cone_project(to_ambient(mu) + Rational(2) * d.rho_c - c.rho_j, c);
      o.expect(p == ld.lambda_a, name + ": lambda_a depends on chamber " + std::to_string(j));
      o.expect(cone_project(p, c) == p, name + ": projection not idempotent");
    }
    const KType dual = contragredient(mu);
    o.expect(contragredient(dual) == mu, name + ": contragredient not an involution");
    o.expect(lambda_datum(dual).lambda_norm_sq == ld.lambda_norm_sq, name + ": lambda norm of dual");
    o.expect(spin_norm_sq(dual) == spin_norm_sq(mu), name + ": spin norm of dual");
    o.expect(is_usmall(dual) == is_usmall(mu), name + ": u-small of dual");
    o.expect(from_ambient(Basis::Varpi, to_ambient(mu)) == mu.to_coords(), name + ": varpi round trip");

    Coords7 r;
    for (auto& x : r) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
    }
    for (Basis b : {Basis::Zeta, Basis::Varpi})
      o.expect(from_ambient(b, to_ambient(b, r)) == r, "round trip of " + to_string(r));
  }

  std::size_t thetas = 0;
  for (const char* f : {"kgb_fs_involutions.txt", "kgb_named.txt"}) {
    const auto kgb = try_load(o, f, [&] { return load_kgb(opt.fixture_dir / f); });
    if (!kgb) continue;
    for (const auto& x : *kgb) {
      ++thetas;
      IntMatrix7 sq{};
      for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j)
          for (std::size_t k = 0; k < 7; ++k) sq[i][j] += x.theta[i][k] * x.theta[k][j];
      IntMatrix7 id{};
      for (std::size_t i = 0; i < 7; ++i) id[i][i] = 1;
      o.expect(sq == id, "theta^2 != 1 for x = " + std::to_string(x.id));
      o.expect(is_orthogonal_involution(x.theta), "theta not orthogonal for x = " + std::to_string(x.id));
    }
  }

  const auto scan = scan_ularge_gap(opt.height_cap, opt.jobs);
  o.expect(scan.violations.empty(), str(scan.violations.size()) + " u-large K-types with gap > 79");
  o.expect(scan.max_gap <= kUlargeGapBound, "max u-large gap " + to_string(scan.max_gap));
  o.note(str(checked) + " random K-types, " + str(thetas) + " involutions, " + str(scan.ularge) +
         " u-large K-types to height " + std::to_string(scan.height_cap) + ", max gap " + to_string(scan.max_gap));
  return o;
}

struct Entry {
  const char* title;
  Outcome (*run)(const AcceptanceOptions&);
};

const std::array<Entry, 13> kCriteria{{
    {"chamber census", c1},
    {"spin module dimension", c2},
    {"u-small census", c3},
    {"Certs list", c4},
    {"Omega census", c5},
    {"norm spot checks", c6},
    {"Wallach Dirac cohomology", c7},
    {"Dirac index parity", c8},
    {"Phi census", c9},
    {"worked examples from fixtures", c10},
    {"appendix table verification", c11},
    {"string counts", c12},
    {"property suite", c13},
}};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
  if (id < 1 || id > 13) throw std::out_of_range("criterion id " + std::to_string(id));
  const auto& e = kCriteria[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.title = e.title;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Outcome o = e.run(opt);
    r.passed = o.passed();
    r.detail = o.detail();
  } catch (const std::exception& ex) {
    r.passed = false;
    r.detail = std::string("exception: ") + ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 13; ++id) {
    out.push_back(run_criterion(id, opt));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "criterion %2d %s  %-30s (%.1f s)", r.id, r.passed ? "PASS" : "FAIL",
                r.title.c_str(), r.seconds);
  return std::string(head) + "  " + r.detail;
}

}  // namespace e7dirac
