#include "e7dirac/screening.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace e7dirac;

namespace {

using I7 = std::array<std::int64_t, 7>;

InfChar L(I7 v) { return InfChar::from_ints(v); }
KType kt(I7 v) { return KType(v); }

// The Certs list written out family by family.
std::set<KType> certs_oracle() {
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

bool has_gamma(const DiracCandidateSet& s, I7 g) {
  return std::any_of(s.gammas.begin(), s.gammas.end(), [&](const DiracCandidate& c) { return c.gamma == g; });
}

}  // namespace

TEST(HpAdmissible, Examples) {
  EXPECT_TRUE(hp_admissible(L({1, 1, 1, 1, 1, 1, 1})));
  EXPECT_FALSE(hp_admissible(L({0, 1, 0, 1, 1, 1, 1})));
  EXPECT_TRUE(hp_admissible(L({0, 1, 1, 0, 1, 1, 1})));
  EXPECT_FALSE(hp_admissible(L({-1, 1, 1, 1, 1, 1, 1})));
  Coords7 half = L({1, 1, 1, 1, 1, 1, 1}).c;
  half[3] = Rational(1, 2);
  EXPECT_FALSE(hp_admissible(InfChar(half)));
}

TEST(HpAdmissible, EachVanishingSumFails) {
  for (const auto& sum : kHpSums) {
    I7 v{1, 1, 1, 1, 1, 1, 1};
    for (int i : sum)
      if (i >= 0) v[static_cast<std::size_t>(i)] = 0;
    EXPECT_FALSE(hp_admissible(L(v)));
  }
}

TEST(ZeroSumWitness, Witness) {
  EXPECT_TRUE(zero_sum_witness(L({0, 1, 0, 1, 1, 1, 1})));
  EXPECT_TRUE(zero_sum_witness(L({0, 2, 0, 3, 1, 2, 1})));
  EXPECT_THROW(zero_sum_witness(L({1, 1, 1, 1, 1, 1, 1})), std::invalid_argument);
  // another selector: b = d = 0
  EXPECT_TRUE(zero_sum_witness(L({1, 0, 1, 0, 1, 1, 1}), 1));
}

TEST(ZeroSumWitness, AgreesWithBruteForceScan) {
  const auto& d = root_datum();
  for (const I7 v : {I7{0, 1, 0, 1, 1, 1, 1}, I7{0, 3, 0, 1, 2, 0, 4}, I7{0, 0, 0, 2, 1, 1, 1}}) {
    bool every = true;
    for (const auto& c : chambers()) {
      const auto w = from_ambient(Basis::Varpi, apply_word(c.word, to_ambient(L(v))));
      every = every && std::any_of(w.begin(), w.begin() + 6, [](const Rational& x) { return x == 0; });
    }
    EXPECT_EQ(zero_sum_witness(L(v)), every);
  }
  (void)d;
}

TEST(UsmallCensus, CountAndCerts) {
  const auto census = enumerate_usmall_ktypes(2);
  ASSERT_EQ(census.ktypes.size(), 21294u);
  EXPECT_TRUE(std::is_sorted(census.ktypes.begin(), census.ktypes.end()));
  EXPECT_TRUE(std::binary_search(census.ktypes.begin(), census.ktypes.end(), kt({0, 0, 0, 0, 0, 0, 0})));

  const auto box = usmall_box();
  for (const auto& k : census.ktypes) {
    for (std::size_t i = 0; i < 6; ++i) ASSERT_LE(k[i], box.cap[i]);
    ASSERT_GE(k[6], box.g_min);
    ASSERT_LE(k[6], box.g_max);
  }

  const auto certs = compute_certs(census.ktypes, 2);
  std::set<KType> got;
  for (const auto& e : certs) {
    got.insert(e.ktype);
    EXPECT_GE(e.gap, 94);
    EXPECT_GE(e.lambda_norm_sq, 14);
    EXPECT_LE(e.lambda_norm_sq, 49);
  }
  const auto oracle = certs_oracle();
  EXPECT_EQ(oracle.size(), 71u);
  EXPECT_EQ(got, oracle);
  for (const auto& k : got) EXPECT_TRUE(got.count(contragredient(k))) << to_string(k);
  for (const auto& k : oracle)
    EXPECT_TRUE(std::binary_search(census.ktypes.begin(), census.ktypes.end(), k)) << to_string(k);
}

TEST(Omega, CountAndMembers) {
  const auto omega = enumerate_omega();
  EXPECT_EQ(omega.size(), 4676u);
  EXPECT_NE(std::find(omega.begin(), omega.end(), L({1, 1, 1, 1, 1, 1, 1})), omega.end());
  EXPECT_EQ(std::find(omega.begin(), omega.end(), L({0, 0, 0, 0, 0, 0, 0})), omega.end());
  for (const auto& l : omega) {
    const Rational n = norm_sq(to_ambient(l));
    EXPECT_GE(n, 108);
    EXPECT_LE(n, Rational(469, 2));
  }
}

TEST(Norms, SpotValues) {
  EXPECT_EQ(norm_sq(to_ambient(L({1, 0, 1, 1, 0, 1, 0}))), 78);
  EXPECT_EQ(norm_sq(to_ambient(L({1, 1, 1, 0, 1, 1, 1}))), Rational(231, 2));
  EXPECT_EQ(norm_sq(to_ambient(L({1, 1, 1, 0, 1, 0, 1}))), Rational(159, 2));
}

TEST(DiracCandidates, WallachModules) {
  const auto a = dirac_candidate_gammas(L({1, 1, 1, 0, 1, 1, 1}));
  for (const I7 g : {I7{1, 0, 0, 0, 0, 0, 11}, I7{0, 0, 0, 0, 0, 1, -11}, I7{2, 0, 0, 0, 0, 0, 1},
                     I7{0, 0, 0, 0, 0, 2, -1}, I7{0, 0, 0, 0, 1, 0, 5}, I7{0, 0, 1, 0, 0, 0, -5},
                     I7{0, 0, 0, 0, 0, 0, 15}, I7{0, 0, 0, 0, 0, 0, -15}, I7{0, 1, 0, 0, 0, 0, 9},
                     I7{0, 1, 0, 0, 0, 0, -9}, I7{1, 0, 0, 0, 0, 1, 3}, I7{1, 0, 0, 0, 0, 1, -3}})
    EXPECT_TRUE(has_gamma(a, g)) << g[0] << g[1] << g[2] << g[3] << g[4] << g[5] << ' ' << g[6];

  const auto b = dirac_candidate_gammas(L({1, 1, 1, 0, 1, 0, 1}));
  EXPECT_TRUE(has_gamma(b, {0, 0, 0, 0, 0, 0, 3}));
  EXPECT_TRUE(has_gamma(b, {0, 0, 0, 0, 0, 0, -3}));
}

TEST(DiracCandidates, RhoGivesTheFiftySixRhoN) {
  const auto s = dirac_candidate_gammas(L({1, 1, 1, 1, 1, 1, 1}));
  ASSERT_EQ(s.gammas.size(), 56u);
  for (const auto& c : chambers()) EXPECT_TRUE(has_gamma(s, varpi_ints(c.rho_n_j)));
}

TEST(DiracCandidates, ConjugateToLambda) {
  const auto& d = root_datum();
  for (const I7 v : {I7{1, 0, 1, 1, 0, 1, 0}, I7{2, 0, 1, 3, 0, 0, 5}, I7{0, 1, 1, 0, 1, 1, 1}}) {
    const auto s = dirac_candidate_gammas(L(v));
    EXPECT_LE(s.gammas.size(), 56u);
    const AmbientVector dom = dominant_rep(to_ambient(L(v)), Group::G).dominant;
    for (const auto& g : s.gammas) {
      Coords7 c;
      for (std::size_t i = 0; i < 7; ++i) c[i] = Rational(static_cast<long>(g.gamma[i]));
      EXPECT_EQ(dominant_rep(to_ambient(Basis::Varpi, c) + d.rho_c, Group::G).dominant, dom);
    }
  }
}

TEST(SpinLkts, WallachFamily) {
  std::vector<std::pair<KType, std::int64_t>> fam;
  for (std::int64_t n = 0; n <= 20; ++n) fam.push_back({kt({0, 0, 0, 0, 0, n, -12 - 2 * n}), 1});
  const InfChar lam = L({1, 1, 1, 0, 1, 1, 1});
  const auto r = spin_lkts(fam, lam);
  EXPECT_EQ(r.achievers, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
  EXPECT_TRUE(r.hd_nonzero);
  EXPECT_EQ(r.min_spin_sq, Rational(231, 2));
  for (auto i : r.achievers) EXPECT_EQ(dirac_inequality_holds(lam, fam[i].first), DiracRelation::Equality);
}

TEST(SpinLkts, TrivialAndEmpty) {
  const auto r = spin_lkts({{kt({0, 0, 0, 0, 0, 0, 0}), 1}}, L({1, 1, 1, 1, 1, 1, 1}));
  EXPECT_TRUE(r.hd_nonzero);
  EXPECT_THROW(spin_lkts({}, L({1, 1, 1, 1, 1, 1, 1})), std::invalid_argument);
}

TEST(DiracIndex, ParityOfTheThreeSpinLkts) {
  const auto r = dirac_index_parity(kt({0, 0, 0, 0, 0, 0, 3}),
                                    {kt({0, 0, 0, 0, 0, 1, 25}), kt({4, 0, 0, 0, 0, 1, 9}), kt({0, 0, 0, 0, 0, 5, -7})});
  ASSERT_EQ(r.values.size(), 3u);
  EXPECT_EQ(r.values[0], 11);
  EXPECT_EQ(r.values[1], 3);
  // the pairing is linear in g, so the third value is negative
  EXPECT_EQ(r.values[2], -5);
  EXPECT_TRUE(r.no_cancellation);
}

TEST(DiracIndex, SingletonAndMixedParity) {
  EXPECT_TRUE(dirac_index_no_cancellation(kt({0, 0, 0, 0, 0, 0, 3}), {kt({0, 0, 0, 0, 0, 0, 3})}));
  EXPECT_FALSE(same_parity({Integer(1), Integer(2)}));
  EXPECT_THROW(dirac_index_parity(kt({0, 0, 0, 0, 0, 0, 0}), {}), std::invalid_argument);
}

TEST(UlargeGap, SmallHeightCap) {
  const auto r = scan_ularge_gap(150);
  EXPECT_EQ(r.ktypes, r.usmall + r.ularge);
  EXPECT_TRUE(r.violations.empty());
  for (const auto& k : ktypes_up_to_height(150)) EXPECT_LE(atlas_height(k), 150);
}
