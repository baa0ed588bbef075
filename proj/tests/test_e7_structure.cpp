#include "e7dirac/e7_structure.hpp"
#include "e7dirac/weyl.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace e7dirac;

namespace {

Coords7 ints(std::array<long, 7> v) {
  Coords7 c;
  for (std::size_t i = 0; i < 7; ++i) c[i] = Rational(v[i]);
  return c;
}

}  // namespace

TEST(RootDatum, RhoMatchesExplicitCoordinates) {
  const auto& d = root_datum();
  EXPECT_EQ(d.rho, make_ambient({0, 2, 4, 6, 8, 10, -17, 17}, 2));
  EXPECT_EQ(d.rho_c, make_ambient({0, 1, 2, 3, 4, -4, -4, 4}));
  EXPECT_EQ(d.zeta, make_ambient({0, 0, 0, 0, 0, 2, -1, 1}, 2));
}

TEST(RootDatum, RootCounts) {
  const auto& d = root_datum();
  EXPECT_EQ(d.positive_roots.size(), 63u);
  EXPECT_EQ(d.compact_positive.size(), 36u);
  EXPECT_EQ(d.pplus_roots.size(), 27u);
  EXPECT_EQ(d.pminus_roots.size(), 27u);
  // dim k = 2*36 + 7, dim p = 54.
  const long dim_k = 2 * 36 + 7, dim_p = 2 * 27;
  EXPECT_EQ(dim_k, 79);
  EXPECT_EQ(-dim_k + dim_p, -25);
}

TEST(RootDatum, BetaIsHighestRootInPplus) {
  const auto& d = root_datum();
  EXPECT_EQ(d.beta, make_ambient({0, 0, 0, 0, 0, 0, -1, 1}));
  const auto& a = d.simple_roots;
  AmbientVector expected = Rational(2) * a[0] + Rational(2) * a[1] + Rational(3) * a[2] +
                           Rational(4) * a[3] + Rational(3) * a[4] + Rational(2) * a[5] + a[6];
  EXPECT_EQ(d.beta, expected);
}

TEST(RootDatum, HalfSumsAndTrichotomy) {
  const auto& d = root_datum();
  AmbientVector all, compact;
  for (const auto& r : d.positive_roots) all += r;
  for (const auto& r : d.compact_positive) compact += r;
  EXPECT_EQ(all, Rational(2) * d.rho);
  EXPECT_EQ(compact, Rational(2) * d.rho_c);
  EXPECT_EQ(d.rho_n, d.rho - d.rho_c);
  for (const auto& r : d.positive_roots) {
    Rational p = inner(r, d.zeta);
    EXPECT_TRUE(p == 0 || p == 1 || p == -1);
  }
  for (const auto& r : d.pplus_roots) EXPECT_GT(inner(r, d.zeta), 0);
  for (const auto& r : d.compact_positive) EXPECT_EQ(inner(r, d.zeta), 0);
}

TEST(Pairing, SpotValues) {
  const auto& d = root_datum();
  EXPECT_EQ(inner(d.rho, d.rho), Rational(399, 2));
  EXPECT_EQ(pair_coroot(d.rho, d.beta), 17);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      EXPECT_EQ(pair_coroot(d.fundamental_weights[i], d.simple_roots[j]), i == j ? 1 : 0);
}

TEST(Pairing, ZeroRootIsAnError) {
  EXPECT_THROW(pair_coroot(root_datum().rho, AmbientVector()), std::invalid_argument);
}

TEST(Pairing, SymmetricAndBilinear) {
  const auto& d = root_datum();
  const auto& u = d.rho;
  const auto& v = d.zeta;
  const auto& w = d.beta;
  EXPECT_EQ(inner(u, v), inner(v, u));
  EXPECT_EQ(inner(Rational(3, 2) * u + w, v), Rational(3, 2) * inner(u, v) + inner(w, v));
}

TEST(BasisConversion, SpotValues) {
  const auto& d = root_datum();
  EXPECT_EQ(to_ambient(Basis::Zeta, ints({1, 1, 1, 1, 1, 1, 1})), d.rho);
  EXPECT_EQ(from_ambient(Basis::Varpi, d.beta), ints({1, 0, 0, 0, 0, 0, 2}));
  EXPECT_EQ(from_ambient(Basis::Varpi, -d.simple_roots[6]), ints({0, 0, 0, 0, 0, 1, -2}));
  EXPECT_EQ(to_ambient(Basis::Varpi, ints({1, 1, 1, 1, 1, 1, 0})), d.rho_c);
}

TEST(BasisConversion, OutsideSpanIsAnError) {
  AmbientVector off = make_ambient({0, 0, 0, 0, 0, 0, 1, 1});
  EXPECT_FALSE(in_span(off));
  EXPECT_THROW(from_ambient(Basis::Zeta, off), std::domain_error);
  EXPECT_THROW(from_ambient(Basis::Varpi, off), std::domain_error);
}

TEST(BasisConversion, RoundTripOnRandomTuples) {
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<long> coord(-40, 40);
  for (int n = 0; n < 1000; ++n) {
    Coords7 c;
    for (auto& x : c) x = Rational(coord(rng));
    for (Basis b : {Basis::Zeta, Basis::Varpi}) {
      AmbientVector v = to_ambient(b, c);
      ASSERT_TRUE(in_span(v));
      ASSERT_EQ(from_ambient(b, v), c);
    }
  }
}

TEST(KTypeIntegrality, Examples) {
  EXPECT_TRUE(is_k_type({0, 0, 0, 0, 0, 0, 0}));
  EXPECT_TRUE(is_k_type({1, 0, 0, 0, 0, 0, 2}));
  EXPECT_FALSE(is_k_type({0, 0, 0, 0, 0, 0, 1}));
  EXPECT_THROW(is_k_type({0, -1, 0, 0, 0, 0, 0}), std::domain_error);
  EXPECT_THROW(KType({0, 0, 0, 0, 0, 0, 1}), std::domain_error);
}

TEST(KTypeIntegrality, MatchesCentralCharacterOfTheRootLattice) {
  // Independent oracle: mu is a weight of K exactly when it pairs integrally
  // with every root of g (compact roots pair integrally automatically).
  const auto& d = root_datum();
  for (std::int64_t g = -6; g <= 6; ++g)
    for (std::int64_t a = 0; a <= 2; ++a)
      for (std::int64_t e = 0; e <= 2; ++e) {
        std::array<std::int64_t, 7> k{a, 0, 0, 0, e, 0, g};
        AmbientVector v = to_ambient(Basis::Varpi, ints({a, 0, 0, 0, e, 0, g}));
        bool integral_on_p = true;
        for (const auto& r : d.pplus_roots) integral_on_p &= is_integer(inner(v, r));
        EXPECT_EQ(is_k_type(k), integral_on_p) << a << " " << e << " " << g;
      }
}

TEST(Contragredient, Examples) {
  EXPECT_EQ(contragredient(KType({1, 0, 0, 0, 0, 0, 2})), KType({0, 0, 0, 0, 0, 1, -2}));
  EXPECT_EQ(contragredient(KType({0, 0, 0, 0, 0, 0, 0})), KType({0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(contragredient(KType({1, 1, 1, 1, 1, 1, 0})), KType({1, 1, 1, 1, 1, 1, 0}));
}

TEST(Contragredient, InvolutiveOnSmallKTypes) {
  std::size_t checked = 0;
  for (std::int64_t a = 0; a <= 5; ++a)
    for (std::int64_t b = 0; b <= 5; ++b)
      for (std::int64_t c = 0; c <= 5; ++c)
        for (std::int64_t d = 0; d <= 5; ++d)
          for (std::int64_t e = 0; e <= 5; ++e)
            for (std::int64_t f = 0; f <= 5; ++f)
              for (std::int64_t g = -5; g <= 5; ++g) {
                std::array<std::int64_t, 7> k{a, b, c, d, e, f, g};
                if (!is_k_type(k)) continue;
                KType t(k);
                ASSERT_EQ(contragredient(contragredient(t)), t);
                ++checked;
              }
  EXPECT_GT(checked, 100000u);
}

TEST(Contragredient, LowestWeightIsTheImageUnderTheLongestCompactElement) {
  // The lowest weight of E_mu is -{-mu}; this pins down the varpi ordering as
  // the one in which a<->f, c<->e is the E6 diagram involution.
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> small(0, 4), central(-9, 9);
  for (int n = 0; n < 200; ++n) {
    std::array<std::int64_t, 7> k{small(rng), small(rng), small(rng), small(rng),
                                  small(rng), small(rng), central(rng)};
    AmbientVector mu = to_ambient(Basis::Varpi, ints({k[0], k[1], k[2], k[3], k[4], k[5], k[6]}));
    AmbientVector lowest = -dominant_rep(-mu, Group::K).dominant;
    KType t;
    t.c = k;  // the formula does not need integrality
    auto lw = lowest_weight(t);
    Coords7 lwc;
    for (std::size_t i = 0; i < 7; ++i) lwc[i] = Rational(static_cast<long>(lw[i]));
    ASSERT_EQ(to_ambient(Basis::Varpi, lwc), lowest);
  }
}
