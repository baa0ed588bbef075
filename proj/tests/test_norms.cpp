#include "e7dirac/norms.hpp"
#include "e7dirac/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace e7dirac;

namespace {

KType kt(std::array<std::int64_t, 7> v) { return KType(v); }

// KKT certificate for the nearest point p of cone(gens) to eta:
// p = sum c_i g_i with c >= 0, (eta - p) pairs <= 0 with every g_i, and
// (eta - p) is orthogonal to p.
bool is_projection(const AmbientVector& eta, const AmbientVector& p, const Chamber& ch) {
  linalg::Matrix m(7, linalg::Vector(7));
  linalg::Vector rhs(7);
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) m[i][j] = inner(ch.fundamental_weights[i], ch.fundamental_weights[j]);
    rhs[i] = inner(ch.fundamental_weights[i], p);
  }
  const auto c = linalg::solve(m, rhs);
  if (!c) return false;
  for (const auto& x : *c)
    if (x < 0) return false;
  const AmbientVector r = eta - p;
  for (const auto& g : ch.fundamental_weights)
    if (inner(r, g) > 0) return false;
  return inner(r, p) == 0;
}

AmbientVector random_span_vector(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 3);
  Coords7 c;
  for (auto& x : c) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return to_ambient(Basis::Zeta, c);
}

KType random_ktype(std::mt19937& rng) {
  std::uniform_int_distribution<std::int64_t> a(0, 6), g(-60, 60);
  for (;;) {
    std::array<std::int64_t, 7> v{};
    for (std::size_t i = 0; i < 6; ++i) v[i] = a(rng);
    v[6] = g(rng);
    if (is_k_type(v)) return KType(v);
  }
}

}  // namespace

TEST(ConeProject, FixesPointsOfTheCone) {
  const auto& ch = chambers()[5];
  AmbientVector eta;
  for (std::size_t i = 0; i < 7; ++i) eta += Rational(static_cast<long>(i + 1), 2) * ch.fundamental_weights[i];
  EXPECT_EQ(cone_project(eta, ch), eta);
}

TEST(ConeProject, PolarConeGoesToZero) {
  const auto& ch = chambers()[0];
  // -rho pairs negatively with every fundamental weight.
  EXPECT_TRUE(cone_project(-root_datum().rho, ch).is_zero());
}

TEST(ConeProject, MatchesKktCertificateOnRandomPoints) {
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto& ch = chambers()[static_cast<std::size_t>(i % 56)];
    const AmbientVector eta = random_span_vector(rng);
    const AmbientVector p = cone_project(eta, ch);
    EXPECT_TRUE(is_projection(eta, p, ch));
    EXPECT_EQ(cone_project(p, ch), p);
  }
}

TEST(ConeProject, IsNonExpansive) {
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto& ch = chambers()[static_cast<std::size_t>((7 * i) % 56)];
    const AmbientVector a = random_span_vector(rng), b = random_span_vector(rng);
    EXPECT_LE(norm_sq(cone_project(a, ch) - cone_project(b, ch)), norm_sq(a - b));
  }
}

TEST(ConeProject, OutsideSpanIsAnError) {
  EXPECT_THROW(cone_project(root_datum().span_complement, chambers()[0]), std::domain_error);
}

TEST(LambdaNorm, TrivialKTypeIsChamberIndependent) {
  const KType zero = kt({0, 0, 0, 0, 0, 0, 0});
  const auto chs = allowable_chambers(zero);
  ASSERT_FALSE(chs.empty());
  const auto ld = lambda_datum(zero);
  const auto& d = root_datum();
  for (int j : chs) {
    const auto& c = chambers()[static_cast<std::size_t>(j)];
    EXPECT_EQ(cone_project(Rational(2) * d.rho_c - c.rho_j, c), ld.lambda_a) << j;
  }
}

TEST(LambdaNorm, BetaAgainstKkt) {
  const KType b = kt({1, 0, 0, 0, 0, 0, 2});
  const auto ld = lambda_datum(b);
  const auto& c = chambers()[static_cast<std::size_t>(ld.witness_chamber)];
  const AmbientVector eta = to_ambient(b) + Rational(2) * root_datum().rho_c - c.rho_j;
  EXPECT_TRUE(is_projection(eta, ld.lambda_a, c));
  EXPECT_EQ(ld.lambda_norm_sq, norm_sq(ld.lambda_a));
}

TEST(LambdaNorm, ChamberIndependenceOnRandomKTypes) {
  std::mt19937 rng(17);
  const auto& d = root_datum();
  for (int i = 0; i < 60; ++i) {
    const KType mu = random_ktype(rng);
    const auto ld = lambda_datum(mu);  // checks every allowable chamber internally
    for (int j : allowable_chambers(mu)) {
      const auto& c = chambers()[static_cast<std::size_t>(j)];
      EXPECT_EQ(cone_project(to_ambient(mu) + Rational(2) * d.rho_c - c.rho_j, c), ld.lambda_a);
    }
  }
}

TEST(SpinNorm, WallachLowestKTypes) {
  EXPECT_EQ(spin_norm_sq(kt({0, 0, 0, 0, 0, 0, -12})), Rational(231, 2));
  EXPECT_EQ(spin_norm_sq(kt({0, 0, 0, 0, 0, 0, -24})), Rational(159, 2));
}

TEST(SpinNorm, TrivialKTypeAttainsRho) {
  const auto sd = spin_datum(kt({0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(sd.spin_norm_sq, Rational(399, 2));
  EXPECT_EQ(sd.achieving_chambers.size(), 56u);
  for (const auto& w : sd.prv_weights)
    EXPECT_EQ(dominant_rep(to_ambient(w) + root_datum().rho_c, Group::G).dominant, root_datum().rho);
}

TEST(SpinNorm, ExhaustiveChamberScan) {
  const auto& d = root_datum();
  for (const KType mu : {kt({1, 0, 0, 0, 0, 0, 2}), kt({0, 2, 0, 0, 0, 0, 0}), kt({3, 1, 0, 0, 0, 1, 16})}) {
    Rational best = -1;
    for (const auto& c : chambers()) {
      const AmbientVector v = dominant_rep(to_ambient(mu) - c.rho_n_j, Group::K).dominant + d.rho_c;
      if (best < 0 || norm_sq(v) < best) best = norm_sq(v);
    }
    EXPECT_EQ(spin_norm_sq(mu), best) << to_string(mu);
  }
}

TEST(Norms, ContragredientInvariance) {
  std::mt19937 rng(23);
  for (int i = 0; i < 40; ++i) {
    const KType mu = random_ktype(rng);
    const KType dual = contragredient(mu);
    EXPECT_EQ(spin_norm_sq(mu), spin_norm_sq(dual)) << to_string(mu);
    EXPECT_EQ(lambda_datum(mu).lambda_norm_sq, lambda_datum(dual).lambda_norm_sq) << to_string(mu);
    EXPECT_EQ(is_usmall(mu), is_usmall(dual)) << to_string(mu);
  }
}

TEST(Usmall, Examples) {
  EXPECT_TRUE(is_usmall(kt({0, 0, 0, 0, 0, 0, 0})));
  EXPECT_TRUE(is_usmall(kt({0, 2, 0, 0, 0, 0, 0})));
  // 2 rho_n^(0) is a vertex of the hull
  EXPECT_TRUE(is_usmall(kt({0, 0, 0, 0, 0, 0, 54})));
  EXPECT_FALSE(is_usmall(kt({0, 0, 0, 0, 0, 0, 57})));
  EXPECT_FALSE(is_usmall(kt({11, 0, 0, 0, 0, 0, 1})));
}

TEST(Usmall, CertificatesVerify) {
  for (const KType mu : {kt({0, 0, 0, 0, 0, 0, 57}), kt({1, 0, 0, 0, 0, 1, 6})}) {
    const auto ip = usmall_program(mu);
    lp::Problem p;
    for (const auto& row : ip.A) {
      p.A.emplace_back();
      for (auto v : row) p.A.back().push_back(Rational(static_cast<long>(v)));
    }
    for (auto v : ip.b) p.b.push_back(Rational(static_cast<long>(v)));
    const auto r = usmall_certificate(mu);
    if (r.feasible) {
      EXPECT_TRUE(lp::check_point(p, r.x));
    } else {
      EXPECT_TRUE(lp::check_certificate(p, r.y));
    }
  }
}

TEST(DiracInequality, Examples) {
  EXPECT_EQ(dirac_inequality_holds(InfChar::from_ints({1, 1, 1, 0, 1, 1, 1}), kt({0, 0, 0, 0, 0, 0, -12})),
            DiracRelation::Equality);
  EXPECT_EQ(dirac_inequality_holds(InfChar::from_ints({1, 0, 1, 1, 0, 1, 0}), kt({0, 0, 0, 0, 0, 0, -24})),
            DiracRelation::Strict);
  EXPECT_EQ(dirac_inequality_holds(InfChar::from_ints({1, 1, 1, 1, 1, 1, 1}), kt({0, 0, 0, 0, 0, 0, 0})),
            DiracRelation::Equality);
  EXPECT_EQ(dirac_inequality_holds(InfChar::from_ints({2, 2, 2, 2, 2, 2, 2}), kt({0, 0, 0, 0, 0, 0, 0})),
            DiracRelation::Violated);
}

TEST(AtlasHeight, MatchesTwiceThePairingWithRhoJ) {
  for (const KType mu : {kt({0, 0, 0, 0, 0, 0, 0}), kt({1, 0, 0, 0, 0, 0, 2}), kt({0, 0, 0, 0, 0, 7, 19})}) {
    const auto ld = lambda_datum(mu);
    const auto& c = chambers()[static_cast<std::size_t>(ld.witness_chamber)];
    Rational sum = 0;
    for (const auto& a : chamber_positive_roots(c)) sum += pair_coroot(ld.lambda_a, a);
    EXPECT_EQ(Rational(static_cast<long>(atlas_height(mu))), sum);
    EXPECT_GE(atlas_height(mu), 0);
  }
}
