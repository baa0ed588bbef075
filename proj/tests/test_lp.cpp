#include "e7dirac/exact_lp.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace e7dirac;
using namespace e7dirac::lp;

namespace {

Problem to_rational(const IntProblem& ip) {
  Problem p;
  for (const auto& row : ip.A) {
    p.A.emplace_back();
    for (auto v : row) p.A.back().push_back(Rational(static_cast<long>(v)));
  }
  for (auto v : ip.b) p.b.push_back(Rational(static_cast<long>(v)));
  return p;
}

void expect_verified(const Problem& p, const Result& r) {
  if (r.feasible) {
    EXPECT_TRUE(check_point(p, r.x));
  } else {
    EXPECT_TRUE(check_certificate(p, r.y));
  }
}

}  // namespace

TEST(ExactLp, SimplexPoint) {
  // x + y + z = 1, x - y = 1/3
  Problem p{{{1, 1, 1}, {1, -1, 0}}, {1, Rational(1, 3)}};
  const auto r = find_feasible(p);
  ASSERT_TRUE(r.feasible);
  expect_verified(p, r);
}

TEST(ExactLp, InfeasibleWithFarkasCertificate) {
  // x + y = 1 and x + y = 2
  Problem p{{{1, 1}, {1, 1}}, {1, 2}};
  const auto r = find_feasible(p);
  ASSERT_FALSE(r.feasible);
  expect_verified(p, r);
}

TEST(ExactLp, NegativeRightHandSide) {
  // x - y = -3 is feasible with y = 3
  Problem p{{{1, -1}}, {-3}};
  const auto r = find_feasible(p);
  ASSERT_TRUE(r.feasible);
  expect_verified(p, r);
  // x + y = -1 is not
  Problem q{{{1, 1}}, {-1}};
  const auto s = find_feasible(q);
  ASSERT_FALSE(s.feasible);
  expect_verified(q, s);
}

TEST(ExactLp, IntegerPathAgreesWithRationalTableau) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<std::int64_t> e(-5, 5), rows(1, 5), cols(1, 8);
  for (int t = 0; t < 300; ++t) {
    IntProblem ip;
    const auto m = rows(rng), n = cols(rng);
    ip.A.assign(static_cast<std::size_t>(m), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
    for (auto& row : ip.A)
      for (auto& v : row) v = e(rng);
    for (std::int64_t i = 0; i < m; ++i) ip.b.push_back(e(rng));
    const Problem p = to_rational(ip);
    const auto a = find_feasible(ip);
    const auto b = find_feasible_rational(p);
    EXPECT_EQ(a.feasible, b.feasible) << "trial " << t;
    EXPECT_EQ(a.pivots, b.pivots) << "trial " << t;
    expect_verified(p, a);
  }
}

TEST(ExactLp, LargeEntriesFallBackExactly) {
  const std::int64_t big = std::int64_t{1} << 61;
  IntProblem ip{{{big, big - 1, 3}, {big - 7, big, 1}}, {big, big - 3}};
  const Problem p = to_rational(ip);
  const auto r = find_feasible(ip);
  EXPECT_EQ(r.feasible, find_feasible_rational(p).feasible);
  expect_verified(p, r);
}

TEST(ExactLp, EmptyConstraintSetIsFeasible) {
  Problem p{{}, {}};
  EXPECT_TRUE(find_feasible(p).feasible);
}
