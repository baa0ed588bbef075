#include "e7dirac/norms.hpp"

#include "e7dirac/linalg.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace e7dirac {

namespace {

using detail::ScaledWeight;

struct Face {
  unsigned mask = 0;
  std::vector<std::size_t> members;
  linalg::Matrix gram_inverse;  // inverse of <zeta_k, zeta_l>, k,l in members
};

// Faces of the standard cone ordered by size; the Gram matrix of
// w zeta_1..w zeta_7 does not depend on w.
const std::vector<Face>& faces() {
  static const std::vector<Face> all = [] {
    const auto& d = root_datum();
    std::vector<Face> out;
    for (unsigned mask = 0; mask < 128; ++mask) {
      Face f;
      f.mask = mask;
      for (std::size_t i = 0; i < 7; ++i)
        if (mask & (1u << i)) f.members.push_back(i);
      linalg::Matrix g(f.members.size(), linalg::Vector(f.members.size()));
      for (std::size_t a = 0; a < f.members.size(); ++a)
        for (std::size_t b = 0; b < f.members.size(); ++b)
          g[a][b] = d.zeta_gram[f.members[a]][f.members[b]];
      auto inv = linalg::inverse(g);
      if (!inv) throw InternalError("singular face Gram matrix");
      f.gram_inverse = std::move(*inv);
      out.push_back(std::move(f));
    }
    std::stable_sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
      return std::popcount(a.mask) < std::popcount(b.mask);
    });
    return out;
  }();
  return all;
}

struct ScaledTables {
  std::vector<ScaledWeight> rho_n;                       // 6 rho_n^(j)
  std::vector<std::array<ScaledWeight, 7>> simple;      // 2 w^(j) alpha_i
  ScaledWeight rho_c{};                                  // 6 rho_c
  ScaledWeight two_rho_c{};                              // 12 rho_c
};

const ScaledTables& scaled_tables() {
  static const ScaledTables t = [] {
    ScaledTables out;
    const auto& d = root_datum();
    for (const auto& c : chambers()) {
      out.rho_n.push_back(detail::to_scaled(c.rho_n_j));
      std::array<ScaledWeight, 7> roots{};
      for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t k = 0; k < 8; ++k) roots[i][k] = to_int64(2 * c.simple_roots[i].coords[k]);
      out.simple.push_back(roots);
    }
    out.rho_c = detail::to_scaled(d.rho_c);
    for (std::size_t k = 0; k < 8; ++k) out.two_rho_c[k] = 2 * out.rho_c[k];
    return out;
  }();
  return t;
}

ScaledWeight scaled(const KType& mu) { return detail::to_scaled(to_ambient(mu)); }

}  // namespace

AmbientVector cone_project(const AmbientVector& eta, const Chamber& chamber) {
  if (!in_span(eta)) throw std::domain_error("cone_project: vector outside the root span");
  const auto& d = root_datum();
  std::array<Rational, 7> b;
  for (std::size_t i = 0; i < 7; ++i) b[i] = inner(eta, chamber.fundamental_weights[i]);

  std::array<Rational, 7> coef;
  Rational acc;
  for (const Face& f : faces()) {
    const std::size_t k = f.members.size();
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a) {
      acc = 0;
      for (std::size_t c = 0; c < k; ++c) acc += f.gram_inverse[a][c] * b[f.members[c]];
      if (acc < 0) ok = false;
      coef[a] = acc;
    }
    if (!ok) continue;
    for (std::size_t i = 0; i < 7 && ok; ++i) {
      if (f.mask & (1u << i)) continue;
      acc = b[i];
      for (std::size_t a = 0; a < k; ++a) acc -= d.zeta_gram[i][f.members[a]] * coef[a];
      if (acc > 0) ok = false;
    }
    if (!ok) continue;
    AmbientVector p;
    for (std::size_t a = 0; a < k; ++a)
      if (coef[a] != 0) p += coef[a] * chamber.fundamental_weights[f.members[a]];
    return p;
  }
  throw InternalError("cone_project: no face satisfies the optimality conditions");
}

std::vector<int> allowable_chambers(const KType& mu) {
  const auto& t = scaled_tables();
  ScaledWeight v = scaled(mu);
  for (std::size_t k = 0; k < 8; ++k) v[k] += t.two_rho_c[k];
  std::vector<int> out;
  for (std::size_t j = 0; j < t.simple.size(); ++j) {
    bool dominant = true;
    for (const auto& r : t.simple[j])
      if (detail::dot(v, r) < 0) {
        dominant = false;
        break;
      }
    if (dominant) out.push_back(static_cast<int>(j));
  }
  return out;
}

LambdaDatum lambda_datum(const KType& mu) {
  const auto& d = root_datum();
  const auto& cs = chambers();
  auto allowable = allowable_chambers(mu);
  if (allowable.empty()) throw InternalError("lambda_datum: no allowable chamber for " + to_string(mu));
  const AmbientVector shifted = to_ambient(mu) + Rational(2) * d.rho_c;
  LambdaDatum out;
  out.witness_chamber = allowable.front();
  const Chamber& w = cs[static_cast<std::size_t>(out.witness_chamber)];
  out.lambda_a = cone_project(shifted - w.rho_j, w);
  for (std::size_t i = 1; i < allowable.size(); ++i) {
    const Chamber& c = cs[static_cast<std::size_t>(allowable[i])];
    if (cone_project(shifted - c.rho_j, c) != out.lambda_a)
      throw InternalError("lambda_a depends on the allowable chamber for " + to_string(mu));
  }
  out.lambda_norm_sq = norm_sq(out.lambda_a);
  return out;
}

SpinDatum spin_datum(const KType& mu) {
  const auto& t = scaled_tables();
  const ScaledWeight m = scaled(mu);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  SpinDatum out;
  std::vector<ScaledWeight> prv;
  for (std::size_t j = 0; j < t.rho_n.size(); ++j) {
    ScaledWeight x;
    for (std::size_t k = 0; k < 8; ++k) x[k] = m[k] - t.rho_n[j][k];
    detail::k_dominate_scaled(x);
    ScaledWeight y;
    for (std::size_t k = 0; k < 8; ++k) y[k] = x[k] + t.rho_c[k];
    const std::int64_t n = detail::dot(y, y);
    if (n < best) {
      best = n;
      out.achieving_chambers.clear();
      prv.clear();
    }
    if (n == best) {
      out.achieving_chambers.push_back(static_cast<int>(j));
      prv.push_back(x);
    }
  }
  out.spin_norm_sq = Rational(Integer(static_cast<long>(best)), Integer(detail::kScale * detail::kScale));
  out.spin_norm_sq.canonicalize();
  for (const auto& x : prv) out.prv_weights.emplace_back(varpi_ints(detail::from_scaled(x)));
  return out;
}

Rational spin_norm_sq(const KType& mu) { return spin_datum(mu).spin_norm_sq; }

lp::IntProblem usmall_program(const KType& mu) {
  static const lp::IntProblem base = [] {
    const auto& d = root_datum();
    const auto& cs = chambers();
    const std::size_t nt = cs.size();
    lp::IntProblem p;
    p.A.assign(8, std::vector<std::int64_t>(nt + 6, 0));
    p.b.assign(8, 0);
    for (std::size_t j = 0; j < nt; ++j) {
      auto v = varpi_ints(cs[j].rho_n_j);
      for (std::size_t r = 0; r < 7; ++r) p.A[r][j] = kHullScale * v[r];
      p.A[7][j] = 1;
    }
    // gamma_i = sum_k <gamma_i, gamma_k> varpi_k, no zeta component.
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t k = 0; k < 6; ++k) p.A[k][nt + i] = -to_int64(d.cartan[i][k]);
    p.b[7] = 1;
    return p;
  }();
  lp::IntProblem p = base;
  for (std::size_t r = 0; r < 7; ++r) p.b[r] = mu.c[r];
  return p;
}

lp::Result usmall_certificate(const KType& mu) { return lp::find_feasible(usmall_program(mu)); }

bool is_usmall(const KType& mu) { return usmall_certificate(mu).feasible; }

const char* to_string(DiracRelation r) {
  switch (r) {
    case DiracRelation::Strict: return "strict";
    case DiracRelation::Equality: return "equality";
    case DiracRelation::Violated: return "violated";
  }
  return "?";
}

DiracRelation dirac_inequality_holds(const InfChar& lambda, const KType& mu) {
  const Rational lhs = norm_sq(to_ambient(lambda));
  const Rational rhs = spin_norm_sq(mu);
  if (lhs < rhs) return DiracRelation::Strict;
  if (lhs == rhs) return DiracRelation::Equality;
  return DiracRelation::Violated;
}

std::int64_t atlas_height(const LambdaDatum& lambda) {
  const Chamber& c = chambers()[static_cast<std::size_t>(lambda.witness_chamber)];
  Rational h = 2 * inner(lambda.lambda_a, c.rho_j);
  if (!is_integer(h)) throw InternalError("atlas height is not an integer");
  return to_int64(h);
}

std::int64_t atlas_height(const KType& mu) { return atlas_height(lambda_datum(mu)); }

}  // namespace e7dirac
