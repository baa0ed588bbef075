#include "e7dirac/exact_lp.hpp"

#include <limits>
#include <optional>
#include <stdexcept>

namespace e7dirac::lp {

bool check_point(const Problem& p, const std::vector<Rational>& x) {
  for (const auto& v : x)
    if (v < 0) return false;
  for (std::size_t i = 0; i < p.A.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += p.A[i][j] * x[j];
    if (s != p.b[i]) return false;
  }
  return true;
}

bool check_certificate(const Problem& p, const std::vector<Rational>& y) {
  const std::size_t m = p.A.size();
  const std::size_t n = m ? p.A[0].size() : 0;
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += p.A[i][j] * y[i];
    if (s < 0) return false;
  }
  Rational s = 0;
  for (std::size_t i = 0; i < m; ++i) s += p.b[i] * y[i];
  return s < 0;
}

namespace {

__extension__ typedef __int128 i128;

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::optional<IntProblem> as_integer(const Problem& p) {
  IntProblem out;
  out.A.resize(p.A.size());
  for (std::size_t i = 0; i < p.A.size(); ++i)
    for (const auto& v : p.A[i]) {
      if (v.get_den() != 1 || !v.get_num().fits_slong_p()) return std::nullopt;
      out.A[i].push_back(v.get_num().get_si());
    }
  for (const auto& v : p.b) {
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) return std::nullopt;
    out.b.push_back(v.get_num().get_si());
  }
  return out;
}

// Fraction-free phase I (integer pivoting): the tableau holds numerators over a
// common denominator D, the determinant of the current basis. Follows exactly
// the same Bland pivots as the rational version. Returns nullopt on overflow.
std::optional<Result> find_feasible_integer(const IntProblem& p) {
  const std::size_t m = p.A.size();
  const std::size_t n = m ? p.A[0].size() : 0;
  const std::size_t width = n + m + 1;
  const std::size_t rhs = n + m;

  std::vector<int> sign(m, 1);
  // Row m is the phase-I cost row.
  std::vector<std::vector<std::int64_t>> t(m + 1, std::vector<std::int64_t>(width, 0));
  for (std::size_t i = 0; i < m; ++i) {
    if (p.A[i].size() != n) throw std::invalid_argument("lp: ragged constraint matrix");
    sign[i] = p.b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = sign[i] * p.A[i][j];
    t[i][n + i] = 1;
    t[i][rhs] = sign[i] * p.b[i];
  }
  for (std::size_t j = 0; j < width; ++j) {
    if (j >= n && j < rhs) continue;
    i128 s = 0;
    for (std::size_t i = 0; i < m; ++i) s -= t[i][j];
    if (!fits64(s)) return std::nullopt;
    t[m][j] = static_cast<std::int64_t>(s);
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  std::int64_t den = 1;

  Result result;
  auto& cost = t[m];
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      if (leave == m) {
        leave = i;
        continue;
      }
      // t[i][rhs]/t[i][enter] vs t[leave][rhs]/t[leave][enter]
      const i128 lhs = static_cast<i128>(t[i][rhs]) * t[leave][enter];
      const i128 cur = static_cast<i128>(t[leave][rhs]) * t[i][enter];
      if (lhs < cur || (lhs == cur && basis[i] < basis[leave])) leave = i;
    }
    if (leave == m) throw InternalError("lp: phase I objective unbounded");

    const auto& prow = t[leave];
    const std::int64_t piv = prow[enter];
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      auto& row = t[i];
      const std::int64_t f = row[enter];
      for (std::size_t j = 0; j < width; ++j) {
        i128 a = static_cast<i128>(row[j]) * piv;
        const i128 b = static_cast<i128>(f) * prow[j];
        if (__builtin_sub_overflow(a, b, &a)) return std::nullopt;
        if (a % den != 0) throw InternalError("lp: integer pivot lost exactness");
        a /= den;
        if (!fits64(a)) return std::nullopt;
        row[j] = static_cast<std::int64_t>(a);
      }
    }
    den = piv;
    basis[leave] = enter;
    ++result.pivots;
  }

  const Integer d(static_cast<long>(den));
  auto q = [&](std::int64_t v) {
    Rational r(Integer(static_cast<long>(v)), d);
    r.canonicalize();
    return r;
  };
  // Verify on numerators: A x = b den with x >= 0, or A^T y >= 0 and b.y < 0.
  if (cost[rhs] == 0) {
    std::vector<std::int64_t> x(n, 0);
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) x[basis[i]] = t[i][rhs];
    for (std::size_t i = 0; i < m; ++i) {
      i128 s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (x[j] < 0) throw InternalError("lp: feasible point fails verification");
        else s += static_cast<i128>(p.A[i][j]) * x[j];
      if (s != static_cast<i128>(p.b[i]) * den) throw InternalError("lp: feasible point fails verification");
    }
    result.feasible = true;
    result.x.reserve(n);
    for (auto v : x) result.x.push_back(q(v));
  } else {
    std::vector<std::int64_t> y(m, 0);
    for (std::size_t k = 0; k < m; ++k) {
      i128 pi = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) pi += t[i][n + k];
      if (!fits64(pi)) return std::nullopt;
      y[k] = sign[k] == 1 ? -static_cast<std::int64_t>(pi) : static_cast<std::int64_t>(pi);
    }
    for (std::size_t j = 0; j < n; ++j) {
      i128 s = 0;
      for (std::size_t i = 0; i < m; ++i) s += static_cast<i128>(p.A[i][j]) * y[i];
      if (s < 0) throw InternalError("lp: Farkas certificate fails verification");
    }
    i128 s = 0;
    for (std::size_t i = 0; i < m; ++i) s += static_cast<i128>(p.b[i]) * y[i];
    if (s >= 0) throw InternalError("lp: Farkas certificate fails verification");
    result.y.reserve(m);
    for (auto v : y) result.y.push_back(q(v));
  }
  return result;
}

}  // namespace

Result find_feasible(const Problem& p) {
  if (p.b.size() != p.A.size()) throw std::invalid_argument("lp: row count mismatch");
  if (auto ip = as_integer(p))
    if (auto r = find_feasible_integer(*ip)) return *r;
  return find_feasible_rational(p);
}

Result find_feasible(const IntProblem& p) {
  if (p.b.size() != p.A.size()) throw std::invalid_argument("lp: row count mismatch");
  if (auto r = find_feasible_integer(p)) return *r;
  Problem q;
  for (const auto& row : p.A) {
    q.A.emplace_back();
    for (auto v : row) q.A.back().emplace_back(static_cast<long>(v));
  }
  for (auto v : p.b) q.b.emplace_back(static_cast<long>(v));
  return find_feasible_rational(q);
}

Result find_feasible_rational(const Problem& p) {
  const std::size_t m = p.A.size();
  if (p.b.size() != m) throw std::invalid_argument("lp: row count mismatch");
  const std::size_t n = m ? p.A[0].size() : 0;
  const std::size_t width = n + m + 1;  // originals, artificials, rhs
  const std::size_t rhs = n + m;

  std::vector<int> sign(m, 1);
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    if (p.A[i].size() != n) throw std::invalid_argument("lp: ragged constraint matrix");
    sign[i] = p.b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = sign[i] == 1 ? p.A[i][j] : Rational(-p.A[i][j]);
    t[i][n + i] = 1;
    t[i][rhs] = sign[i] == 1 ? p.b[i] : Rational(-p.b[i]);
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced costs of the phase-I objective (sum of artificials); last entry is -z.
  std::vector<Rational> cost(width, Rational(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) cost[j] -= t[i][j];
  for (std::size_t i = 0; i < m; ++i) cost[rhs] -= t[i][rhs];

  Result result;
  Rational ratio, best;
  for (;;) {
    // Bland: lowest-index improving column.
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw InternalError("lp: phase I objective unbounded");

    auto& prow = t[leave];
    const Rational inv = 1 / prow[enter];
    for (auto& v : prow)
      if (v != 0) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (prow[j] != 0) t[i][j] -= f * prow[j];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j)
        if (prow[j] != 0) cost[j] -= f * prow[j];
    }
    basis[leave] = enter;
    ++result.pivots;
  }

  if (cost[rhs] == 0) {
    result.feasible = true;
    result.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) result.x[basis[i]] = t[i][rhs];
    if (!check_point(p, result.x)) throw InternalError("lp: feasible point fails verification");
  } else {
    // Duals of the flipped system: pi_k = c_B^T B^{-1} e_k; B^{-1} sits in the
    // artificial columns. y = -S pi.
    result.y.assign(m, Rational(0));
    for (std::size_t k = 0; k < m; ++k) {
      Rational pi = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) pi += t[i][n + k];
      result.y[k] = sign[k] == 1 ? Rational(-pi) : pi;
    }
    if (!check_certificate(p, result.y)) throw InternalError("lp: Farkas certificate fails verification");
  }
  return result;
}

}  // namespace e7dirac::lp
