#include "e7dirac/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace e7dirac {

AmbientVector apply_word(const WeylWord& word, AmbientVector v) {
  const auto& roots = root_datum().simple_roots;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    v = reflect(v, roots[static_cast<std::size_t>(*it - 1)]);
  return v;
}

AmbientVector apply_inverse(const WeylWord& word, AmbientVector v) {
  const auto& roots = root_datum().simple_roots;
  for (int letter : word) v = reflect(v, roots[static_cast<std::size_t>(letter - 1)]);
  return v;
}

DominantRep dominant_rep(const AmbientVector& v, Group group) {
  if (!in_span(v)) throw std::domain_error("dominant_rep: vector outside the root span");
  const auto& roots = root_datum().simple_roots;
  const std::size_t n = group == Group::G ? 7 : 6;
  DominantRep out{v, {}};
  for (;;) {
    std::size_t i = 0;
    Rational p;
    for (; i < n; ++i) {
      p = inner(out.dominant, roots[i]);
      if (p < 0) break;
    }
    if (i == n) break;
    out.dominant -= p * roots[i];
    out.word.push_back(static_cast<int>(i + 1));
  }
  std::reverse(out.word.begin(), out.word.end());
  return out;
}

bool is_dominant(const AmbientVector& v, Group group) {
  const auto& roots = root_datum().simple_roots;
  const std::size_t n = group == Group::G ? 7 : 6;
  for (std::size_t i = 0; i < n; ++i)
    if (inner(v, roots[i]) < 0) return false;
  return true;
}

std::vector<Chamber> enumerate_chambers() {
  const auto& d = root_datum();
  Chamber start;
  start.index = 0;
  start.rho_j = d.rho;
  start.rho_n_j = d.rho - d.rho_c;
  start.simple_roots = d.simple_roots;
  start.fundamental_weights = d.fundamental_weights;

  std::vector<Chamber> out{start};
  std::map<AmbientVector, int> seen{{start.rho_j, 0}};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t i = 0; i < 7; ++i) {
      const Chamber& cur = out[head];
      const AmbientVector& wall = cur.simple_roots[i];
      if (inner(wall, d.zeta) == 0) continue;  // compact wall
      // w s_i: rho^(j) - w alpha_i, simple roots w s_i alpha_k.
      AmbientVector next_rho = cur.rho_j - wall;
      if (seen.count(next_rho)) continue;
      Chamber next;
      next.index = static_cast<int>(out.size());
      next.word = cur.word;
      next.word.push_back(static_cast<int>(i + 1));
      next.rho_j = next_rho;
      next.rho_n_j = next_rho - d.rho_c;
      for (std::size_t k = 0; k < 7; ++k) {
        next.simple_roots[k] = reflect(cur.simple_roots[k], wall);
        next.fundamental_weights[k] = reflect(cur.fundamental_weights[k], wall);
      }
      seen.emplace(next_rho, next.index);
      out.push_back(std::move(next));
    }
  }
  if (out.size() != 56) throw InternalError("chamber search found " + std::to_string(out.size()) + " chambers");
  for (const auto& c : out) {
    if (!is_dominant(c.rho_n_j, Group::K)) throw InternalError("rho_n^(j) is not K-dominant");
    if (apply_word(c.word, d.rho) != c.rho_j) throw InternalError("w^(j) rho != rho^(j)");
  }
  return out;
}

const std::vector<Chamber>& chambers() {
  static const std::vector<Chamber> all = enumerate_chambers();
  return all;
}

std::vector<AmbientVector> chamber_positive_roots(const Chamber& c) {
  std::vector<AmbientVector> out;
  out.reserve(kPositiveRootCount);
  for (const auto& r : root_datum().positive_roots) out.push_back(apply_word(c.word, r));
  return out;
}

bool is_chamber_dominant(const AmbientVector& v, const Chamber& c) {
  return std::all_of(c.simple_roots.begin(), c.simple_roots.end(),
                     [&](const AmbientVector& a) { return inner(v, a) >= 0; });
}

Integer weyl_dim_k(const KType& k) {
  const auto& d = root_datum();
  AmbientVector mu = to_ambient(k);
  AmbientVector shifted = mu + d.rho_c;
  Rational dim = 1;
  for (const auto& a : d.compact_positive) dim *= inner(shifted, a) / inner(d.rho_c, a);
  if (!is_integer(dim) || dim <= 0) throw InternalError("Weyl dimension is not a positive integer");
  return dim.get_num();
}

std::vector<Integer> spin_module_summands() {
  std::vector<Integer> dims;
  for (const auto& c : chambers()) {
    auto coords = varpi_ints(c.rho_n_j);
    if (!is_k_type(coords)) throw InternalError("rho_n^(j) fails K-type integrality");
    dims.push_back(weyl_dim_k(KType(coords)));
  }
  return dims;
}

bool spin_module_dimension_check() {
  Integer total = 0;
  for (const auto& d : spin_module_summands()) total += d;
  return total == Integer(1) << 27;
}

std::vector<std::pair<int, int>> coincident_spin_summands() {
  std::vector<std::pair<int, int>> out;
  const auto& cs = chambers();
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (cs[i].rho_n_j == cs[j].rho_n_j)
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return out;
}

namespace detail {

ScaledWeight to_scaled(const AmbientVector& v) {
  ScaledWeight x{};
  for (std::size_t i = 0; i < 8; ++i) x[i] = to_int64(kScale * v.coords[i]);
  return x;
}

AmbientVector from_scaled(const ScaledWeight& x) {
  AmbientVector v;
  for (std::size_t i = 0; i < 8; ++i)
    v.coords[i] = Rational(Integer(static_cast<long>(x[i])), Integer(kScale));
  for (auto& c : v.coords) c.canonicalize();
  return v;
}

std::int64_t dot(const ScaledWeight& x, const ScaledWeight& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < 8; ++i) s += x[i] * y[i];
  return s;
}

namespace {

// Doubled compact simple roots 2 gamma_i, integral.
const std::array<ScaledWeight, 6>& doubled_compact_simple() {
  static const std::array<ScaledWeight, 6> roots = [] {
    std::array<ScaledWeight, 6> out{};
    const auto& d = root_datum();
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t k = 0; k < 8; ++k) out[i][k] = to_int64(2 * d.compact_simple[i].coords[k]);
    return out;
  }();
  return roots;
}

}  // namespace

void k_dominate_scaled(ScaledWeight& x) {
  const auto& roots = doubled_compact_simple();
  for (;;) {
    std::size_t i = 0;
    std::int64_t p = 0;  // 2 <x, gamma_i>
    for (; i < 6; ++i) {
      p = dot(x, roots[i]);
      if (p < 0) break;
    }
    if (i == 6) return;
    // x - <x,gamma> gamma = x - (p/2)(R/2) = x - (p/4) R with R = 2 gamma.
    if (p % 4 != 0) throw InternalError("k_dominate_scaled: non-integral pairing");
    const std::int64_t f = p / 4;
    for (std::size_t k = 0; k < 8; ++k) x[k] -= f * roots[i][k];
  }
}

}  // namespace detail

}  // namespace e7dirac
