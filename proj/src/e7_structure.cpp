#include "e7dirac/e7_structure.hpp"

#include "e7dirac/linalg.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace e7dirac {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InternalError("root datum invariant violated: " + what);
}

AmbientVector half_sum(const std::vector<AmbientVector>& roots) {
  AmbientVector s;
  for (const auto& r : roots) s += r;
  s *= Rational(1, 2);
  return s;
}

}  // namespace

KType::KType(const std::array<std::int64_t, 7>& coords) : c(coords) {
  if (!is_k_type(coords)) {
    std::ostringstream msg;
    msg << "not a K-type (integrality fails): " << to_string(*this);
    throw std::domain_error(msg.str());
  }
}

Coords7 KType::to_coords() const {
  Coords7 out;
  for (std::size_t i = 0; i < 7; ++i) out[i] = Rational(static_cast<long>(c[i]));
  return out;
}

std::string to_string(const KType& k) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < 7; ++i) out << (i ? "," : "") << k.c[i];
  out << ']';
  return out.str();
}

InfChar InfChar::from_ints(const std::array<std::int64_t, 7>& coords) {
  InfChar l;
  for (std::size_t i = 0; i < 7; ++i) l.c[i] = Rational(static_cast<long>(coords[i]));
  return l;
}

bool InfChar::is_integral() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& q) { return is_integer(q); });
}

std::string to_string(const InfChar& l) { return to_string(l.c); }

Rational inner(const AmbientVector& u, const AmbientVector& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < 8; ++i) s += u.coords[i] * v.coords[i];
  return s;
}

Rational norm_sq(const AmbientVector& v) { return inner(v, v); }

Rational pair_coroot(const AmbientVector& v, const AmbientVector& root) {
  Rational len = norm_sq(root);
  if (len == 0) throw std::invalid_argument("pair_coroot: zero root");
  return 2 * inner(v, root) / len;
}

AmbientVector reflect(const AmbientVector& v, const AmbientVector& root) {
  return v - pair_coroot(v, root) * root;
}

RootDatum build_root_datum() {
  RootDatum d;
  auto& a = d.simple_roots;
  a[0] = make_ambient({1, -1, -1, -1, -1, -1, -1, 1}, 2);
  a[1] = make_ambient({1, 1, 0, 0, 0, 0, 0, 0});
  for (int i = 3; i <= 7; ++i) {
    // alpha_i = e_{i-1} - e_{i-2}, 1-based e-indices.
    std::array<long, 8> n{};
    n[static_cast<std::size_t>(i - 2)] = 1;
    n[static_cast<std::size_t>(i - 3)] = -1;
    a[static_cast<std::size_t>(i - 1)] = make_ambient(n);
  }

  linalg::Matrix rows;
  for (const auto& r : a) rows.emplace_back(r.coords.begin(), r.coords.end());
  auto complement = linalg::null_space(rows);
  require(complement.size() == 1, "simple roots span a 7-dimensional space");
  for (std::size_t i = 0; i < 8; ++i) d.span_complement.coords[i] = complement[0][i];

  linalg::Matrix cartan(7, linalg::Vector(7));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      cartan[i][j] = inner(a[i], a[j]);
      d.cartan[i][j] = cartan[i][j];
    }
  auto cinv = linalg::inverse(cartan);
  require(cinv.has_value(), "Cartan matrix is nonsingular");
  for (std::size_t i = 0; i < 7; ++i) {
    AmbientVector w;
    for (std::size_t k = 0; k < 7; ++k) w += (*cinv)[i][k] * a[k];
    d.fundamental_weights[i] = w;
  }
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      require(pair_coroot(d.fundamental_weights[i], a[j]) == (i == j ? 1 : 0),
              "<zeta_i, alpha_j^vee> = delta_ij");
      d.zeta_gram[i][j] = inner(d.fundamental_weights[i], d.fundamental_weights[j]);
    }

  // All roots: orbit of the simple roots under the simple reflections.
  std::set<AmbientVector> roots(a.begin(), a.end());
  std::deque<AmbientVector> queue(a.begin(), a.end());
  while (!queue.empty()) {
    AmbientVector r = queue.front();
    queue.pop_front();
    for (const auto& s : a) {
      AmbientVector t = reflect(r, s);
      if (roots.insert(t).second) queue.push_back(t);
    }
  }
  require(roots.size() == 2 * kPositiveRootCount, "126 roots");

  auto height = [&](const AmbientVector& r) {
    Rational h = 0;
    for (const auto& z : d.fundamental_weights) h += inner(r, z);
    return h;
  };
  for (const auto& r : roots) {
    bool pos = std::all_of(d.fundamental_weights.begin(), d.fundamental_weights.end(),
                           [&](const AmbientVector& z) { return inner(r, z) >= 0; });
    bool neg = std::all_of(d.fundamental_weights.begin(), d.fundamental_weights.end(),
                           [&](const AmbientVector& z) { return inner(r, z) <= 0; });
    require(pos != neg, "every root is positive or negative");
    require(norm_sq(r) == 2, "roots have squared length 2");
    if (pos) d.positive_roots.push_back(r);
  }
  std::sort(d.positive_roots.begin(), d.positive_roots.end(),
            [&](const AmbientVector& x, const AmbientVector& y) {
              Rational hx = height(x), hy = height(y);
              if (hx != hy) return hx < hy;
              return x < y;
            });
  require(d.positive_roots.size() == kPositiveRootCount, "63 positive roots");

  d.zeta = d.fundamental_weights[6];
  for (std::size_t i = 0; i < 6; ++i) d.compact_simple[i] = a[i];
  for (const auto& r : d.positive_roots) {
    Rational p = inner(r, d.zeta);
    if (p == 0) {
      d.compact_positive.push_back(r);
    } else {
      require(p == 1, "positive noncompact roots pair to 1 with zeta");
      d.pplus_roots.push_back(r);
      d.pminus_roots.push_back(-r);
    }
  }
  require(d.compact_positive.size() == kCompactPositiveCount, "36 compact positive roots");
  require(d.pplus_roots.size() == kNoncompactPositiveCount, "27 roots in p+");
  require(d.pminus_roots.size() == kNoncompactPositiveCount, "27 roots in p-");

  d.rho = AmbientVector();
  for (const auto& z : d.fundamental_weights) d.rho += z;
  require(d.rho == half_sum(d.positive_roots), "rho is the half sum of positive roots");
  d.rho_c = half_sum(d.compact_positive);
  d.rho_n = d.rho - d.rho_c;
  require(d.rho_n == half_sum(d.pplus_roots), "rho_n is the half sum of p+ roots");
  d.beta = d.positive_roots.back();
  require(std::find(d.pplus_roots.begin(), d.pplus_roots.end(), d.beta) != d.pplus_roots.end(),
          "the highest root lies in p+");

  linalg::Matrix c6(6, linalg::Vector(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) c6[i][j] = cartan[i][j];
  auto c6inv = linalg::inverse(c6);
  require(c6inv.has_value(), "E6 Cartan matrix is nonsingular");
  for (std::size_t k = 0; k < 6; ++k) {
    AmbientVector w;
    for (std::size_t l = 0; l < 6; ++l) w += (*c6inv)[k][l] * a[l];
    d.varpi[k] = w;
    require(inner(w, d.zeta) == 0, "varpi_k is orthogonal to zeta");
    for (std::size_t l = 0; l < 6; ++l)
      require(pair_coroot(w, a[l]) == (k == l ? 1 : 0), "<varpi_k, gamma_l^vee> = delta_kl");
  }

  require(d.rho == make_ambient({0, 2, 4, 6, 8, 10, -17, 17}, 2), "rho");
  require(d.rho_c == make_ambient({0, 1, 2, 3, 4, -4, -4, 4}), "rho_c");
  require(d.zeta == make_ambient({0, 0, 0, 0, 0, 2, -1, 1}, 2), "zeta");
  require(d.beta == make_ambient({0, 0, 0, 0, 0, 0, -1, 1}), "beta");
  return d;
}

const RootDatum& root_datum() {
  static const RootDatum datum = build_root_datum();
  return datum;
}

bool in_span(const AmbientVector& v) { return inner(v, root_datum().span_complement) == 0; }

AmbientVector to_ambient(Basis basis, const Coords7& coords) {
  const auto& d = root_datum();
  AmbientVector v;
  if (basis == Basis::Zeta) {
    for (std::size_t i = 0; i < 7; ++i)
      if (coords[i] != 0) v += coords[i] * d.fundamental_weights[i];
  } else {
    for (std::size_t i = 0; i < 6; ++i)
      if (coords[i] != 0) v += coords[i] * d.varpi[i];
    v += (coords[6] / 3) * d.zeta;
  }
  return v;
}

AmbientVector to_ambient(const KType& k) { return to_ambient(Basis::Varpi, k.to_coords()); }
AmbientVector to_ambient(const InfChar& l) { return to_ambient(Basis::Zeta, l.c); }

Coords7 from_ambient(Basis basis, const AmbientVector& v) {
  if (!in_span(v)) throw std::domain_error("vector outside the span of the roots: " + to_string(v));
  const auto& d = root_datum();
  Coords7 out;
  if (basis == Basis::Zeta) {
    for (std::size_t i = 0; i < 7; ++i) out[i] = pair_coroot(v, d.simple_roots[i]);
  } else {
    for (std::size_t i = 0; i < 6; ++i) out[i] = pair_coroot(v, d.compact_simple[i]);
    // (g/3) zeta has zeta-component g/3 and <zeta, zeta> = 3/2.
    out[6] = 3 * inner(v, d.zeta) / norm_sq(d.zeta);
  }
  return out;
}

bool is_k_type(const std::array<std::int64_t, 7>& k) {
  for (std::size_t i = 0; i < 6; ++i)
    if (k[i] < 0) throw std::domain_error("K-type coordinates a..f must be nonnegative");
  // Multiply the condition by 3: -2a - 3b - 4c - 6d - 5e - 4f + g = 0 mod 3.
  std::int64_t s = -2 * k[0] - 3 * k[1] - 4 * k[2] - 6 * k[3] - 5 * k[4] - 4 * k[5] + k[6];
  return s % 3 == 0;
}

KType contragredient(const KType& k) {
  const auto& c = k.c;
  return KType({c[5], c[1], c[4], c[3], c[2], c[0], -c[6]});
}

std::array<std::int64_t, 7> lowest_weight(const KType& k) {
  const auto& c = k.c;
  return {-c[5], -c[1], -c[4], -c[3], -c[2], -c[0], c[6]};
}

std::array<std::int64_t, 7> varpi_ints(const AmbientVector& v) {
  Coords7 q = from_ambient(Basis::Varpi, v);
  std::array<std::int64_t, 7> out{};
  for (std::size_t i = 0; i < 7; ++i) out[i] = to_int64(q[i]);
  return out;
}

}  // namespace e7dirac
