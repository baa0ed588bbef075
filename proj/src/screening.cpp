#include "e7dirac/screening.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace e7dirac {

namespace {

bool nonneg_integers(const InfChar& l) {
  for (const auto& v : l.c)
    if (!is_integer(v) || v < 0) return false;
  return true;
}

// Runs body(i) for i in [0, n) on up to `jobs` threads, strided.
template <class Body>
void parallel_for(std::size_t n, unsigned jobs, Body body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += jobs) body(i);
    });
  for (auto& th : pool) th.join();
}

// Tables for the census, everything scaled by 3 so it is integral.
struct HullTables {
  UsmallBox box;
  std::array<std::array<std::int64_t, 6>, 6> gram3{};  // 3 <varpi_i, varpi_k>
  std::array<std::int64_t, 6> support3{};              // floor(3 max_j <v_j, varpi_k>)
  std::vector<std::array<std::int64_t, 6>> plane3;     // [g - g_min][k]: floor(3 f_k(g))
};

const HullTables& hull_tables() {
  static const HullTables t = [] {
    const auto& d = root_datum();
    HullTables out;
    struct Vertex {
      std::array<Rational, 6> h;
      Rational g;
    };
    std::vector<Vertex> verts;
    for (const auto& c : chambers()) {
      Vertex v;
      const AmbientVector x = Rational(kHullScale) * c.rho_n_j;
      for (std::size_t k = 0; k < 6; ++k) v.h[k] = inner(x, d.varpi[k]);
      v.g = 2 * inner(x, d.zeta);
      verts.push_back(v);
    }
    Rational gmin = verts[0].g, gmax = verts[0].g;
    for (const auto& v : verts) {
      gmin = std::min(gmin, v.g);
      gmax = std::max(gmax, v.g);
    }
    out.box.g_min = to_int64(gmin);
    out.box.g_max = to_int64(gmax);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t k = 0; k < 6; ++k) out.gram3[i][k] = to_int64(3 * inner(d.varpi[i], d.varpi[k]));
    auto floor64 = [](const Rational& q) {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
      return f.get_si();
    };
    for (std::size_t k = 0; k < 6; ++k) {
      Rational m = verts[0].h[k];
      for (const auto& v : verts) m = std::max(m, v.h[k]);
      out.support3[k] = floor64(3 * m);
      out.box.cap[k] = floor64(m / inner(d.varpi[k], d.varpi[k]));
    }
    // f_k(g) = max { sum t_j h_k(j) : t in the simplex, sum t_j g_j = g }; an
    // optimal t has at most two nonzero entries.
    for (std::int64_t g = out.box.g_min; g <= out.box.g_max; ++g) {
      std::array<std::int64_t, 6> row{};
      const Rational gq(static_cast<long>(g));
      for (std::size_t k = 0; k < 6; ++k) {
        std::optional<Rational> best;
        for (const auto& a : verts)
          for (const auto& b : verts) {
            Rational val;
            if (a.g == b.g) {
              if (a.g != gq) continue;
              val = std::max(a.h[k], b.h[k]);
            } else {
              if ((a.g - gq) * (b.g - gq) > 0) continue;
              const Rational s = (gq - b.g) / (a.g - b.g);
              val = s * a.h[k] + (1 - s) * b.h[k];
            }
            if (!best || val > *best) best = val;
          }
        if (!best) throw InternalError("u-small census: empty zeta slice");
        row[k] = floor64(3 * *best);
      }
      out.plane3.push_back(row);
    }
    return out;
  }();
  return t;
}

}  // namespace

bool hp_admissible(const InfChar& lambda) {
  if (!nonneg_integers(lambda)) return false;
  for (const auto& s : kHpSums) {
    Rational sum = 0;
    for (int i : s)
      if (i >= 0) sum += lambda.c[static_cast<std::size_t>(i)];
    if (sum <= 0) return false;
  }
  return true;
}

bool zero_sum_witness(const InfChar& lambda, std::size_t sum_index) {
  if (sum_index >= kHpSums.size()) throw std::invalid_argument("zero_sum_witness: sum index out of range");
  if (!nonneg_integers(lambda))
    throw std::invalid_argument("zero_sum_witness: coordinates must be nonnegative integers");
  for (int i : kHpSums[sum_index])
    if (i >= 0 && lambda.c[static_cast<std::size_t>(i)] != 0)
      throw std::invalid_argument("zero_sum_witness: selected coordinates must vanish, got " + to_string(lambda));
  const auto& d = root_datum();
  const AmbientVector v = to_ambient(lambda);
  for (const auto& c : chambers()) {
    const AmbientVector w = apply_word(c.word, v);
    bool has_zero = false;
    for (std::size_t i = 0; i < 6 && !has_zero; ++i) has_zero = inner(w, d.compact_simple[i]) == 0;
    if (!has_zero) return false;
  }
  return true;
}

UsmallBox usmall_box() { return hull_tables().box; }

UsmallCensus enumerate_usmall_ktypes(unsigned jobs) {
  const auto& t = hull_tables();
  const auto& box = t.box;
  const std::size_t ng = static_cast<std::size_t>(box.g_max - box.g_min + 1);
  std::vector<UsmallCensus> parts(ng);

  parallel_for(ng, jobs, [&](std::size_t gi) {
    const std::int64_t g = box.g_min + static_cast<std::int64_t>(gi);
    const auto& plane = t.plane3[gi];
    std::array<std::int64_t, 6> bound{};
    for (std::size_t k = 0; k < 6; ++k) bound[k] = std::min(t.support3[k], plane[k]);
    UsmallCensus& out = parts[gi];
    std::array<std::int64_t, 7> mu{};
    mu[6] = g;
    // acc[level][k] = 3 <sum_{i<level} mu_i varpi_i, varpi_k>; every term is
    // nonnegative, so a prefix that exceeds a bound cannot be completed.
    std::array<std::array<std::int64_t, 6>, 7> acc{};
    auto rec = [&](auto&& self, std::size_t level) -> void {
      if (level == 6) {
        if (!is_k_type(mu)) return;
        ++out.lp_calls;
        KType k(mu);
        if (is_usmall(k)) out.ktypes.push_back(k);
        return;
      }
      for (std::int64_t v = 0; v <= box.cap[level]; ++v) {
        bool ok = true;
        for (std::size_t k = 0; k < 6; ++k) {
          acc[level + 1][k] = acc[level][k] + v * t.gram3[level][k];
          if (acc[level + 1][k] > bound[k]) ok = false;
        }
        if (!ok) break;
        mu[level] = v;
        self(self, level + 1);
      }
    };
    rec(rec, 0);
  });

  UsmallCensus all;
  for (auto& p : parts) {
    all.lp_calls += p.lp_calls;
    all.ktypes.insert(all.ktypes.end(), p.ktypes.begin(), p.ktypes.end());
  }
  std::sort(all.ktypes.begin(), all.ktypes.end());
  return all;
}

std::vector<CertsEntry> compute_certs(const std::vector<KType>& usmall, unsigned jobs) {
  std::vector<std::optional<CertsEntry>> slot(usmall.size());
  parallel_for(usmall.size(), jobs, [&](std::size_t i) {
    const KType& k = usmall[i];
    const Rational spin = spin_norm_sq(k);
    const Rational lam = lambda_datum(k).lambda_norm_sq;
    const Rational gap = spin - lam;
    if (gap >= kCertsGap) slot[i] = CertsEntry{k, spin, lam, gap};
  });
  std::vector<CertsEntry> out;
  for (auto& s : slot)
    if (s) out.push_back(std::move(*s));
  std::sort(out.begin(), out.end(), [](const CertsEntry& a, const CertsEntry& b) { return a.ktype < b.ktype; });
  return out;
}

std::vector<KType> ktypes_up_to_height(std::int64_t height_cap, unsigned jobs) {
  if (height_cap < 0) throw std::invalid_argument("ktypes_up_to_height: negative cap");
  const auto& d = root_datum();
  const auto& cs = chambers();
  const std::int64_t budget = height_cap + to_int64(2 * norm_sq(d.rho));
  const auto two_rho_c = varpi_ints(2 * d.rho_c);

  std::vector<std::set<KType>> found(cs.size());
  parallel_for(cs.size(), jobs, [&](std::size_t j) {
    const Chamber& c = cs[j];
    std::array<std::array<std::int64_t, 7>, 7> gen{};
    std::array<std::int64_t, 7> cost{};
    for (std::size_t i = 0; i < 7; ++i) {
      gen[i] = varpi_ints(c.fundamental_weights[i]);
      cost[i] = to_int64(2 * inner(c.fundamental_weights[i], c.rho_j));
    }
    std::array<std::int64_t, 7> acc{};
    for (std::size_t k = 0; k < 7; ++k) acc[k] = -two_rho_c[k];
    auto rec = [&](auto&& self, std::size_t level, std::int64_t used) -> void {
      if (level == 7) {
        for (std::size_t k = 0; k < 6; ++k)
          if (acc[k] < 0) return;
        if (is_k_type(acc)) found[j].insert(KType(acc));
        return;
      }
      for (std::int64_t v = 0; used + v * cost[level] <= budget; ++v) {
        self(self, level + 1, used + v * cost[level]);
        for (std::size_t k = 0; k < 7; ++k) acc[k] += gen[level][k];
      }
      // undo
      const std::int64_t steps = (budget - used) / cost[level] + 1;
      for (std::size_t k = 0; k < 7; ++k) acc[k] -= steps * gen[level][k];
    };
    rec(rec, 0, 0);
  });
  std::set<KType> all;
  for (auto& f : found) all.merge(f);
  std::vector<KType> cand(all.begin(), all.end());
  std::vector<char> keep(cand.size(), 0);
  parallel_for(cand.size(), jobs, [&](std::size_t i) { keep[i] = atlas_height(cand[i]) <= height_cap; });
  std::vector<KType> out;
  for (std::size_t i = 0; i < cand.size(); ++i)
    if (keep[i]) out.push_back(cand[i]);
  return out;
}

UlargeGapScan scan_ularge_gap(std::int64_t height_cap, unsigned jobs) {
  const auto ks = ktypes_up_to_height(height_cap, jobs);
  struct Item {
    bool usmall;
    Rational gap;
  };
  std::vector<Item> items(ks.size());
  parallel_for(ks.size(), jobs, [&](std::size_t i) {
    items[i] = {is_usmall(ks[i]), spin_norm_sq(ks[i]) - lambda_datum(ks[i]).lambda_norm_sq};
  });
  UlargeGapScan out;
  out.height_cap = height_cap;
  out.ktypes = ks.size();
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (items[i].usmall) {
      ++out.usmall;
      continue;
    }
    ++out.ularge;
    if (!out.argmax || items[i].gap > out.max_gap) {
      out.max_gap = items[i].gap;
      out.argmax = ks[i];
    }
    if (items[i].gap > kUlargeGapBound) out.violations.push_back(ks[i]);
  }
  return out;
}

std::vector<InfChar> enumerate_omega(const Rational& lo, const Rational& hi) {
  const auto& d = root_datum();
  // 2 <zeta_i, zeta_k> is an integer (inverse Cartan matrix of E7 has
  // denominators dividing 2), and all entries are positive.
  std::array<std::array<std::int64_t, 7>, 7> g2{};
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t k = 0; k < 7; ++k) {
      const Rational v = 2 * inner(d.fundamental_weights[i], d.fundamental_weights[k]);
      if (!is_integer(v) || v <= 0) throw InternalError("omega: unexpected fundamental weight Gram entry");
      g2[i][k] = to_int64(v);
    }
  const Rational lo2 = 2 * lo, hi2 = 2 * hi;
  std::vector<InfChar> out;
  std::array<std::int64_t, 7> x{};
  // norm2 = 2||sum_{i<level} x_i zeta_i||^2; lin[k] = sum_{i<level} x_i g2[i][k].
  auto rec = [&](auto&& self, std::size_t level, std::int64_t norm2, std::array<std::int64_t, 7> lin) -> void {
    if (level == 7) {
      if (Rational(static_cast<long>(norm2)) >= lo2) out.push_back(InfChar::from_ints(x));
      return;
    }
    for (std::int64_t v = 0;; ++v) {
      // ||p + v z||^2 = ||p||^2 + 2 v <p, z> + v^2 ||z||^2
      const std::int64_t n2 = norm2 + 2 * v * lin[level] + v * v * g2[level][level];
      if (Rational(static_cast<long>(n2)) > hi2) break;
      x[level] = v;
      auto next = lin;
      for (std::size_t k = 0; k < 7; ++k) next[k] += v * g2[level][k];
      self(self, level + 1, n2, next);
    }
    x[level] = 0;
  };
  rec(rec, 0, 0, {});
  std::sort(out.begin(), out.end(), [](const InfChar& a, const InfChar& b) { return a.c < b.c; });
  return out;
}

DiracCandidateSet dirac_candidate_gammas(const InfChar& lambda) {
  const auto& d = root_datum();
  DiracCandidateSet out;
  const AmbientVector dom = dominant_rep(to_ambient(lambda), Group::G).dominant;
  out.inf_char = InfChar(from_ambient(Basis::Zeta, dom));
  for (const auto& c : chambers()) {
    const AmbientVector gamma = apply_word(c.word, dom) - d.rho_c;
    if (!is_dominant(gamma, Group::K)) continue;
    out.gammas.push_back({varpi_ints(gamma), c.index});
  }
  std::sort(out.gammas.begin(), out.gammas.end(),
            [](const DiracCandidate& a, const DiracCandidate& b) { return a.gamma < b.gamma; });
  // Distinct w can give the same gamma when Lambda is singular; keep the first.
  out.gammas.erase(std::unique(out.gammas.begin(), out.gammas.end(),
                               [](const DiracCandidate& a, const DiracCandidate& b) { return a.gamma == b.gamma; }),
                   out.gammas.end());
  return out;
}

SpinLktResult spin_lkts(const std::vector<std::pair<KType, std::int64_t>>& ktypes, const InfChar& lambda) {
  if (ktypes.empty()) throw std::invalid_argument("spin_lkts: empty K-type list");
  SpinLktResult out;
  std::optional<Rational> best;
  for (std::size_t i = 0; i < ktypes.size(); ++i) {
    const Rational s = spin_norm_sq(ktypes[i].first);
    if (!best || s < *best) {
      best = s;
      out.achievers.clear();
    }
    if (s == *best) out.achievers.push_back(i);
  }
  out.min_spin_sq = *best;
  out.hd_nonzero = out.min_spin_sq == norm_sq(to_ambient(lambda));
  return out;
}

DiracIndexParity dirac_index_parity(const KType& lkt, const std::vector<KType>& spin_lkts) {
  if (spin_lkts.empty()) throw std::invalid_argument("dirac_index_parity: empty spin LKT set");
  const auto& d = root_datum();
  const AmbientVector mu = to_ambient(lkt);
  DiracIndexParity out;
  for (const auto& k : spin_lkts) {
    const Rational v = inner(to_ambient(k) - mu, d.zeta);
    if (!is_integer(v)) throw std::domain_error("dirac_index_parity: B(mu_i - mu, zeta) = " + to_string(v) + " is not an integer");
    out.values.push_back(v.get_num());
  }
  out.no_cancellation = same_parity(out.values);
  return out;
}

bool dirac_index_no_cancellation(const KType& lkt, const std::vector<KType>& spin_lkts) {
  return dirac_index_parity(lkt, spin_lkts).no_cancellation;
}

bool same_parity(const std::vector<Integer>& values) {
  for (const auto& v : values)
    if (mpz_odd_p(v.get_mpz_t()) != mpz_odd_p(values.front().get_mpz_t())) return false;
  return true;
}

}  // namespace e7dirac
