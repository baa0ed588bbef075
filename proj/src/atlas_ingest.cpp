#include "e7dirac/atlas_ingest.hpp"
#include "e7dirac/linalg.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace e7dirac {

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Walks the non-comment, non-blank lines of a stream.
void for_each_record(std::istream& in, const std::function<void(std::size_t, const std::string&)>& fn) {
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    fn(n, line);
  }
}

struct Ctx {
  const std::string& source;
  std::size_t line;
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source, line, what); }
};

std::int64_t parse_int(const Ctx& ctx, const std::string& s, const char* what) {
  std::int64_t v = 0;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  if (b != e && *b == '+') ++b;
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e || s.empty()) ctx.fail(std::string("bad integer in ") + what + ": '" + s + "'");
  return v;
}

Ints7 parse_ints7(const Ctx& ctx, const std::string& s, const char* what) {
  std::string body = s;
  if (!body.empty() && body.front() == '[') body.erase(0, 1);
  if (!body.empty() && body.back() == ']') body.pop_back();
  auto parts = split(body, ',');
  if (parts.size() != 7)
    ctx.fail(std::string(what) + ": expected 7 entries, got " + std::to_string(parts.size()));
  Ints7 out{};
  for (std::size_t i = 0; i < 7; ++i) out[i] = parse_int(ctx, parts[i], what);
  return out;
}

Coords7 parse_rationals7(const Ctx& ctx, const std::string& s, const char* what) {
  std::string body = s;
  if (!body.empty() && body.front() == '[') body.erase(0, 1);
  if (!body.empty() && body.back() == ']') body.pop_back();
  auto parts = split(body, ',');
  if (parts.size() != 7)
    ctx.fail(std::string(what) + ": expected 7 entries, got " + std::to_string(parts.size()));
  Coords7 out;
  for (std::size_t i = 0; i < 7; ++i) {
    try {
      out[i] = parse_rational(parts[i]);
    } catch (const std::invalid_argument&) {
      ctx.fail(std::string("bad rational in ") + what + ": '" + parts[i] + "'");
    }
  }
  return out;
}

std::vector<int> parse_index_set(const Ctx& ctx, const std::string& s, bool allow_full) {
  std::vector<int> out;
  if (s == "empty") return out;
  if (allow_full && s == "full") return {0, 1, 2, 3, 4, 5, 6};
  for (const auto& p : split(s, ',')) {
    const auto v = parse_int(ctx, p, "index set");
    if (v < 0 || v > 6) ctx.fail("simple root index out of range: " + p);
    out.push_back(static_cast<int>(v));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) ctx.fail("repeated index in '" + s + "'");
  return out;
}

std::vector<std::string> fields(const Ctx& ctx, const std::string& line, std::size_t n) {
  auto f = split(line, '|');
  if (f.size() != n) ctx.fail("expected " + std::to_string(n) + " '|'-separated fields, got " + std::to_string(f.size()));
  return f;
}

Rational gram(std::size_t i, std::size_t j) { return root_datum().zeta_gram[i][j]; }

template <class T, class Parse>
std::vector<T> load(const std::filesystem::path& p, Parse parse) {
  std::ifstream in(p);
  if (!in) throw MissingFixture("fixture not found: " + p.string());
  return parse(in, p.string());
}

}  // namespace

Coords7 apply_theta(const IntMatrix7& theta, const Coords7& v) {
  Coords7 out;
  for (std::size_t r = 0; r < 7; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < 7; ++c)
      if (theta[r][c] != 0) s += Rational(static_cast<long>(theta[r][c])) * v[c];
    out[r] = s;
  }
  return out;
}

bool is_orthogonal_involution(const IntMatrix7& t) {
  for (std::size_t r = 0; r < 7; ++r)
    for (std::size_t c = 0; c < 7; ++c) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < 7; ++k) s += t[r][k] * t[k][c];
      if (s != (r == c ? 1 : 0)) return false;
    }
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      Rational s = 0;
      for (std::size_t a = 0; a < 7; ++a)
        for (std::size_t b = 0; b < 7; ++b)
          if (t[a][i] != 0 && t[b][j] != 0) s += Rational(static_cast<long>(t[a][i] * t[b][j])) * gram(a, b);
      if (s != gram(i, j)) return false;
    }
  return true;
}

std::vector<KgbRecord> parse_kgb(std::istream& in, const std::string& source) {
  std::vector<KgbRecord> out;
  std::set<std::int64_t> seen;
  for_each_record(in, [&](std::size_t n, const std::string& line) {
    Ctx ctx{source, n};
    auto f = fields(ctx, line, 3);
    KgbRecord r;
    r.id = parse_int(ctx, f[0], "id");
    if (r.id < 0) ctx.fail("negative KGB id");
    r.support = parse_index_set(ctx, f[1], true);
    auto rows = split(f[2], ';');
    if (rows.size() != 7) ctx.fail("theta: expected 7 rows, got " + std::to_string(rows.size()));
    for (std::size_t i = 0; i < 7; ++i) {
      auto v = split(rows[i], ',');
      if (v.size() != 7) ctx.fail("theta row " + std::to_string(i + 1) + ": expected 7 entries, got " + std::to_string(v.size()));
      for (std::size_t j = 0; j < 7; ++j) r.theta[i][j] = parse_int(ctx, v[j], "theta");
    }
    if (!seen.insert(r.id).second) ctx.fail("duplicate KGB id " + std::to_string(r.id));
    if (!is_orthogonal_involution(r.theta))
      ctx.fail("KGB " + std::to_string(r.id) + ": theta is not an orthogonal involution");
    out.push_back(std::move(r));
  });
  return out;
}

std::vector<AtlasParameter> parse_params(std::istream& in, const std::string& source) {
  std::vector<AtlasParameter> out;
  for_each_record(in, [&](std::size_t n, const std::string& line) {
    Ctx ctx{source, n};
    auto f = fields(ctx, line, 4);
    AtlasParameter p;
    p.x = parse_int(ctx, f[0], "x");
    p.lambda = parse_ints7(ctx, f[1], "lambda");
    p.nu = parse_rationals7(ctx, f[2], "nu");
    if (!f[3].empty())
      for (const auto& flag : split(f[3], ',')) {
        if (flag == "unitary") p.unitary = true;
        else if (flag == "fs") p.fully_supported = true;
        else ctx.fail("unknown flag '" + flag + "'");
      }
    out.push_back(p);
  });
  return out;
}

std::vector<BranchingEntry> parse_branching(std::istream& in, const std::string& source) {
  std::vector<BranchingEntry> out;
  for_each_record(in, [&](std::size_t n, const std::string& line) {
    Ctx ctx{source, n};
    auto f = fields(ctx, line, 3);
    BranchingEntry e;
    e.multiplicity = parse_int(ctx, f[0], "multiplicity");
    if (e.multiplicity <= 0) ctx.fail("multiplicity must be positive");
    const Ints7 k = parse_ints7(ctx, f[1], "ktype");
    try {
      e.ktype = KType(k);
    } catch (const std::domain_error& err) {
      ctx.fail(err.what());
    }
    e.height = parse_int(ctx, f[2], "height");
    out.push_back(e);
  });
  return out;
}

std::vector<TableRow> parse_table(std::istream& in, const std::string& source) {
  std::vector<TableRow> out;
  std::set<std::int64_t> seen;
  for_each_record(in, [&](std::size_t n, const std::string& line) {
    Ctx ctx{source, n};
    auto f = fields(ctx, line, 7);
    TableRow r;
    r.line = n;
    r.inf_char = InfChar::from_ints(parse_ints7(ctx, f[0], "table id"));
    r.x = parse_int(ctx, f[1], "x");
    if (f[2] != "-") r.x_prime = parse_int(ctx, f[2], "x'");
    r.lambda = parse_ints7(ctx, f[3], "lambda");
    r.nu = parse_rationals7(ctx, f[4], "nu");
    for (auto entry : split(f[5], ';')) {
      bool lkt = false;
      if (entry.rfind("LKT:", 0) == 0) {
        lkt = true;
        entry = trim(entry.substr(4));
      }
      r.spin_lkts.push_back(parse_ints7(ctx, entry, "spin LKT"));
      r.lkt_flags.push_back(lkt);
    }
    if (r.spin_lkts.empty()) ctx.fail("row without spin LKTs");
    if (f[6] == "1") r.unipotent = true;
    else if (f[6] != "0") ctx.fail("clubsuit flag must be 0 or 1");
    for (std::int64_t id : {r.x, r.x_prime.value_or(-1)})
      if (id >= 0 && !seen.insert(id).second) ctx.fail("duplicate KGB id " + std::to_string(id));
    out.push_back(std::move(r));
  });
  return out;
}

std::vector<DiracCount> parse_dirac_counts(std::istream& in, const std::string& source) {
  std::vector<DiracCount> out;
  std::set<std::vector<int>> seen;
  for_each_record(in, [&](std::size_t n, const std::string& line) {
    Ctx ctx{source, n};
    auto f = fields(ctx, line, 2);
    DiracCount d;
    d.subset = parse_index_set(ctx, f[0], false);
    if (d.subset.size() == 7) ctx.fail("S must be a proper subset");
    d.count = parse_int(ctx, f[1], "N(S)");
    if (d.count < 0) ctx.fail("negative count");
    if (!seen.insert(d.subset).second) ctx.fail("duplicate subset " + f[0]);
    out.push_back(std::move(d));
  });
  return out;
}

std::vector<KgbRecord> load_kgb(const std::filesystem::path& p) {
  return load<KgbRecord>(p, [](std::istream& in, const std::string& s) { return parse_kgb(in, s); });
}
std::vector<AtlasParameter> load_params(const std::filesystem::path& p) {
  return load<AtlasParameter>(p, [](std::istream& in, const std::string& s) { return parse_params(in, s); });
}
std::vector<BranchingEntry> load_branching(const std::filesystem::path& p) {
  return load<BranchingEntry>(p, [](std::istream& in, const std::string& s) { return parse_branching(in, s); });
}
std::vector<TableRow> load_table(const std::filesystem::path& p) {
  return load<TableRow>(p, [](std::istream& in, const std::string& s) { return parse_table(in, s); });
}
std::vector<DiracCount> load_dirac_counts(const std::filesystem::path& p) {
  return load<DiracCount>(p, [](std::istream& in, const std::string& s) { return parse_dirac_counts(in, s); });
}

Coords7 nu_from_involution(const InfChar& lambda, const KgbRecord& x) {
  const Coords7 t = apply_theta(x.theta, lambda.c);
  Coords7 out;
  for (std::size_t i = 0; i < 7; ++i) out[i] = (lambda.c[i] - t[i]) / 2;
  return out;
}

Rational norm_sq_nu(const Coords7& nu) { return norm_sq(to_ambient(Basis::Zeta, nu)); }

InfChar infinitesimal_char(const AtlasParameter& p, const KgbRecord& x) {
  if (p.x != x.id)
    throw std::invalid_argument("infinitesimal_char: parameter has x=" + std::to_string(p.x) + " but KGB record is " +
                                std::to_string(x.id));
  Coords7 lam;
  for (std::size_t i = 0; i < 7; ++i) lam[i] = Rational(static_cast<long>(p.lambda[i]));
  const Coords7 t = apply_theta(x.theta, lam);
  Coords7 out;
  for (std::size_t i = 0; i < 7; ++i) out[i] = (lam[i] + t[i]) / 2 + p.nu[i];
  return InfChar(out);
}

std::vector<Ints7> minus_eigenspace_frame(const IntMatrix7& theta) {
  const auto& d = root_datum();
  // Roots flipped by theta, as (zeta coordinates, simple-root coefficients).
  std::vector<std::pair<Coords7, Ints7>> flipped;
  for (const auto& r : d.positive_roots) {
    const Coords7 z = from_ambient(Basis::Zeta, r);
    const Coords7 t = apply_theta(theta, z);
    bool neg = true;
    for (std::size_t i = 0; i < 7 && neg; ++i) neg = t[i] == -z[i];
    if (!neg) continue;
    Ints7 coef{};
    for (std::size_t k = 0; k < 7; ++k) coef[k] = to_int64(inner(r, d.fundamental_weights[k]));
    flipped.emplace_back(z, coef);
  }
  // dim of the -1 eigenspace = rank of (1 - theta).
  linalg::Matrix m(7, linalg::Vector(7));
  for (std::size_t r = 0; r < 7; ++r)
    for (std::size_t c = 0; c < 7; ++c) m[r][c] = Rational(static_cast<long>((r == c ? 1 : 0) - theta[r][c]));
  const std::size_t dim = linalg::rank(m);

  auto ortho = [&](std::size_t a, std::size_t b) {
    return inner(to_ambient(Basis::Zeta, flipped[a].first), to_ambient(Basis::Zeta, flipped[b].first)) == 0;
  };
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t)> search = [&](std::size_t from) {
    if (pick.size() == dim) return true;
    for (std::size_t i = from; i < flipped.size(); ++i) {
      bool ok = true;
      for (auto j : pick) ok = ok && ortho(i, j);
      if (!ok) continue;
      pick.push_back(i);
      if (search(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (!search(0)) throw std::invalid_argument("theta: -1 eigenspace is not spanned by orthogonal roots");
  std::vector<Ints7> out;
  for (auto i : pick) out.push_back(flipped[i].second);
  return out;
}

PhiResult enumerate_phi(const std::vector<KgbRecord>& kgb, std::int64_t coord_cap, const Rational& nu_bound,
                        unsigned jobs) {
  if (coord_cap <= 0 || coord_cap > 127) throw std::invalid_argument("enumerate_phi: coord_cap must be in 1..127");
  std::set<IntMatrix7> thetas;
  for (const auto& r : kgb)
    if (r.fully_supported()) thetas.insert(r.theta);
  if (thetas.empty()) throw std::invalid_argument("enumerate_phi: no fully supported involution");
  std::vector<IntMatrix7> list(thetas.begin(), thetas.end());

  // ||nu||^2 < bound  <=>  sum <L, beta_i>^2 < 2 bound.
  const Rational two_bound = 2 * nu_bound;
  auto below = [&](std::int64_t s) { return Rational(static_cast<long>(s)) < two_bound; };

  auto pack = [](const Ints7& v) {
    std::uint64_t key = 0;
    for (auto x : v) key = (key << 7) | static_cast<std::uint64_t>(x);
    return key;
  };

  jobs = std::max(1u, jobs);
  std::vector<std::unordered_set<std::uint64_t>> found(jobs);
  std::vector<std::string> errors(jobs);
  auto worker = [&](unsigned t) {
    try {
      for (std::size_t idx = t; idx < list.size(); idx += jobs) {
        const auto frame = minus_eigenspace_frame(list[idx]);
        const std::size_t k = frame.size();
        Ints7 l{};
        // forms[level][i] = <sum_{c<level} l_c zeta_c, beta_i>; all coefficients
        // are nonnegative, so the partial sum of squares only grows.
        std::vector<std::vector<std::int64_t>> forms(8, std::vector<std::int64_t>(k, 0));
        std::function<void(std::size_t)> rec = [&](std::size_t level) {
          if (level == 7) {
            if (*std::min_element(l.begin(), l.end()) != 0) return;
            for (const auto& sum : kHpSums) {
              std::int64_t v = 0;
              for (int i : sum)
                if (i >= 0) v += l[static_cast<std::size_t>(i)];
              if (v <= 0) return;
            }
            for (auto v : l)
              if (v >= coord_cap)
                throw std::runtime_error("enumerate_phi: coordinate cap " + std::to_string(coord_cap) +
                                         " is active at " + to_string(InfChar::from_ints(l)));
            found[t].insert(pack(l));
            return;
          }
          for (std::int64_t v = 0; v <= coord_cap; ++v) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < k; ++i) {
              forms[level + 1][i] = forms[level][i] + v * frame[i][level];
              s += forms[level + 1][i] * forms[level + 1][i];
            }
            if (!below(s)) break;
            l[level] = v;
            rec(level + 1);
          }
          l[level] = 0;
        };
        rec(0);
      }
    } catch (const std::exception& e) {
      errors[t] = e.what();
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (!e.empty()) throw std::runtime_error(e);

  std::vector<std::uint64_t> keys;
  for (auto& s : found) keys.insert(keys.end(), s.begin(), s.end());
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  PhiResult out;
  out.involutions = list.size();
  out.phi.reserve(keys.size());
  for (auto key : keys) {
    Ints7 v{};
    for (int i = 6; i >= 0; --i) {
      v[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(key & 127u);
      key >>= 7;
    }
    const auto mx = *std::max_element(v.begin(), v.end());
    ++out.partition[mx];
    out.max_coordinate = std::max(out.max_coordinate, mx);
    out.phi.push_back(InfChar::from_ints(v));
  }
  return out;
}

HjCounts hj_filter(const std::vector<AtlasParameter>& params, const std::vector<KgbRecord>& kgb) {
  std::map<std::int64_t, const KgbRecord*> by_id;
  for (const auto& r : kgb) by_id[r.id] = &r;
  HjCounts c;
  const Rational old_bound(399, 2), new_bound(94);
  for (const auto& p : params) {
    ++c.total;
    const auto it = by_id.find(p.x);
    const bool fs = it != by_id.end() ? it->second->fully_supported() : p.fully_supported;
    if (!fs) continue;
    ++c.fully_supported;
    const Rational n = norm_sq_nu(p.nu);
    if (n <= old_bound) ++c.old_bound;
    if (n < new_bound) ++c.new_bound;
  }
  return c;
}

bool TableRowReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

TableRowReport verify_table_row(const TableRow& row) {
  TableRowReport rep;
  rep.x = row.x;
  const auto& d = root_datum();
  const AmbientVector lam = to_ambient(row.inf_char);
  const Rational lam_sq = norm_sq(lam);

  std::vector<KType> ks;
  {
    Check c{"k-type integrality", true, ""};
    for (const auto& t : row.spin_lkts) {
      bool ok = true;
      for (std::size_t i = 0; i < 6; ++i) ok = ok && t[i] >= 0;
      ok = ok && is_k_type(t);
      if (ok) {
        ks.emplace_back(t);
      } else {
        c.passed = false;
        std::ostringstream s;
        s << "not a K-type: [";
        for (std::size_t i = 0; i < 7; ++i) s << (i ? "," : "") << t[i];
        s << "] ";
        c.detail += s.str();
      }
    }
    rep.checks.push_back(c);
  }
  {
    Check c{"spin norm equals ||Lambda||^2", true, ""};
    Check w{"PRV witness conjugate to Lambda", true, ""};
    const AmbientVector lam_dom = dominant_rep(lam, Group::G).dominant;
    for (const auto& k : ks) {
      const SpinDatum sd = spin_datum(k);
      if (sd.spin_norm_sq != lam_sq) {
        c.passed = false;
        c.detail += to_string(k) + " has " + to_string(sd.spin_norm_sq) + " vs " + to_string(lam_sq) + "; ";
      }
      bool any = false;
      for (const auto& prv : sd.prv_weights)
        any = any || dominant_rep(to_ambient(prv) + d.rho_c, Group::G).dominant == lam_dom;
      if (!any) {
        w.passed = false;
        w.detail += to_string(k) + " has no achieving chamber with {mu - rho_n^(j)} + rho_c in W Lambda; ";
      }
    }
    if (ks.size() != row.spin_lkts.size()) {
      c.passed = w.passed = false;
      c.detail += "skipped non K-types; ";
    }
    rep.checks.push_back(c);
    rep.checks.push_back(w);
  }
  {
    Check c{"Lambda dominant and hp-admissible", true, ""};
    if (!is_dominant(lam, Group::G)) {
      c.passed = false;
      c.detail += to_string(row.inf_char) + " is not dominant; ";
    }
    if (!hp_admissible(row.inf_char)) {
      c.passed = false;
      c.detail += to_string(row.inf_char) + " fails the admissibility sums; ";
    }
    rep.checks.push_back(c);
  }
  {
    Check c{"spin LKTs distinct", true, ""};
    auto sorted = row.spin_lkts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      c.passed = false;
      c.detail = "repeated spin LKT";
    }
    rep.checks.push_back(c);
  }
  return rep;
}

std::vector<TableRow> expand_primed_rows(const std::vector<TableRow>& rows) {
  std::vector<TableRow> out;
  for (const auto& r : rows) {
    out.push_back(r);
    if (!r.x_prime) continue;
    TableRow p = r;
    p.x = *r.x_prime;
    p.x_prime.reset();
    for (auto& t : p.spin_lkts) t = {t[5], t[1], t[4], t[3], t[2], t[0], -t[6]};
    out.push_back(std::move(p));
  }
  return out;
}

StringCounts count_strings(const std::vector<DiracCount>& counts, bool allow_partial) {
  StringCounts out;
  for (const auto& c : counts) out.n_of_s[c.subset] = c.count;
  std::array<std::int64_t, 7> sums{};
  std::array<bool, 7> complete{};
  complete.fill(true);
  for (unsigned mask = 0; mask < 127; ++mask) {
    std::vector<int> s;
    for (int i = 0; i < 7; ++i)
      if (mask & (1u << i)) s.push_back(i);
    const auto it = out.n_of_s.find(s);
    if (it == out.n_of_s.end()) {
      out.missing.push_back(s);
      complete[s.size()] = false;
    } else {
      sums[s.size()] += it->second;
    }
  }
  if (!out.missing.empty() && !allow_partial)
    throw std::runtime_error("count_strings: " + std::to_string(out.missing.size()) + " proper subsets have no N(S)");
  bool all = true;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < 7; ++i) {
    if (complete[i]) out.n_i[i] = sums[i];
    all = all && complete[i];
    total += sums[i];
  }
  if (all) out.total = total;
  return out;
}

}  // namespace e7dirac
