#include "e7dirac/acceptance.hpp"
#include "e7dirac/atlas_ingest.hpp"
#include "e7dirac/norms.hpp"
#include "e7dirac/screening.hpp"
#include "e7dirac/weyl.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

using namespace e7dirac;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kNoFixture = 3 };

struct Config {
  std::string fixtures;
  std::string format = "tsv";
  std::int64_t height_cap = 400;
  std::int64_t coord_cap = 64;
  unsigned jobs = 1;
};

class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out, bool pretty) const {
    std::vector<std::size_t> w(rows_[0].size(), 0);
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (pretty) {
          out << r[i];
          if (i + 1 < r.size()) out << std::string(w[i] - r[i].size() + 2, ' ');
        } else {
          out << (i ? "\t" : "") << r[i];
        }
      }
      out << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string ints(const std::array<std::int64_t, 7>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < 7; ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::array<std::int64_t, 7> parse_ints7(const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == '[' || c == ']' || c == ' '; }), t.end());
  std::array<std::int64_t, 7> v{};
  std::istringstream in(t);
  std::string tok;
  std::size_t n = 0;
  while (std::getline(in, tok, ',')) {
    if (n == 7) throw CLI::ValidationError("expected 7 integers: " + text);
    v[n++] = std::stoll(tok);
  }
  if (n != 7) throw CLI::ValidationError("expected 7 integers: " + text);
  return v;
}

struct NoFixture : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::filesystem::path fixture(const Config& cfg, const std::string& override_path, const std::string& name) {
  if (!override_path.empty()) return override_path;
  std::string dir = cfg.fixtures;
  if (dir.empty())
    if (const char* env = std::getenv("DIRAC_FIXTURES")) dir = env;
  if (dir.empty()) throw NoFixture("no fixture directory: pass --fixtures or set DIRAC_FIXTURES");
  return std::filesystem::path(dir) / name;
}

template <class F>
auto load(F f) {
  try {
    return f();
  } catch (const MissingFixture& e) {
    throw NoFixture(e.what());
  }
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"E7(-25) Dirac series toolkit"};
  app.require_subcommand(1);
  app.add_option("--fixtures", cfg.fixtures, "fixture directory (fallback: $DIRAC_FIXTURES)");
  app.add_option("--format", cfg.format)->check(CLI::IsMember({"tsv", "pretty"}));
  app.add_option("--height-cap", cfg.height_cap)->check(CLI::PositiveNumber);
  app.add_option("--coord-cap", cfg.coord_cap)->check(CLI::PositiveNumber);
  app.add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);
  app.fallthrough();

  auto* chambers_cmd = app.add_subcommand("chambers", "the 56 positive systems containing those of k");
  auto* usmall_cmd = app.add_subcommand("usmall", "u-small K-types");
  auto* certs_cmd = app.add_subcommand("certs", "u-small K-types with spin^2 - lambda^2 >= 94");
  auto* omega_cmd = app.add_subcommand("omega", "dominant integral Lambda with 108 <= ||Lambda||^2 <= 469/2");
  auto* phi_cmd = app.add_subcommand("phi", "Phi census from fully supported involutions");
  bool phi_list = false;
  phi_cmd->add_flag("--list", phi_list, "print every member");
  auto* hj_cmd = app.add_subcommand("hj-example", "Helgason-Johnson filter counts for one parameter file");
  std::string hj_params, hj_kgb;
  hj_cmd->add_option("--params", hj_params, "default: params_1011108.txt");
  hj_cmd->add_option("--kgb", hj_kgb, "default: kgb_1011108.txt");
  auto* spin_cmd = app.add_subcommand("spin-lkt", "spin norms over a branching fixture");
  std::string spin_branching, spin_lambda = "1,0,1,1,0,1,0";
  spin_cmd->add_option("--branching", spin_branching, "default: branching_1011010.txt");
  spin_cmd->add_option("--lambda", spin_lambda, "infinitesimal character, zeta coordinates");
  auto* cand_cmd = app.add_subcommand("dirac-candidates", "K-dominant w Lambda - rho_c, w in W^1");
  std::string cand_lambda = "1,1,1,0,1,1,1";
  cand_cmd->add_option("--lambda", cand_lambda, "infinitesimal character, zeta coordinates");
  auto* strings_cmd = app.add_subcommand("strings", "string counts N_i from dirac_counts.txt");
  auto* verify_cmd = app.add_subcommand("verify", "acceptance criteria 1-13");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  const bool pretty = cfg.format == "pretty";

  try {
    if (chambers_cmd->parsed()) {
      Table t({"j", "rho_j", "rho_n_j", "rho_n_j_varpi"});
      for (const auto& c : chambers())
        t.add({std::to_string(c.index), to_string(c.rho_j), to_string(c.rho_n_j), ints(varpi_ints(c.rho_n_j))});
      t.print(out, pretty);
    } else if (usmall_cmd->parsed()) {
      const auto c = enumerate_usmall_ktypes(cfg.jobs);
      Table t({"ktype"});
      for (const auto& k : c.ktypes) t.add({to_string(k)});
      t.print(out, pretty);
      err << c.ktypes.size() << " u-small K-types\n";
    } else if (certs_cmd->parsed()) {
      const auto certs = compute_certs(enumerate_usmall_ktypes(cfg.jobs).ktypes, cfg.jobs);
      Table t({"ktype", "spin_norm_sq", "lambda_norm_sq", "gap"});
      for (const auto& e : certs)
        t.add({to_string(e.ktype), to_string(e.spin_norm_sq), to_string(e.lambda_norm_sq), to_string(e.gap)});
      t.print(out, pretty);
      err << certs.size() << " rows\n";
    } else if (omega_cmd->parsed()) {
      const auto omega = enumerate_omega();
      Table t({"lambda", "norm_sq"});
      for (const auto& l : omega) t.add({to_string(l), to_string(norm_sq(to_ambient(l)))});
      t.print(out, pretty);
      err << omega.size() << " infinitesimal characters\n";
    } else if (phi_cmd->parsed()) {
      const auto kgb = load([&] { return load_kgb(fixture(cfg, "", "kgb_fs_involutions.txt")); });
      const auto phi = enumerate_phi(kgb, cfg.coord_cap, Rational(94), cfg.jobs);
      if (phi_list) {
        Table t({"lambda", "max"});
        for (const auto& l : phi.phi) {
          Rational m = l.c[0];
          for (const auto& x : l.c) m = std::max(m, x);
          t.add({to_string(l), to_string(m)});
        }
        t.print(out, pretty);
      } else {
        Table t({"k", "count"});
        for (const auto& [k, n] : phi.partition) t.add({"Phi" + std::to_string(k), std::to_string(n)});
        t.add({"total", std::to_string(phi.phi.size())});
        t.print(out, pretty);
      }
      err << phi.involutions << " involutions\n";
    } else if (hj_cmd->parsed()) {
      const auto params = load([&] { return load_params(fixture(cfg, hj_params, "params_1011108.txt")); });
      const auto kgb = load([&] { return load_kgb(fixture(cfg, hj_kgb, "kgb_1011108.txt")); });
      const auto c = hj_filter(params, kgb);
      Table t({"total", "fully_supported", "nu_sq_le_399/2", "nu_sq_lt_94"});
      t.add({std::to_string(c.total), std::to_string(c.fully_supported), std::to_string(c.old_bound),
             std::to_string(c.new_bound)});
      t.print(out, pretty);
    } else if (spin_cmd->parsed()) {
      const auto br = load([&] { return load_branching(fixture(cfg, spin_branching, "branching_1011010.txt")); });
      const InfChar lam = InfChar::from_ints(parse_ints7(spin_lambda));
      std::vector<std::pair<KType, std::int64_t>> ks;
      Table t({"ktype", "mult", "height", "spin_norm_sq", "dirac"});
      for (const auto& e : br) {
        if (e.height > cfg.height_cap) continue;
        ks.push_back({e.ktype, e.multiplicity});
        t.add({to_string(e.ktype), std::to_string(e.multiplicity), std::to_string(e.height),
               to_string(spin_norm_sq(e.ktype)), to_string(dirac_inequality_holds(lam, e.ktype))});
      }
      t.print(out, pretty);
      if (!ks.empty()) {
        const auto r = spin_lkts(ks, lam);
        out << "min_spin_norm_sq\t" << to_string(r.min_spin_sq) << "\nlambda_norm_sq\t"
            << to_string(norm_sq(to_ambient(lam))) << "\nhd_nonzero\t" << (r.hd_nonzero ? "true" : "false") << '\n';
      }
    } else if (cand_cmd->parsed()) {
      const auto s = dirac_candidate_gammas(InfChar::from_ints(parse_ints7(cand_lambda)));
      Table t({"gamma", "chamber", "spin_norm_sq"});
      for (const auto& c : s.gammas) {
        std::string sn = "-";
        if (is_k_type(c.gamma)) sn = to_string(spin_norm_sq(KType(c.gamma)));
        t.add({ints(c.gamma), std::to_string(c.chamber), sn});
      }
      t.print(out, pretty);
      err << s.gammas.size() << " candidates for " << to_string(s.inf_char) << '\n';
    } else if (strings_cmd->parsed()) {
      const auto counts = load([&] { return load_dirac_counts(fixture(cfg, "", "dirac_counts.txt")); });
      const auto s = count_strings(counts, true);
      Table t({"i", "N_i"});
      for (std::size_t i = 0; i < 7; ++i) t.add({std::to_string(i), s.n_i[i] ? std::to_string(*s.n_i[i]) : "?"});
      t.add({"total", s.total ? std::to_string(*s.total) : "?"});
      t.print(out, pretty);
      if (!s.missing.empty()) {
        err << s.missing.size() << " proper subsets missing from the fixture\n";
        return kMismatch;
      }
    } else if (verify_cmd->parsed()) {
      AcceptanceOptions opt;
      std::string dir = cfg.fixtures;
      if (dir.empty())
        if (const char* env = std::getenv("DIRAC_FIXTURES")) dir = env;
      opt.fixture_dir = dir;
      opt.jobs = cfg.jobs;
      opt.height_cap = cfg.height_cap;
      opt.coord_cap = cfg.coord_cap;
      int failed = 0;
      run_acceptance(opt, [&](const CriterionResult& r) {
        failed += !r.passed;
        out << format_result(r) << std::endl;
      });
      out << (13 - failed) << "/13 criteria passed\n";
      return failed ? kMismatch : kOk;
    }
  } catch (const NoFixture& e) {
    err << "error: " << e.what() << '\n';
    return kNoFixture;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  }
  return kOk;
}

int main(int argc, char** argv) { return run(argc, argv, std::cout, std::cerr); }
