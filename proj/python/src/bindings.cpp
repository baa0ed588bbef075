#include "e7dirac/acceptance.hpp"
#include "e7dirac/atlas_ingest.hpp"
#include "e7dirac/norms.hpp"
#include "e7dirac/screening.hpp"
#include "e7dirac/weyl.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace e7dirac;

namespace {

using I7 = std::array<std::int64_t, 7>;

py::object frac(const Rational& q) { return py::module_::import("fractions").attr("Fraction")(to_string(q)); }

py::list fracs(const Coords7& c) {
  py::list out;
  for (const auto& x : c) out.append(frac(x));
  return out;
}

py::list fracs(const AmbientVector& v) {
  py::list out;
  for (const auto& x : v.coords) out.append(frac(x));
  return out;
}

Rational rat(const py::handle& h) {
  Rational q = parse_rational(py::str(h).cast<std::string>());
  q.canonicalize();
  return q;
}

InfChar inf_char(const std::vector<py::object>& v) {
  if (v.size() != 7) throw py::value_error("expected 7 coordinates");
  Coords7 c;
  for (std::size_t i = 0; i < 7; ++i) c[i] = rat(v[i]);
  return InfChar(c);
}

py::tuple tup(const I7& v) {
  py::tuple t(7);
  for (std::size_t i = 0; i < 7; ++i) t[i] = v[i];
  return t;
}

py::int_ big(const Integer& z) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10))); }

}  // namespace

PYBIND11_MODULE(_e7dirac, m) {
  m.doc() = "Exact computations for the Dirac series of E7(-25)";

  static py::exception<MissingFixture> missing(m, "MissingFixture", PyExc_FileNotFoundError);
  static py::exception<ParseError> parse(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const MissingFixture& e) {
      py::set_error(missing, e.what());
    } catch (const ParseError& e) {
      py::set_error(parse, e.what());
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  // structure
  m.def("chambers", [] {
    py::list out;
    for (const auto& c : chambers()) {
      py::dict d;
      d["index"] = c.index;
      d["rho_j"] = fracs(c.rho_j);
      d["rho_n_j"] = fracs(c.rho_n_j);
      d["rho_n_j_varpi"] = tup(varpi_ints(c.rho_n_j));
      out.append(d);
    }
    return out;
  });
  m.def("rho", [] { return fracs(root_datum().rho); });
  m.def("is_k_type", [](const I7& v) { return is_k_type(v); });
  m.def("contragredient", [](const I7& v) { return tup(contragredient(KType(v)).c); });
  m.def("weyl_dim_k", [](const I7& v) { return big(weyl_dim_k(KType(v))); });
  m.def("spin_module_dimension", [] {
    Integer t = 0;
    for (const auto& x : spin_module_summands()) t += x;
    return big(t);
  });

  // norms
  m.def("norm_sq", [](const std::vector<py::object>& lam) { return frac(norm_sq(to_ambient(inf_char(lam)))); },
        py::arg("inf_char"));
  m.def("spin_norm_sq", [](const I7& v) { return frac(spin_norm_sq(KType(v))); });
  m.def("lambda_norm_sq", [](const I7& v) { return frac(lambda_datum(KType(v)).lambda_norm_sq); });
  m.def("is_usmall", [](const I7& v) { return is_usmall(KType(v)); });
  m.def("atlas_height", [](const I7& v) { return atlas_height(KType(v)); });
  m.def("dirac_inequality", [](const std::vector<py::object>& lam, const I7& mu) {
    return std::string(to_string(dirac_inequality_holds(inf_char(lam), KType(mu))));
  });
  m.def("hp_admissible", [](const std::vector<py::object>& lam) { return hp_admissible(inf_char(lam)); });

  // screening
  m.def(
      "usmall_ktypes",
      [](unsigned jobs) {
        UsmallCensus c;
        {
          py::gil_scoped_release nogil;
          c = enumerate_usmall_ktypes(jobs);
        }
        py::list out;
        for (const auto& k : c.ktypes) out.append(tup(k.c));
        return out;
      },
      py::arg("jobs") = 1);
  m.def(
      "certs",
      [](unsigned jobs) {
        std::vector<CertsEntry> certs;
        {
          py::gil_scoped_release nogil;
          certs = compute_certs(enumerate_usmall_ktypes(jobs).ktypes, jobs);
        }
        py::list out;
        for (const auto& e : certs)
          out.append(py::make_tuple(tup(e.ktype.c), frac(e.spin_norm_sq), frac(e.lambda_norm_sq), frac(e.gap)));
        return out;
      },
      py::arg("jobs") = 1);
  m.def("omega", [] {
    py::list out;
    for (const auto& l : enumerate_omega()) out.append(fracs(l.c));
    return out;
  });
  m.def("dirac_candidates", [](const std::vector<py::object>& lam) {
    py::list out;
    for (const auto& c : dirac_candidate_gammas(inf_char(lam)).gammas) out.append(py::make_tuple(tup(c.gamma), c.chamber));
    return out;
  });
  m.def("spin_lkts", [](const std::vector<std::pair<I7, std::int64_t>>& ks, const std::vector<py::object>& lam) {
    std::vector<std::pair<KType, std::int64_t>> in;
    for (const auto& [k, n] : ks) in.push_back({KType(k), n});
    const auto r = spin_lkts(in, inf_char(lam));
    return py::make_tuple(frac(r.min_spin_sq), r.achievers, r.hd_nonzero);
  });
  m.def("dirac_index_parity", [](const I7& lkt, const std::vector<I7>& spins) {
    std::vector<KType> s;
    for (const auto& k : spins) s.emplace_back(k);
    const auto r = dirac_index_parity(KType(lkt), s);
    py::list vals;
    for (const auto& v : r.values) vals.append(big(v));
    return py::make_tuple(vals, r.no_cancellation);
  });
  m.def(
      "ularge_gap_scan",
      [](std::int64_t cap, unsigned jobs) {
        UlargeGapScan s;
        {
          py::gil_scoped_release nogil;
          s = scan_ularge_gap(cap, jobs);
        }
        py::dict d;
        d["ktypes"] = s.ktypes;
        d["usmall"] = s.usmall;
        d["ularge"] = s.ularge;
        d["max_gap"] = frac(s.max_gap);
        d["violations"] = s.violations.size();
        return d;
      },
      py::arg("height_cap") = 400, py::arg("jobs") = 1);

  // fixtures
  m.def(
      "phi_census",
      [](const std::filesystem::path& kgb, std::int64_t coord_cap, unsigned jobs) {
        const auto records = load_kgb(kgb);
        PhiResult r;
        {
          py::gil_scoped_release nogil;
          r = enumerate_phi(records, coord_cap, Rational(94), jobs);
        }
        py::dict d;
        d["size"] = r.phi.size();
        d["partition"] = r.partition;
        d["involutions"] = r.involutions;
        py::list phi1;
        for (const auto& l : r.phi) {
          bool one = true;
          for (const auto& x : l.c) one = one && x <= 1;
          if (one) phi1.append(fracs(l.c));
        }
        d["phi1"] = phi1;
        return d;
      },
      py::arg("kgb_file"), py::arg("coord_cap") = 64, py::arg("jobs") = 1);
  m.def("nu_norms", [](const std::filesystem::path& params, const std::filesystem::path& kgb) {
    const auto ps = load_params(params);
    const auto ks = load_kgb(kgb);
    py::dict d;
    for (const auto& p : ps) {
      for (const auto& k : ks)
        if (k.id == p.x) {
          if (nu_from_involution(infinitesimal_char(p, k), k) != p.nu)
            throw std::runtime_error("nu not reproduced for x = " + std::to_string(p.x));
        }
      d[py::int_(p.x)] = frac(norm_sq_nu(p.nu));
    }
    return d;
  });
  m.def("verify_tables", [](const std::filesystem::path& tables) {
    std::vector<std::pair<std::int64_t, bool>> out;
    for (const auto& r : expand_primed_rows(load_table(tables))) out.push_back({r.x, verify_table_row(r).passed()});
    return out;
  });
  m.def("string_counts", [](const std::filesystem::path& counts) {
    const auto s = count_strings(load_dirac_counts(counts), true);
    py::dict d;
    d["n_i"] = s.n_i;
    d["total"] = s.total;
    d["missing"] = s.missing.size();
    return d;
  });

  m.def(
      "run_criterion",
      [](int id, const std::filesystem::path& fixtures, unsigned jobs) {
        AcceptanceOptions opt;
        opt.fixture_dir = fixtures;
        opt.jobs = jobs;
        CriterionResult r;
        {
          py::gil_scoped_release nogil;
          r = run_criterion(id, opt);
        }
        return py::make_tuple(r.passed, r.detail);
      },
      py::arg("id"), py::arg("fixtures") = std::filesystem::path(), py::arg("jobs") = 1);
}
