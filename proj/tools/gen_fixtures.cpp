// Writes the derived KGB fixtures:
//   kgb_fs_involutions.txt  fully supported involutions s_b1...s_bk for
//                           orthogonal positive roots (single roots, pairs,
//                           and the triples whose centralizer has 12 positive roots)
//   kgb_named.txt           involutions of the three named KGB elements
// Usage: gen_fixtures <output-dir>

#include "e7dirac/atlas_ingest.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

using namespace e7dirac;

namespace {

using RootSet = std::vector<std::size_t>;

IntMatrix7 theta_of(const RootSet& s) {
  const auto& d = root_datum();
  IntMatrix7 t{};
  for (std::size_t c = 0; c < 7; ++c) {
    AmbientVector v = d.fundamental_weights[c];
    for (auto i : s) v = reflect(v, d.positive_roots[i]);
    const Coords7 z = from_ambient(Basis::Zeta, v);
    for (std::size_t r = 0; r < 7; ++r) t[r][c] = to_int64(z[r]);
  }
  return t;
}

std::vector<int> support_of(const RootSet& s) {
  const auto& d = root_datum();
  std::set<int> sup;
  for (auto i : s)
    for (int k = 0; k < 7; ++k)
      if (inner(d.positive_roots[i], d.fundamental_weights[static_cast<std::size_t>(k)]) != 0) sup.insert(k);
  return {sup.begin(), sup.end()};
}

int centralizer(const RootSet& s) {
  const auto& d = root_datum();
  int n = 0;
  for (const auto& r : d.positive_roots) {
    bool o = true;
    for (auto i : s) o = o && inner(r, d.positive_roots[i]) == 0;
    n += o;
  }
  return n;
}

std::string format(std::int64_t id, const std::vector<int>& sup, const IntMatrix7& t) {
  std::string out = std::to_string(id) + " | ";
  if (sup.size() == 7) {
    out += "full";
  } else if (sup.empty()) {
    out += "empty";
  } else {
    for (std::size_t i = 0; i < sup.size(); ++i) out += (i ? "," : "") + std::to_string(sup[i]);
  }
  out += " | ";
  for (std::size_t r = 0; r < 7; ++r) {
    for (std::size_t c = 0; c < 7; ++c) out += (c ? "," : "") + std::to_string(t[r][c]);
    if (r < 6) out += ";";
  }
  return out;
}

std::vector<RootSet> orthogonal_sets() {
  const auto& R = root_datum().positive_roots;
  std::vector<RootSet> sets;
  for (std::size_t i = 0; i < R.size(); ++i) {
    sets.push_back({i});
    for (std::size_t j = i + 1; j < R.size(); ++j) {
      if (inner(R[i], R[j]) != 0) continue;
      sets.push_back({i, j});
      for (std::size_t k = j + 1; k < R.size(); ++k)
        if (inner(R[i], R[k]) == 0 && inner(R[j], R[k]) == 0 && centralizer({i, j, k}) == 12)
          sets.push_back({i, j, k});
    }
  }
  return sets;
}

Coords7 coords(const std::array<long, 7>& num, long den) {
  Coords7 c;
  for (std::size_t i = 0; i < 7; ++i) {
    c[i] = Rational(num[i], den);
    c[i].canonicalize();
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_fixtures <output-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  const auto sets = orthogonal_sets();

  std::set<IntMatrix7> seen;
  std::ofstream fs(dir / "kgb_fs_involutions.txt");
  fs << "# generated by gen_fixtures; ids are synthetic\n"
     << "# fully supported involutions of W, products of reflections in orthogonal positive roots\n";
  std::int64_t id = 100000;
  std::size_t written = 0;
  for (const auto& s : sets) {
    const auto sup = support_of(s);
    if (sup.size() != 7) continue;
    const auto t = theta_of(s);
    if (!seen.insert(t).second) continue;
    fs << format(id++, sup, t) << "\n";
    ++written;
  }

  // Named elements: theta nu = -nu and (1 + theta) lambda / 2 + nu conjugate to the given Lambda.
  const auto& d = root_datum();
  struct Named {
    std::int64_t id;
    Coords7 lambda, nu, inf;
  };
  const Coords7 rho_z = from_ambient(Basis::Zeta, d.rho);
  const Named named[] = {
      {3016, rho_z, coords({4, 0, 0, 0, 0, 4, 1}, 1), coords({1, 1, 1, 1, 1, 1, 1}, 1)},
      {2989, coords({3, 2, 2, -1, 1, 1, 2}, 1), coords({8, 5, 5, -5, 0, 0, 5}, 2), coords({1, 1, 1, 0, 1, 1, 1}, 1)},
      {2988, coords({3, 2, 2, -1, 1, 1, 2}, 1), coords({8, 5, 5, -5, 0, 0, 5}, 2), coords({1, 1, 1, 0, 1, 1, 1}, 1)},
  };
  std::ofstream nf(dir / "kgb_named.txt");
  nf << "# generated by gen_fixtures; theta derived from the parameter data\n";
  for (const auto& n : named) {
    const AmbientVector lam = to_ambient(Basis::Zeta, n.lambda);
    const AmbientVector nu = to_ambient(Basis::Zeta, n.nu);
    const AmbientVector target = to_ambient(Basis::Zeta, n.inf);
    std::set<IntMatrix7> hits;
    RootSet hit;
    for (const auto& s : sets) {
      AmbientVector tn = nu, tl = lam;
      for (auto i : s) {
        tn = reflect(tn, d.positive_roots[i]);
        tl = reflect(tl, d.positive_roots[i]);
      }
      if (tn != -nu) continue;
      const AmbientVector inf = Rational(1, 2) * (lam + tl) + nu;
      if (dominant_rep(inf, Group::G).dominant != target) continue;
      if (hits.insert(theta_of(s)).second) hit = s;
    }
    if (hits.size() != 1) {
      std::cerr << "KGB " << n.id << ": " << hits.size() << " candidate involutions\n";
      return 1;
    }
    nf << format(n.id, support_of(hit), *hits.begin()) << "\n";
  }
  std::cout << written << " fully supported involutions written to " << (dir / "kgb_fs_involutions.txt") << "\n";
  return 0;
}
