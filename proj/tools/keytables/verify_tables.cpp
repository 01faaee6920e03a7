// Checks family<TAB>key rows with the real propagator on every supported
// pair up to a base order, optionally drops rows greedily, writes the rows kept.
//
//   verify_tables IN.tsv MAX_BASE OUT.tsv [min]
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>
#include "otisham/constructive.hpp"
using namespace otisham;

static bool build_with(std::size_t m, std::size_t n, const std::set<std::string>& keys) {
  detail::FamilyLayout layout(m, n);
  const Graph base = gen_bowtie(m, n);
  const Graph g = otis(base);
  const std::size_t last = m + n - 1;
  EdgeSeed seed;
  for (std::size_t x = 1; x <= last; ++x)
    for (const auto& e : base.edges())
      if (keys.count(layout.edge_key(x, e.u + 1, e.v + 1)))
        seed.deleted.push_back(detail::otis_base_edge(g, last, x, e.u + 1, e.v + 1));
  Propagator p;
  auto r = p.run(EdgeAssignment(g), seed);
  if (std::holds_alternative<Contradiction>(r)) return false;
  auto& a = std::get<EdgeAssignment>(r);
  if (!a.complete()) return false;
  return is_hamiltonian_cycle(g, a.forced_cycle(0));
}

int main(int argc, char** argv) {
  if (argc < 4) {
    std::cerr << "usage: verify_tables IN.tsv MAX_BASE OUT.tsv [min]\n";
    return 4;
  }
  std::size_t limit = std::stoul(argv[2]);
  bool minimize = argc > 4 && std::string(argv[4]) == "min";
  std::map<std::string, std::vector<std::string>> fam;
  std::ifstream in(argv[1]);
  for (std::string f, k; in >> f >> k;) fam[f].push_back(k);
  std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> sizes;
  for (std::size_t m = 3; m <= limit; ++m)
    for (std::size_t n = 3; m + n - 1 <= limit; ++n) {
      if (!BowtieParams{m, n}.is_normalized()) continue;
      auto cls = classify(m, n);
      if (!has_key_edge_table(cls)) continue;
      sizes[detail::FamilyLayout(m, n).family()].push_back({m, n});
    }
  std::ofstream out(argv[3]);
  int bad = 0;
  for (auto& [name, pairs] : sizes) {
    if (!fam.count(name)) { std::cout << "MISSING " << name << "\n"; ++bad; continue; }
    std::vector<std::string> keys = fam[name];
    std::set<std::string> cur(keys.begin(), keys.end());
    auto all_ok = [&](const std::set<std::string>& ks) {
      for (auto [m, n] : pairs) if (!build_with(m, n, ks)) return false;
      return true;
    };
    if (!all_ok(cur)) {
      for (auto [m, n] : pairs) if (!build_with(m, n, cur)) std::cout << "FAIL " << name << " " << m << "," << n << "\n";
      ++bad;
    } else if (minimize) {
      for (auto it = keys.rbegin(); it != keys.rend(); ++it) {
        cur.erase(*it);
        if (!all_ok(cur)) cur.insert(*it);
      }
    }
    std::cout << name << " " << pairs.size() << " sizes, keys " << keys.size() << " -> " << cur.size() << std::endl;
    for (auto& k : cur) out << name << "\t" << k << "\n";
  }
  return bad ? 1 : 0;
}
