// Searches small digraphs for the labelings that reproduce the two
// transcribed activity tables (data/table1.tsv, data/table2.tsv) and prints
// every match in the input file formats.
//
//   omtutte-reconstruct <table1.tsv> <table2.tsv>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "omt/error.hpp"
#include "omt/io.hpp"

namespace {

std::string slurp(const char* path) {
  std::ifstream in(path);
  if (!in) throw omt::InputError(std::string("cannot open ") + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<omt::ThetaRecord> by_subset(std::vector<omt::ThetaRecord> rows) {
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.a < b.a; });
  return rows;
}

std::string vertex(int v) { return std::string(1, static_cast<char>('a' + v)); }

std::string digraph_text(const omt::Digraph& g) {
  std::string out;
  for (const auto& arc : g.arcs) out += std::to_string(arc.label) + " " + arc.tail + " " + arc.head + "\n";
  return out;
}

// Arc k may use any vertex already seen or the next unused one, which lists
// every digraph once up to renaming vertices.
void grow(std::vector<std::pair<int, int>>& arcs, int used, std::size_t count,
          const std::function<void(const std::vector<std::pair<int, int>>&)>& visit) {
  if (arcs.size() == count) {
    visit(arcs);
    return;
  }
  for (int t = 0; t <= used && t < 26; ++t)
    for (int h = 0; h <= std::max(used, t + 1) && h < 26; ++h) {
      if (h == t) continue;
      arcs.emplace_back(t, h);
      grow(arcs, std::max({used, t + 1, h + 1}), count, visit);
      arcs.pop_back();
    }
}

omt::Digraph to_digraph(const std::vector<std::pair<int, int>>& arcs) {
  omt::Digraph g;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    g.arcs.push_back({static_cast<int>(i + 1), vertex(arcs[i].first), vertex(arcs[i].second)});
  return g;
}

int search_example1(const std::vector<omt::ThetaRecord>& table) {
  const auto want = omt::parse_polynomial("x^2 + x*y + y^2 + x + y");
  int found = 0;
  std::vector<std::pair<int, int>> arcs;
  grow(arcs, 0, 4, [&](const auto& a) {
    const auto m = omt::from_digraph(to_digraph(a));
    if (m.size() != 4 || omt::tutte_closed(m) != want) return;
    const auto report = omt::expansion_sum(omt::OrientedMatroid(m));
    if (report.rows != table) return;
    std::cout << "# table 1 match " << ++found << "\n" << digraph_text(to_digraph(a));
  });
  return found;
}

int search_example2(const std::vector<omt::ThetaRecord>& table) {
  int found = 0;
  std::vector<std::pair<int, int>> arcs;
  grow(arcs, 0, 5, [&](const auto& a) {
    const omt::Digraph g = to_digraph(a);
    const auto m = omt::from_digraph(g);
    if (m.rank() != 4) return;
    // the O column depends on M alone
    const auto rows = omt::expansion_sum(omt::OrientedMatroid(m)).rows;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].o != table[i].o) return;
    int vertices = 0;
    for (auto [t, h] : a) vertices = std::max({vertices, t + 1, h + 1});
    for (int s1 = 0; s1 < vertices; ++s1)
      for (int t1 = s1 + 1; t1 < vertices; ++t1)
        for (int s2 = 0; s2 < vertices; ++s2)
          for (int t2 = s2 + 1; t2 < vertices; ++t2) {
            if (std::make_pair(s2, t2) < std::make_pair(s1, t1)) continue;
            omt::Digraph n = g;
            n.arcs.push_back({6, vertex(s1), vertex(t1)});
            n.arcs.push_back({7, vertex(s2), vertex(t2)});
            const std::vector<int> contract{6, 7};
            try {
              const auto p = omt::from_major(omt::from_digraph(n), contract);
              if (p.mprime().realization().rank() != 2) continue;
              if (omt::expansion_sum(p).rows != table) continue;
            } catch (const omt::Error&) {
              continue;
            }
            std::cout << "# table 2 match " << ++found << "\nmajor: digraph\n"
                      << digraph_text(n) << "contract: 6 7\n";
          }
  });
  return found;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: omtutte-reconstruct <table1.tsv> <table2.tsv>\n";
    return 2;
  }
  try {
    const auto t1 = by_subset(omt::parse_tsv(omt::GroundSet::iota(4), slurp(argv[1])));
    const auto t2 = by_subset(omt::parse_tsv(omt::GroundSet::iota(5), slurp(argv[2])));
    const int f1 = search_example1(t1);
    const int f2 = search_example2(t2);
    std::cout << "# matches: table 1 " << f1 << ", table 2 " << f2 << "\n";
    return f1 > 0 && f2 > 0 ? 0 : 1;
  } catch (const omt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
