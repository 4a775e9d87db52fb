#include "support.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "omt/error.hpp"

namespace omt::test {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(OMT_DATA_DIR) + "/" + name);
  if (!in) throw InputError("missing data file " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Realization example1() { return from_digraph(parse_digraph(read_data("example1.dig"))); }
Perspective example2() { return parse_perspective(read_data("example2.persp")); }
Realization triangle() { return from_digraph(parse_digraph(read_data("triangle.dig"))); }
Perspective path_parallel() { return parse_perspective(read_data("path_parallel.persp")); }

std::vector<ThetaRecord> table(const std::string& name, std::size_t n) {
  return by_subset(parse_tsv(GroundSet::iota(n), read_data(name)));
}

std::vector<ThetaRecord> by_subset(std::vector<ThetaRecord> rows) {
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.a < b.a; });
  return rows;
}

namespace {

using ArcList = std::vector<std::pair<int, int>>;

bool weakly_connected(const ArcList& arcs, int k) {
  std::vector<int> parent(static_cast<std::size_t>(k));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::set<int> used;
  for (auto [t, h] : arcs) {
    parent[find(t)] = find(h);
    used.insert(t);
    used.insert(h);
  }
  if (static_cast<int>(used.size()) != k) return false;
  for (int v = 1; v < k; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

bool is_canonical(const ArcList& arcs, int k) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    ArcList mapped;
    for (auto [t, h] : arcs) mapped.emplace_back(perm[t], perm[h]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped < arcs) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

void extend(ArcList& arcs, std::size_t from, const std::vector<std::pair<int, int>>& pairs, int k, int max_arcs,
            std::vector<Digraph>& out) {
  if (!arcs.empty() && weakly_connected(arcs, k) && is_canonical(arcs, k)) {
    Digraph g;
    for (std::size_t i = 0; i < arcs.size(); ++i)
      g.arcs.push_back({static_cast<int>(i + 1), std::to_string(arcs[i].first), std::to_string(arcs[i].second)});
    out.push_back(std::move(g));
  }
  if (static_cast<int>(arcs.size()) == max_arcs) return;
  for (std::size_t i = from; i < pairs.size(); ++i) {
    arcs.push_back(pairs[i]);
    extend(arcs, i, pairs, k, max_arcs, out);
    arcs.pop_back();
  }
}

}  // namespace

std::vector<Digraph> small_digraphs(int max_vertices, int max_arcs) {
  std::vector<Digraph> out;
  for (int k = 1; k <= max_vertices; ++k) {
    std::vector<std::pair<int, int>> pairs;
    for (int t = 0; t < k; ++t)
      for (int h = 0; h < k; ++h) pairs.emplace_back(t, h);
    ArcList arcs;
    extend(arcs, 0, pairs, k, max_arcs, out);
  }
  return out;
}

std::string describe(const Digraph& g) {
  std::string s;
  for (const auto& a : g.arcs) s += a.tail + ">" + a.head + " ";
  return s;
}

Realization random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> denom(1, 6);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      Rational q(entry(rng), denom(rng) == 6 ? 3 : 1);
      q.canonicalize();
      m(r, c) = q;
    }
  return Realization(GroundSet::iota(cols), std::move(m));
}

Polynomial tutte_graph_oracle(std::vector<std::pair<int, int>> edges) {
  if (edges.empty()) return Polynomial(1);
  const auto [a, b] = edges.back();
  edges.pop_back();
  if (a == b) return vars::y() * tutte_graph_oracle(edges);
  // bridge test: is b reachable from a without the last edge?
  std::set<int> seen{a};
  std::vector<int> stack{a};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (auto [s, t] : edges)
      for (auto [p, q] : {std::pair{s, t}, std::pair{t, s}})
        if (p == v && seen.insert(q).second) stack.push_back(q);
  }
  auto contracted = edges;
  for (auto& [s, t] : contracted) {
    if (s == b) s = a;
    if (t == b) t = a;
  }
  if (!seen.count(b)) return vars::x() * tutte_graph_oracle(contracted);
  return tutte_graph_oracle(edges) + tutte_graph_oracle(contracted);
}

std::vector<std::pair<int, int>> edges_of(const Digraph& g) {
  std::vector<std::pair<int, int>> out;
  std::map<std::string, int> id;
  auto vertex = [&](const std::string& name) { return id.emplace(name, static_cast<int>(id.size())).first->second; };
  for (const auto& a : g.arcs) out.emplace_back(vertex(a.tail), vertex(a.head));
  return out;
}

ActiveSets active_sets_oracle(const Realization& m, Subset a) {
  RationalMatrix x = m.matrix();
  for (auto c : a.positions())
    for (std::size_t r = 0; r < x.rows(); ++r) x(r, c) = -x(r, c);
  const Realization reoriented(m.ground(), std::move(x));
  ActiveSets s;
  for (const auto& c : signed_circuits(reoriented))
    if (c.is_positive()) s.o = s.o.with(c.support().min());
  for (const auto& d : signed_cocircuits_direct(reoriented))
    if (d.is_positive()) s.ostar = s.ostar.with(d.support().min());
  return s;
}

namespace {

Realization from_rows(std::size_t rows, std::size_t cols, std::initializer_list<long> entries) {
  RationalMatrix m(rows, cols);
  std::size_t k = 0;
  for (long e : entries) {
    m(k / cols, k % cols) = e;
    ++k;
  }
  return Realization(GroundSet::iota(cols), std::move(m));
}

}  // namespace

Realization positive_loop() { return from_rows(1, 1, {0}); }
Realization single_isthmus() { return from_rows(1, 1, {1}); }
Realization parallel_pair() { return from_rows(1, 2, {1, 1}); }
Realization two_coloops() { return from_rows(2, 2, {1, 0, 0, 1}); }

}  // namespace omt::test
