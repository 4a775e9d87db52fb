// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "omt/error.hpp"
#include "support.hpp"

using namespace omt;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Polynomial P(const char* s) { return parse_polynomial(s); }

Perspective identity(const Realization& m) { return Perspective::identity(OrientedMatroid(m)); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = "failed: " + what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %d %s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", id, title, seconds_since(t0), o.detail.c_str());
  std::fflush(stdout);
}

const std::vector<Digraph>& sweep_graphs() {
  static const std::vector<Digraph> graphs = test::small_digraphs(4, 5);
  return graphs;
}

}  // namespace

int main() {
  const Polynomial t1 = P("x^2 + x*y + y^2 + x + y");

  criterion(1, "example 1 polynomial by rank formula, basis activities and orientation expansion", [&] {
    Outcome o;
    const auto t0 = Clock::now();
    const Realization m = test::example1();
    const auto report = expansion_sum(identity(m));
    o.require(tutte_closed(m) == t1, "rank formula");
    o.require(tutte_bases(m) == t1, "basis activities");
    o.require(substitute(report.sum, {{Var::u, Polynomial(0)}, {Var::v, Polynomial(0)}}) == t1,
              "orientation expansion at u=v=0");
    const double s = seconds_since(t0);
    o.require(s < 1.0, "time limit");
    if (o.pass) o.detail = "t = " + to_string(t1);
    return o;
  });

  criterion(2, "example 1 four-variable identity and table 1 rows", [&] {
    Outcome o;
    const auto report = expansion_sum(identity(test::example1()));
    o.require(report.rows.size() == 16, "16 rows");
    o.require(report.sum == (vars::x() + vars::u()).pow(2) + (vars::x() + vars::u()) * (vars::y() + vars::v()) + (vars::y() + vars::v()).pow(2) + (vars::x() + vars::u()) + (vars::y() + vars::v()), "sum");
    o.require(report.pass, "closed-formula reference");
    const auto mismatch = first_row_mismatch(report.rows, test::table("table1.tsv", 4));
    o.require(!mismatch, "table row " + (mismatch ? format_subset(GroundSet::iota(4), *mismatch) : ""));
    if (o.pass) o.detail = "16/16 rows equal the transcribed table";
    return o;
  });

  criterion(3, "example 2 perspective from a major", [&] {
    Outcome o;
    const Perspective p = test::example2();
    const auto report = expansion_sum(p);
    o.require(tutte_xy(p) == P("x^2 + 5*x + 4*y + 10"), "t(x,y,1)");
    o.require(report.pass, "four-variable identity");
    const Integer t001 = evaluate(tutte3_closed(p), {{Var::x, 0}, {Var::y, 0}, {Var::z, 1}}).get_num();
    o.require(t001 == 10, "t(0,0,1) = 10");
    o.require(count_bounded(p) == t001, "count_bounded");
    for (const auto& s : signed_sums(report)) o.require(s == t001, "signed sums");
    const bool rows = !first_row_mismatch(report.rows, test::table("table2.tsv", 5));
    o.require(rows, "table 2 rows");
    if (o.pass) o.detail = "t(0,0,1) = count_bounded = signed sums = 10; 32/32 rows equal the transcribed table";
    return o;
  });

  criterion(4, "identity-perspective expansion on every small weakly connected digraph", [&] {
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t n = 0;
    for (const auto& g : sweep_graphs()) {
      const auto report = expansion_sum(identity(from_digraph(g)));
      o.require(report.pass, "digraph " + test::describe(g));
      ++n;
    }
    o.require(seconds_since(t0) < 120.0, "time limit");
    if (o.pass) o.detail = std::to_string(n) + " digraphs (<= 4 vertices, <= 5 arcs, up to isomorphism)";
    return o;
  });

  criterion(5, "random perspectives from majors", [&] {
    Outcome o;
    const unsigned seed = 20240501;
    std::mt19937 rng(seed);
    int done = 0;
    std::size_t nodes = 0;
    while (done < 100) {
      const std::size_t rows = 1 + rng() % 4;
      const std::size_t cols = 2 + rng() % 7;
      const Realization n = test::random_matrix(rng, rows, cols);
      std::vector<int> c;
      for (std::size_t i = 1; i <= cols; ++i)
        if (rng() % 3 == 0) c.push_back(static_cast<int>(i));
      if (c.size() == cols) continue;
      const std::string tag = "instance " + std::to_string(done);
      const Perspective p = from_major(n, c);
      o.require(validate(p.m(), p.mprime()).ok(), tag + " validate");
      o.require(expansion_sum(p).pass, tag + " identity");
      try {
        lemma1_case(p);
      } catch (const Error& e) {
        o.require(false, tag + " lemma: " + e.what());
      }
      const auto dc = deletion_contraction_check(p);
      o.require(dc.pass, tag + " deletion/contraction: " + dc.failure);
      nodes += dc.nodes;
      ++done;
    }
    if (o.pass)
      o.detail = "100 instances, seed " + std::to_string(seed) + ", " + std::to_string(nodes) + " minors checked";
    return o;
  });

  criterion(6, "counting corollaries", [&] {
    Outcome o;
    const Realization tri = test::triangle();
    const Integer acyclic = count_acyclic(OrientedMatroid(tri));
    o.require(acyclic == 6 && acyclic == evaluate(tutte_closed(tri), {{Var::x, 2}, {Var::y, 0}}),
              "acyclic triangle = t(2,0) = 6");

    const Perspective b = bounded_perspective(tri, 3);
    const Integer bounded = count_bounded(b);
    const Rational t001 = evaluate(tutte3_closed(b), {{Var::x, 0}, {Var::y, 0}, {Var::z, 1}});
    // independent count: orientations of the triangle that are acyclic with
    // 1 and 2 forming a directed path between the ends of 3
    int bipolar = 0;
    for (int a = 0; a < 8; ++a) {
      const bool f1 = !(a & 1), f2 = !(a & 2), f3 = !(a & 4);
      const bool cyclic = f1 == f2 && f2 == f3;
      const bool path = f1 == f2;
      if (!cyclic && path) ++bipolar;
    }
    o.require(bounded == bipolar && bounded == t001 && signed_sum(expansion_sum(b)) == bounded,
              "bounded triangle count = t(0,0,1) = signed sum");

    const auto report = expansion_sum(identity(test::example1()));
    const auto basic = count_basic_orientations(report);
    o.require(basic.unbarred == 5 && basic.barred == 5 &&
                  evaluate(t1, {{Var::x, 1}, {Var::y, 1}}) == 5,
              "basic orientations (5,5) = t(1,1)");
    std::vector<std::string> listed;
    for (const auto& r : report.rows)
      if (r.theta_bar_star.empty() && r.theta_bar.empty()) listed.push_back(format_subset(GroundSet::iota(4), r.a));
    std::sort(listed.begin(), listed.end());
    o.require(listed == std::vector<std::string>{"-", "2", "23", "3", "4"}, "basic orientations are - 4 3 2 23");
    if (o.pass)
      o.detail = "acyclic 6; bounded " + bounded.get_str() + " (brute force " + std::to_string(bipolar) +
                 "); basic 5,5 = {-,4,3,2,23}";
    return o;
  });

  criterion(7, "derivative expansions", [&] {
    Outcome o;
    const Perspective e1 = identity(test::example1());
    const auto r1 = expansion_sum(e1);
    o.require(derivative_expansion(r1, 1, 0) == P("2*x + y + 1"), "d/dx = 2x+y+1");
    o.require(derivative_expansion(r1, 0, 1) == P("x + 2*y + 1"), "d/dy = x+2y+1");
    o.require(derivative_expansion(r1, 2, 0) == 2, "d2/dx2 = 2");
    o.require(derivative_expansion(r1, 1, 1) == 1, "d2/dxdy = 1");
    o.require(derivative_expansion(r1, 0, 2) == 2, "d2/dy2 = 2");
    std::size_t checked = 0;
    auto all_orders = [&](const Perspective& p, const ExpansionReport& r, const std::string& tag) {
      const Polynomial t = tutte_xy(p);
      for (std::uint32_t a = 0; a <= 3; ++a) {
        o.require(derivative_diag(r, a) == derivative_diag_reference(t, a), tag + " diagonal");
        for (std::uint32_t b = 0; a + b <= 3; ++b) {
          o.require(derivative_expansion(r, a, b) == derivative_reference(t, a, b), tag);
          ++checked;
        }
      }
    };
    all_orders(e1, r1, "example 1");
    for (const auto& g : sweep_graphs()) {
      const Perspective p = identity(from_digraph(g));
      all_orders(p, expansion_sum(p), test::describe(g));
    }
    if (o.pass) o.detail = std::to_string(checked) + " (p,q) pairs, p+q <= 3";
    return o;
  });

  criterion(8, "dual/complement invariants", [&] {
    Outcome o;
    std::size_t reorientations = 0;
    for (const auto& g : sweep_graphs()) {
      const Realization m = from_digraph(g);
      const std::string tag = test::describe(g);
      o.require(signed_cocircuits(m) == signed_cocircuits_direct(m), tag + " cocircuits");
      const OrientedMatroid om(m);
      const auto report = expansion_sum(Perspective::identity(om));
      const std::uint64_t full = (std::uint64_t{1} << m.size()) - 1;
      for (std::uint64_t a = 0; a <= full; ++a) {
        o.require(report.rows[full ^ a].monomial == swap_sides(report.rows[a].monomial), tag + " complement");
        o.require(minty_check(om.reorient(Subset(a))), tag + " minty");
        ++reorientations;
      }
    }
    if (o.pass) o.detail = std::to_string(reorientations) + " reorientations";
    return o;
  });

  criterion(9, "scale disclosure: acceptance is exact and property based", [&] {
    Outcome o;
    o.require(!sweep_graphs().empty(), "property sweep instances");
    o.require(failures == 0, "criteria 1-8");
    if (o.pass)
      o.detail = "two worked examples plus exhaustive and seeded random sweeps; no large-scale runs exist to reproduce";
    return o;
  });

  return failures == 0 ? 0 : 1;
}
