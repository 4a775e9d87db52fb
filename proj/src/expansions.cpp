#include "omt/expansions.hpp"

#include <algorithm>

#include "omt/error.hpp"
#include "omt/kernels.hpp"

namespace omt {

namespace {

std::vector<ThetaRecord> sweep(const Perspective& p, const SweepOptions& opts) {
  check_guard(p.size(), opts);
  return opts.parallel ? kernels::theta_sweep_parallel(p.m(), p.mprime())
                       : kernels::theta_sweep_serial(p.m(), p.mprime());
}

Integer pow2(std::size_t n) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
  return r;
}

std::uint32_t count32(Subset s) { return static_cast<std::uint32_t>(s.count()); }

bool positive_after(const SignedSubset& x, Subset a) { return ((x.negative - a) | (x.positive & a)).empty(); }

bool acyclic_after(const SignedFamily& circuits, Subset a) {
  return std::none_of(circuits.begin(), circuits.end(), [&](const SignedSubset& x) { return positive_after(x, a); });
}

bool totally_cyclic_after(const SignedFamily& circuits, Subset a, std::size_t n) {
  Subset covered;
  for (const auto& x : circuits)
    if (positive_after(x, a)) covered = covered | x.support();
  return covered == Subset::full(n);
}

}  // namespace

ThetaRecord monomial_of(const Perspective& p, Subset a) {
  if (!Subset::full(p.size()).contains(a)) throw InputError("monomial_of: set is not inside the ground set");
  const Subset o = orientation_active_sets(p.m().reorient(a)).o;
  const Subset ostar = orientation_active_sets(p.mprime().reorient(a)).ostar;
  return make_theta_record(a, o, ostar);
}

Polynomial tutte_xy(const Perspective& p, const SweepOptions& opts) {
  return substitute(tutte3_closed(p, opts), {{Var::z, Polynomial(1)}});
}

ExpansionReport expansion_sum(const Perspective& p, const SweepOptions& opts) {
  ExpansionReport report;
  report.rows = sweep(p, opts);
  report.sum = opts.parallel ? kernels::monomial_sum_parallel(report.rows) : kernels::monomial_sum_serial(report.rows);
  report.reference = substitute(tutte3_closed(p, opts), {{Var::x, vars::x() + vars::u()},
                                                         {Var::y, vars::y() + vars::v()},
                                                         {Var::z, Polynomial(1)}});
  report.pass = report.sum == report.reference;
  return report;
}

ExpansionReport expansion_sum(const OrientedMatroid& m, const SweepOptions& opts) {
  return expansion_sum(Perspective::identity(m), opts);
}

Polynomial lv84_expansion(const ExpansionReport& report) {
  Polynomial p;
  for (const auto& r : report.rows)
    p.add_term(Monomial({count32(r.ostar), 0, count32(r.o), 0, 0}), 1);
  return p;
}

Polynomial lv84_expansion(const Perspective& p, const SweepOptions& opts) {
  ExpansionReport report;
  report.rows = sweep(p, opts);
  return lv84_expansion(report);
}

SpecializationReport specialization_suite(const ExpansionReport& report, const Polynomial& t) {
  SpecializationReport s;
  s.t = t;
  s.t20 = evaluate(t, {{Var::x, 2}, {Var::y, 0}, {Var::z, 1}}).get_num();

  const Polynomial xm1 = vars::x() - Polynomial(1);
  const Polynomial ym1 = vars::y() - Polynomial(1);
  std::map<std::pair<std::uint32_t, std::uint32_t>, unsigned long> shifted;
  for (const auto& r : report.rows) {
    const auto ts = count32(r.theta_star), tbs = count32(r.theta_bar_star);
    const auto t0 = count32(r.theta), tb = count32(r.theta_bar);
    ++shifted[{ts, t0}];
    if (tbs == 0 && tb == 0) s.restricted.add_term(Monomial({ts, 0, t0, 0, 0}), 1);
    if (tbs == 0 && t0 == 0 && tb == 0) s.two_zero_star += pow2(ts);
    if (ts == 0 && t0 == 0 && tb == 0) s.two_zero_bar += pow2(tbs);
  }
  for (const auto& [e, c] : shifted) s.shifted += xm1.pow(e.first) * ym1.pow(e.second) * Polynomial(Integer(c));
  return s;
}

Integer count_acyclic(const OrientedMatroid& m, const SweepOptions& opts) {
  check_guard(m.size(), opts);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << m.size());
  const SignedFamily& circuits = m.circuits();
  long count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static) if (opts.parallel)
  for (std::int64_t bits = 0; bits < total; ++bits)
    if (acyclic_after(circuits, Subset(static_cast<std::uint64_t>(bits)))) ++count;
  return Integer(count);
}

Integer count_bounded(const Perspective& p, const SweepOptions& opts) {
  check_guard(p.size(), opts);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << p.size());
  const SignedFamily& cm = p.m().circuits();
  const SignedFamily& cp = p.mprime().circuits();
  const std::size_t n = p.size();
  long count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static) if (opts.parallel)
  for (std::int64_t bits = 0; bits < total; ++bits) {
    const Subset a(static_cast<std::uint64_t>(bits));
    if (acyclic_after(cm, a) && totally_cyclic_after(cp, a, n)) ++count;
  }
  return Integer(count);
}

std::array<Integer, 4> signed_sums(const ExpansionReport& report) {
  std::array<long, 4> sums{};
  for (const auto& r : report.rows) {
    const std::size_t ts = r.theta_star.count(), tbs = r.theta_bar_star.count();
    const std::size_t t = r.theta.count(), tb = r.theta_bar.count();
    const std::array<std::size_t, 4> exps{ts + t, ts + tb, tbs + t, tbs + tb};
    for (std::size_t i = 0; i < 4; ++i) sums[i] += (exps[i] % 2 == 0) ? 1 : -1;
  }
  return {Integer(sums[0]), Integer(sums[1]), Integer(sums[2]), Integer(sums[3])};
}

Integer signed_sum(const ExpansionReport& report) { return signed_sums(report)[0]; }

BasicCounts count_basic_orientations(const ExpansionReport& report) {
  long unbarred = 0, barred = 0;
  for (const auto& r : report.rows) {
    if (r.theta_star.empty() && r.theta.empty()) ++unbarred;
    if (r.theta_bar_star.empty() && r.theta_bar.empty()) ++barred;
  }
  return {Integer(unbarred), Integer(barred)};
}

BasicCounts count_basic_orientations(const OrientedMatroid& m, const SweepOptions& opts) {
  return count_basic_orientations(expansion_sum(m, opts));
}

Polynomial derivative_expansion(const ExpansionReport& report, std::uint32_t dp, std::uint32_t dq) {
  Polynomial p;
  for (const auto& r : report.rows)
    if (r.theta_bar_star.count() == dp && r.theta_bar.count() == dq)
      p.add_term(Monomial({count32(r.theta_star), 0, count32(r.theta), 0, 0}), 1);
  return p * Polynomial(factorial(dp) * factorial(dq));
}

Polynomial derivative_diag(const ExpansionReport& report, std::uint32_t dp) {
  Polynomial p;
  for (const auto& r : report.rows)
    if (r.theta_bar_star.count() + r.theta_bar.count() == dp)
      p.add_term(Monomial::of(Var::x, count32(r.theta_star) + count32(r.theta)), 1);
  return p * Polynomial(factorial(dp));
}

Polynomial derivative_reference(const Polynomial& t, std::uint32_t dp, std::uint32_t dq) {
  return partial_derivative(partial_derivative(t, Var::x, dp), Var::y, dq);
}

Polynomial derivative_diag_reference(const Polynomial& t, std::uint32_t dp) {
  return partial_derivative(substitute(t, {{Var::y, vars::x()}}), Var::x, dp);
}

Polynomial taylor_reconstruction(const ExpansionReport& report) {
  std::uint32_t max_p = 0, max_q = 0;
  for (const auto& r : report.rows) {
    max_p = std::max(max_p, count32(r.theta_bar_star));
    max_q = std::max(max_q, count32(r.theta_bar));
  }
  Polynomial out;
  for (std::uint32_t p = 0; p <= max_p; ++p)
    for (std::uint32_t q = 0; q <= max_q; ++q) {
      const Polynomial d = derivative_expansion(report, p, q);
      const Integer scale = factorial(p) * factorial(q);
      Polynomial part;
      // exact: every coefficient of d is a multiple of p! q!
      for (const auto& [m, c] : d.terms()) part.add_term(m, Integer(c / scale));
      out += part * vars::u().pow(p) * vars::v().pow(q);
    }
  return out;
}

const char* to_string(LemmaCase c) {
  switch (c) {
    case LemmaCase::first: return "i";
    case LemmaCase::second: return "ii";
    case LemmaCase::both: return "both";
  }
  return "?";
}

LemmaCase lemma1_case(const Perspective& p, const SweepOptions& opts) {
  const std::size_t n = p.size();
  if (n == 0) throw InputError("lemma1_case: empty ground set");
  const std::size_t e = n - 1;
  const Subset below = Subset::full(e);

  const auto ostar = [](const OrientedMatroid& om) { return orientation_active_sets(om).ostar; };
  const auto o = [](const OrientedMatroid& om) { return orientation_active_sets(om).o; };

  const OrientedMatroid mp_del(delete_position(p.mprime().realization(), e), opts);
  const OrientedMatroid mp_con(contract_position(p.mprime().realization(), e), opts);
  const OrientedMatroid m_del(delete_position(p.m().realization(), e), opts);
  const OrientedMatroid m_con(contract_position(p.m().realization(), e), opts);
  const Subset flip = Subset::single(e);

  const Subset s_mp = ostar(p.mprime()) & below;
  const Subset s_mp_flip = ostar(p.mprime().reorient(flip)) & below;
  const Subset s_m = o(p.m()) & below;
  const Subset s_m_flip = o(p.m().reorient(flip)) & below;

  const bool first = s_mp == ostar(mp_del) && s_m == o(m_del) && s_mp_flip == ostar(mp_con) && s_m_flip == o(m_con);
  const bool second =
      s_mp == ostar(mp_con) && s_m == o(m_con) && s_mp_flip == ostar(mp_del) && s_m_flip == o(m_del);
  if (first && second) return LemmaCase::both;
  if (first) return LemmaCase::first;
  if (second) return LemmaCase::second;
  throw Error("lemma1_case: neither case holds at greatest element " + std::to_string(p.ground().label(e)));
}

namespace {

void dc_check(const Perspective& p, std::size_t depth, const SweepOptions& opts, DeletionContractionReport& out) {
  if (!out.pass) return;
  ++out.nodes;
  const Polynomial f = expansion_sum(p, opts).sum;
  if (p.size() == 0) {
    if (f != Polynomial(1)) {
      out.pass = false;
      out.failure = "empty perspective gives " + to_string(f);
    }
    return;
  }
  const std::size_t e = p.size() - 1;
  const Perspective del = p.delete_position(e, opts);
  Polynomial expected;
  std::vector<Perspective> minors;
  if (p.mprime().realization().is_isthmus(e)) {
    expected = (vars::x() + vars::u()) * expansion_sum(del, opts).sum;
    minors.push_back(del);
  } else if (p.m().realization().is_loop(e)) {
    expected = (vars::y() + vars::v()) * expansion_sum(del, opts).sum;
    minors.push_back(del);
  } else {
    const Perspective con = p.contract_position(e, opts);
    expected = expansion_sum(del, opts).sum + expansion_sum(con, opts).sum;
    minors.push_back(del);
    minors.push_back(con);
  }
  if (f != expected) {
    out.pass = false;
    out.failure = "ground " + format_subset(p.ground(), Subset::full(p.size())) + ": " + to_string(f) +
                  " != " + to_string(expected);
    return;
  }
  if (depth <= 1) return;
  for (const auto& minor : minors) dc_check(minor, depth - 1, opts, out);
}

}  // namespace

DeletionContractionReport deletion_contraction_check(const Perspective& p, std::size_t depth,
                                                     const SweepOptions& opts) {
  DeletionContractionReport out;
  if (depth == 0) return out;
  dc_check(p, depth, opts, out);
  return out;
}

std::optional<Subset> first_row_mismatch(const std::vector<ThetaRecord>& a, const std::vector<ThetaRecord>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (!(a[i] == b[i])) return a[i].a;
  if (a.size() != b.size()) return Subset(n);
  return std::nullopt;
}

Monomial swap_sides(const Monomial& m) {
  return Monomial({m[Var::u], m[Var::x], m[Var::v], m[Var::y], m[Var::z]});
}

}  // namespace omt
