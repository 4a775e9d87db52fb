#include "omt/kernels.hpp"

#include <atomic>
#include <map>

#include <omp.h>

#include "omt/error.hpp"

namespace omt::kernels {

std::vector<std::uint8_t> rank_table_serial(const Realization& m) {
  const std::uint64_t total = std::uint64_t{1} << m.size();
  std::vector<std::uint8_t> table(total);
  for (std::uint64_t bits = 0; bits < total; ++bits)
    table[bits] = static_cast<std::uint8_t>(column_rank(m.matrix(), Subset(bits)));
  return table;
}

namespace {

struct RankFill {
  const std::vector<std::vector<Rational>>& columns;
  std::size_t full_rank;
  std::uint8_t* table;

  // Records the rank of s and of s + any subset of positions [start, stop).
  void run(const EchelonBasis& basis, std::size_t start, std::size_t stop, std::uint64_t s) const {
    const auto r = static_cast<std::uint8_t>(basis.size());
    if (basis.size() == full_rank) {
      // every superset in this subtree has full rank
      const std::uint64_t span = (std::uint64_t{1} << stop) - (std::uint64_t{1} << start);
      for (std::uint64_t sub = span;; sub = (sub - 1) & span) {
        table[s | sub] = r;
        if (sub == 0) break;
      }
      return;
    }
    table[s] = r;
    for (std::size_t j = start; j < stop; ++j) {
      const std::uint64_t t = s | (std::uint64_t{1} << j);
      if (auto r = basis.residual(columns[j])) {
        EchelonBasis next = basis;
        next.append_residual(std::move(*r));
        run(next, j + 1, stop, t);
      } else {
        run(basis, j + 1, stop, t);
      }
    }
  }
};

}  // namespace

std::vector<std::uint8_t> rank_table_parallel(const Realization& m) {
  const std::size_t n = m.size();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint8_t> table(total);

  std::vector<std::vector<Rational>> columns(n);
  for (std::size_t c = 0; c < n; ++c) columns[c] = m.matrix().column(c);

  const std::size_t high = std::min<std::size_t>(n, 6);
  const std::size_t split = n - high;
  const auto tasks = static_cast<std::int64_t>(std::uint64_t{1} << high);
  const RankFill fill{columns, m.rank(), table.data()};
  const std::size_t rows = m.matrix().rows();

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t h = 0; h < tasks; ++h) {
    EchelonBasis basis(rows);
    const auto prefix = static_cast<std::uint64_t>(h) << split;
    for (std::size_t j = 0; j < high; ++j)
      if ((static_cast<std::uint64_t>(h) >> j) & 1u) basis.insert(columns[split + j]);
    fill.run(basis, 0, split, prefix);
  }
  return table;
}

namespace {

// Returns false on a negative z exponent.
bool closed_form_exponents(const RankTable& m, const RankTable& mprime, Subset a, std::size_t rank_m,
                           std::size_t rank_p, std::array<std::uint32_t, 3>& out) {
  const long ra = static_cast<long>(m[a]);
  const long rpa = static_cast<long>(mprime[a]);
  const long zexp = (static_cast<long>(rank_m) - static_cast<long>(rank_p)) - (ra - rpa);
  if (zexp < 0) return false;
  out = {static_cast<std::uint32_t>(static_cast<long>(rank_p) - rpa),
         static_cast<std::uint32_t>(static_cast<long>(a.count()) - ra), static_cast<std::uint32_t>(zexp)};
  return true;
}

[[noreturn]] void negative_z(Subset a) {
  throw AxiomError("not a perspective: negative z exponent at subset with bits " + std::to_string(a.bits()));
}

}  // namespace

ExponentHistogram closed_form_histogram_serial(const RankTable& m, const RankTable& mprime, std::size_t n) {
  const Subset all = Subset::full(n);
  const std::size_t rank_m = m[all];
  const std::size_t rank_p = mprime[all];
  ExponentHistogram h;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::array<std::uint32_t, 3> e{};
    if (!closed_form_exponents(m, mprime, Subset(bits), rank_m, rank_p, e)) negative_z(Subset(bits));
    ++h[e];
  }
  return h;
}

ExponentHistogram closed_form_histogram_parallel(const RankTable& m, const RankTable& mprime, std::size_t n) {
  const Subset all = Subset::full(n);
  const std::size_t rank_m = m[all];
  const std::size_t rank_p = mprime[all];
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << n);
  ExponentHistogram h;
  std::atomic<std::int64_t> bad{-1};

#pragma omp parallel
  {
    ExponentHistogram local;
#pragma omp for schedule(static) nowait
    for (std::int64_t bits = 0; bits < total; ++bits) {
      std::array<std::uint32_t, 3> e{};
      const Subset a(static_cast<std::uint64_t>(bits));
      if (!closed_form_exponents(m, mprime, a, rank_m, rank_p, e)) {
        bad.store(bits);
        continue;
      }
      ++local[e];
    }
#pragma omp critical(omt_histogram_merge)
    for (const auto& [e, c] : local) h[e] += c;
  }
  if (bad.load() >= 0) negative_z(Subset(static_cast<std::uint64_t>(bad.load())));
  return h;
}

std::vector<ThetaRecord> theta_sweep_serial(const OrientedMatroid& m, const OrientedMatroid& mprime) {
  const std::uint64_t total = std::uint64_t{1} << m.size();
  std::vector<ThetaRecord> rows(total);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const Subset a(bits);
    const Subset o = orientation_active_sets(m.reorient(a)).o;
    const Subset ostar = orientation_active_sets(mprime.reorient(a)).ostar;
    rows[bits] = make_theta_record(a, o, ostar);
  }
  return rows;
}

namespace {

// One member of each +/- pair; it is positive or negative after reorienting
// on A iff positive ^ (A & support) is empty or the whole support.
struct CompactSigned {
  std::uint64_t support;
  std::uint64_t positive;
  std::uint64_t smallest;
};

std::vector<CompactSigned> compact(const SignedFamily& family) {
  std::vector<CompactSigned> out;
  for (const auto& x : family) {
    const Subset low = x.support().lowest();
    if (!x.positive.contains(low)) continue;
    out.push_back({x.support().bits(), x.positive.bits(), low.bits()});
  }
  return out;
}

std::uint64_t smallest_of_signed_constant(const std::vector<CompactSigned>& family, std::uint64_t a) {
  std::uint64_t out = 0;
  for (const auto& x : family) {
    const std::uint64_t flipped = x.positive ^ (a & x.support);
    if (flipped == 0 || flipped == x.support) out |= x.smallest;
  }
  return out;
}

}  // namespace

std::vector<ThetaRecord> theta_sweep_parallel(const OrientedMatroid& m, const OrientedMatroid& mprime) {
  const auto circuits = compact(m.circuits());
  const auto cocircuits = compact(mprime.cocircuits());
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << m.size());
  std::vector<ThetaRecord> rows(static_cast<std::size_t>(total));

#pragma omp parallel for schedule(static)
  for (std::int64_t bits = 0; bits < total; ++bits) {
    const auto a = static_cast<std::uint64_t>(bits);
    rows[static_cast<std::size_t>(bits)] =
        make_theta_record(Subset(a), Subset(smallest_of_signed_constant(circuits, a)),
                          Subset(smallest_of_signed_constant(cocircuits, a)));
  }
  return rows;
}

namespace {

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.exponents() < b.exponents(); }
};
using MonomialCounts = std::map<Monomial, std::uint64_t, MonomialLess>;

Polynomial from_counts(const MonomialCounts& counts) {
  Polynomial p;
  for (const auto& [m, c] : counts) p.add_term(m, Integer(static_cast<unsigned long>(c)));
  return p;
}

}  // namespace

Polynomial monomial_sum_serial(const std::vector<ThetaRecord>& rows) {
  Polynomial p;
  for (const auto& r : rows) p.add_term(r.monomial, 1);
  return p;
}

Polynomial monomial_sum_parallel(const std::vector<ThetaRecord>& rows) {
  MonomialCounts counts;
  const auto total = static_cast<std::int64_t>(rows.size());
#pragma omp parallel
  {
    MonomialCounts local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < total; ++i) ++local[rows[static_cast<std::size_t>(i)].monomial];
#pragma omp critical(omt_monomial_merge)
    for (const auto& [m, c] : local) counts[m] += c;
  }
  return from_counts(counts);
}

Polynomial expand_closed_form(const ExponentHistogram& h) {
  const Polynomial xm1 = vars::x() - Polynomial(1);
  const Polynomial ym1 = vars::y() - Polynomial(1);
  Polynomial result;
  for (const auto& [e, count] : h)
    result += xm1.pow(e[0]) * ym1.pow(e[1]) * vars::z().pow(e[2]) *
              Polynomial(Integer(static_cast<unsigned long>(count)));
  return result;
}

}  // namespace omt::kernels
