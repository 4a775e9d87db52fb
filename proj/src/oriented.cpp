#include "omt/oriented.hpp"

#include <algorithm>

#include "omt/error.hpp"

namespace omt {

void sort_canonical(SignedFamily& family) {
  std::sort(family.begin(), family.end(), [](const SignedSubset& a, const SignedSubset& b) {
    const auto ka = a.support().count();
    const auto kb = b.support().count();
    if (ka != kb) return ka < kb;
    if (a.support() != b.support()) return a.support() < b.support();
    return a.positive < b.positive;
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

bool conformal(const SignedSubset& y, const SignedSubset& x) {
  return x.positive.contains(y.positive) && x.negative.contains(y.negative);
}

std::string format_signed(const GroundSet& ground, const SignedSubset& s) {
  std::string out = "{";
  for (auto p : s.support().positions()) {
    if (out.size() > 1) out += ',';
    out += s.positive.contains(p) ? '+' : '-';
    out += std::to_string(ground.label(p));
  }
  return out + "}";
}

namespace {

SignedSubset sign_pattern(Subset support, const std::vector<Rational>& values) {
  SignedSubset x;
  const auto positions = support.positions();
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const int s = sgn(values[i]);
    if (s > 0) x.positive = x.positive.with(positions[i]);
    if (s < 0) x.negative = x.negative.with(positions[i]);
  }
  return x;
}

void push_both(SignedFamily& family, const SignedSubset& x) {
  family.push_back(x);
  family.push_back(x.negated());
}

}  // namespace

SignedFamily signed_circuits(const Realization& m, const SweepOptions& opts) {
  const RankTable table = rank_table(m, opts);
  SignedFamily family;
  const std::uint64_t total = std::uint64_t{1} << m.size();
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    const Subset s(bits);
    const auto k = s.count();
    if (k > m.rank() + 1 || table[s] != k - 1) continue;
    bool minimal = true;
    for (auto e : s.positions())
      if (table[s.without(e)] != k - 1) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    const auto kernel = kernel_basis(m.matrix().select_columns(s));
    push_both(family, sign_pattern(s, kernel.front()));
  }
  sort_canonical(family);
  return family;
}

SignedFamily signed_cocircuits(const Realization& m, const SweepOptions& opts) {
  return signed_circuits(dual(m), opts);
}

SignedFamily signed_cocircuits_direct(const Realization& m, const SweepOptions& opts) {
  const RankTable table = rank_table(m, opts);
  SignedFamily family;
  const std::size_t r = m.rank();
  if (r == 0) return family;
  const RationalMatrix rows = row_space_basis(m.matrix());
  const Subset all = Subset::full(m.size());
  const std::uint64_t total = std::uint64_t{1} << m.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const Subset h(bits);
    if (table[h] != r - 1) continue;
    bool closed = true;
    for (auto e : (all - h).positions())
      if (table[h.with(e)] != r) {
        closed = false;
        break;
      }
    if (!closed) continue;
    // functional w with w^T rows_H = 0; unique up to scale
    const auto w = kernel_basis(rows.select_columns(h).transposed()).front();
    std::vector<Rational> values;
    const Subset complement = all - h;
    for (auto c : complement.positions()) {
      Rational f = 0;
      for (std::size_t i = 0; i < r; ++i) f += w[i] * rows(i, c);
      values.push_back(f);
    }
    push_both(family, sign_pattern(complement, values));
  }
  sort_canonical(family);
  return family;
}

OrientedMatroid::OrientedMatroid(Realization realization, const SweepOptions& opts)
    : realization_(std::move(realization)),
      circuits_(signed_circuits(realization_, opts)),
      cocircuits_(signed_cocircuits(realization_, opts)) {}

OrientedMatroid OrientedMatroid::reorient(Subset a) const {
  if (!Subset::full(size()).contains(a)) throw InputError("reorient: set is not inside the ground set");
  OrientedMatroid out;
  RationalMatrix m = realization_.matrix();
  for (auto c : a.positions())
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
  out.realization_ = Realization(ground(), std::move(m));
  out.circuits_.reserve(circuits_.size());
  for (const auto& x : circuits_) out.circuits_.push_back(x.reoriented(a));
  out.cocircuits_.reserve(cocircuits_.size());
  for (const auto& y : cocircuits_) out.cocircuits_.push_back(y.reoriented(a));
  sort_canonical(out.circuits_);
  sort_canonical(out.cocircuits_);
  out.reorientation_ = reorientation_ ^ a;
  return out;
}

Subset smallest_of_positive(const SignedFamily& family, Subset a) {
  Subset out;
  for (const auto& x : family) {
    // negative part after flipping on a
    const Subset neg = (x.negative - a) | (x.positive & a);
    if (neg.empty()) out = out | x.support().lowest();
  }
  return out;
}

ActiveSets orientation_active_sets(const OrientedMatroid& om) {
  ActiveSets s;
  for (const auto& x : om.circuits())
    if (x.is_positive()) s.o = s.o.with(x.support().min());
  for (const auto& y : om.cocircuits())
    if (y.is_positive()) s.ostar = s.ostar.with(y.support().min());
  return s;
}

ThetaRecord make_theta_record(Subset a, Subset o, Subset ostar) {
  ThetaRecord t;
  t.a = a;
  t.o = o;
  t.ostar = ostar;
  t.theta = o - a;
  t.theta_bar = o & a;
  t.theta_star = ostar - a;
  t.theta_bar_star = ostar & a;
  t.monomial = Monomial({static_cast<std::uint32_t>(t.theta_star.count()),
                         static_cast<std::uint32_t>(t.theta_bar_star.count()),
                         static_cast<std::uint32_t>(t.theta.count()),
                         static_cast<std::uint32_t>(t.theta_bar.count()), 0});
  return t;
}

ThetaRecord theta_record(const OrientedMatroid& base, Subset a) {
  const auto sets = orientation_active_sets(base.reorient(a));
  return make_theta_record(a, sets.o, sets.ostar);
}

Indicators element_indicators(const OrientedMatroid& om, std::size_t position) {
  if (position >= om.size()) throw InputError("element position out of range");
  const auto sets = orientation_active_sets(om);
  return {sets.o.contains(position), sets.ostar.contains(position)};
}

bool is_acyclic(const OrientedMatroid& om) {
  return std::none_of(om.circuits().begin(), om.circuits().end(),
                      [](const SignedSubset& x) { return x.is_positive(); });
}

bool is_totally_cyclic(const OrientedMatroid& om) {
  Subset covered;
  for (const auto& x : om.circuits())
    if (x.is_positive()) covered = covered | x.support();
  return covered == Subset::full(om.size());
}

bool minty_check(const OrientedMatroid& om) {
  Subset in_circuit;
  Subset in_cocircuit;
  for (const auto& x : om.circuits())
    if (x.is_positive()) in_circuit = in_circuit | x.support();
  for (const auto& y : om.cocircuits())
    if (y.is_positive()) in_cocircuit = in_cocircuit | y.support();
  return (in_circuit & in_cocircuit).empty() && (in_circuit | in_cocircuit) == Subset::full(om.size());
}

}  // namespace omt
