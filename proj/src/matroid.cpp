#include "omt/matroid.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "omt/error.hpp"
#include "omt/kernels.hpp"

namespace omt {

GroundSet::GroundSet(std::vector<int> labels) : labels_(std::move(labels)) {
  if (labels_.size() > Subset::kMaxElements) throw InputError("ground set larger than 64 elements");
  for (std::size_t i = 1; i < labels_.size(); ++i)
    if (labels_[i] <= labels_[i - 1])
      throw InputError("ground set labels must be distinct and increasing (label " +
                       std::to_string(labels_[i]) + ")");
}

GroundSet GroundSet::iota(std::size_t n) {
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(i + 1);
  return GroundSet(std::move(labels));
}

std::size_t GroundSet::position(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) throw InputError("unknown element label " + std::to_string(label));
  return static_cast<std::size_t>(it - labels_.begin());
}

Subset GroundSet::subset(std::span<const int> labels) const {
  Subset s;
  for (int l : labels) s = s.with(position(l));
  return s;
}

std::vector<int> GroundSet::labels_of(Subset s) const {
  std::vector<int> out;
  for (auto p : s.positions()) out.push_back(labels_.at(p));
  return out;
}

GroundSet GroundSet::without(std::size_t position) const {
  std::vector<int> labels = labels_;
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(position));
  return GroundSet(std::move(labels));
}

std::string format_subset(const GroundSet& ground, Subset s) {
  if (s.empty()) return "-";
  const auto labels = ground.labels_of(s);
  const bool compact = std::all_of(labels.begin(), labels.end(), [](int l) { return l >= 0 && l <= 9; });
  std::string out;
  for (int l : labels) {
    if (!compact && !out.empty()) out += ',';
    out += std::to_string(l);
  }
  return out;
}

Realization::Realization(GroundSet ground, RationalMatrix matrix)
    : ground_(std::move(ground)), matrix_(std::move(matrix)) {
  if (matrix_.cols() != ground_.size())
    throw InputError("realization has " + std::to_string(matrix_.cols()) + " columns for " +
                     std::to_string(ground_.size()) + " elements");
  rank_ = column_rank(matrix_, Subset::full(ground_.size()));
}

Realization from_digraph(const Digraph& g) {
  std::vector<Arc> arcs = g.arcs;
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.label < b.label; });
  for (std::size_t i = 1; i < arcs.size(); ++i)
    if (arcs[i].label == arcs[i - 1].label)
      throw InputError("duplicate arc label " + std::to_string(arcs[i].label));

  std::map<std::string, std::size_t> row_of;
  auto vertex_row = [&](const std::string& v) {
    auto [it, inserted] = row_of.try_emplace(v, row_of.size());
    return it->second;
  };
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (const auto& a : arcs) {
    const auto t = vertex_row(a.tail);
    const auto h = vertex_row(a.head);
    ends.emplace_back(t, h);
  }

  RationalMatrix m(row_of.size(), arcs.size());
  std::vector<int> labels;
  for (std::size_t c = 0; c < arcs.size(); ++c) {
    labels.push_back(arcs[c].label);
    const auto [t, h] = ends[c];
    if (t == h) continue;
    m(t, c) = -1;
    m(h, c) = 1;
  }
  return Realization(GroundSet(std::move(labels)), std::move(m));
}

void check_guard(std::size_t n, const SweepOptions& opts) {
  if (n > kHardElementLimit)
    throw GuardError("|E| = " + std::to_string(n) + " exceeds the hard limit of " +
                     std::to_string(kHardElementLimit) + " elements");
  if (n > opts.guard && !opts.force)
    throw GuardError("|E| = " + std::to_string(n) + " exceeds the enumeration guard of " +
                     std::to_string(opts.guard) + " elements (use --force to override)");
}

RankTable rank_table(const Realization& m, const SweepOptions& opts) {
  check_guard(m.size(), opts);
  return RankTable(opts.parallel ? kernels::rank_table_parallel(m) : kernels::rank_table_serial(m));
}

Realization delete_position(const Realization& m, std::size_t position) {
  if (position >= m.size()) throw InputError("element position out of range");
  return Realization(m.ground().without(position),
                     m.matrix().select_columns(Subset::full(m.size()).without(position)));
}

Realization contract_position(const Realization& m, std::size_t position) {
  if (position >= m.size()) throw InputError("element position out of range");
  const RationalMatrix& a = m.matrix();
  std::size_t pivot = 0;
  while (pivot < a.rows() && a(pivot, position) == 0) ++pivot;
  if (pivot == a.rows()) return delete_position(m, position);

  RationalMatrix reduced = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (r == pivot || reduced(r, position) == 0) continue;
    const Rational f = reduced(r, position) / reduced(pivot, position);
    for (std::size_t c = 0; c < a.cols(); ++c) reduced(r, c) -= f * reduced(pivot, c);
  }
  reduced = reduced.remove_row(pivot).select_columns(Subset::full(m.size()).without(position));
  return Realization(m.ground().without(position), std::move(reduced));
}

Realization delete_element(const Realization& m, int label) {
  return delete_position(m, m.ground().position(label));
}

Realization contract_element(const Realization& m, int label) {
  return contract_position(m, m.ground().position(label));
}

Realization dual(const Realization& m) {
  const auto kernel = kernel_basis(m.matrix());
  RationalMatrix d(kernel.size(), m.size());
  for (std::size_t r = 0; r < kernel.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) d(r, c) = kernel[r][c];
  return Realization(m.ground(), std::move(d));
}

namespace {

template <typename RankFn>
BasisActivity activities_with(std::size_t n, Subset basis, RankFn rank) {
  const std::size_t r = basis.count();
  BasisActivity act;
  for (std::size_t e = 0; e < n; ++e) {
    bool smallest = true;
    if (basis.contains(e)) {
      // fundamental cocircuit: e plus every g outside B with B - e + g a basis
      for (std::size_t g = 0; g < e && smallest; ++g)
        if (!basis.contains(g) && rank(basis.without(e).with(g)) == r) smallest = false;
      if (smallest) {
        ++act.internal;
        act.internally_active = act.internally_active.with(e);
      }
    } else {
      // fundamental circuit: e plus every f in B with B - f + e a basis
      for (std::size_t f = 0; f < e && smallest; ++f)
        if (basis.contains(f) && rank(basis.without(f).with(e)) == r) smallest = false;
      if (smallest) {
        ++act.external;
        act.externally_active = act.externally_active.with(e);
      }
    }
  }
  return act;
}

std::vector<Subset> bases_in(const RankTable& table, std::size_t n, std::size_t r) {
  std::vector<Subset> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const Subset s(bits);
    if (s.count() == r && table[s] == r) out.push_back(s);
  }
  return out;
}

}  // namespace

Polynomial tutte_closed(const Realization& m, const SweepOptions& opts) {
  const RankTable table = rank_table(m, opts);
  const auto h = opts.parallel ? kernels::closed_form_histogram_parallel(table, table, m.size())
                               : kernels::closed_form_histogram_serial(table, table, m.size());
  return kernels::expand_closed_form(h);
}

std::vector<Subset> bases(const Realization& m, const SweepOptions& opts) {
  return bases_in(rank_table(m, opts), m.size(), m.rank());
}

BasisActivity basis_activities(const Realization& m, Subset basis) {
  if (!Subset::full(m.size()).contains(basis) || basis.count() != m.rank() || m.rank(basis) != m.rank())
    throw InputError("basis_activities: " + format_subset(m.ground(), basis) + " is not a basis");
  return activities_with(m.size(), basis, [&](Subset s) { return m.rank(s); });
}

Polynomial tutte_bases(const Realization& m, const SweepOptions& opts) {
  const RankTable table = rank_table(m, opts);
  std::map<std::pair<std::size_t, std::size_t>, unsigned long> counts;
  for (Subset b : bases_in(table, m.size(), m.rank())) {
    const auto act = activities_with(m.size(), b, [&](Subset s) { return table[s]; });
    ++counts[{act.internal, act.external}];
  }
  Polynomial result;
  for (const auto& [ie, c] : counts) {
    const auto m_ = Monomial::of(Var::x, static_cast<std::uint32_t>(ie.first)) *
                    Monomial::of(Var::y, static_cast<std::uint32_t>(ie.second));
    result.add_term(m_, Integer(c));
  }
  return result;
}

}  // namespace omt
