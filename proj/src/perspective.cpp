#include "omt/perspective.hpp"

#include <algorithm>

#include "omt/error.hpp"
#include "omt/kernels.hpp"

namespace omt {

namespace {

void require_same_ground(const OrientedMatroid& m, const OrientedMatroid& mprime) {
  if (!(m.ground() == mprime.ground())) throw InputError("perspective: M and M' have different ground sets");
}

// Union of the supports in `parts` that fit inside `whole` (conformally when
// `signed_fit`) must cover supp(whole).
bool covered_by(const SignedSubset& whole, const SignedFamily& parts, bool signed_fit) {
  Subset cover;
  for (const auto& p : parts) {
    const bool fits = signed_fit ? conformal(p, whole) : whole.support().contains(p.support());
    if (fits) cover = cover | p.support();
  }
  return cover == whole.support();
}

bool all_covered(const SignedFamily& wholes, const SignedFamily& parts, bool signed_fit) {
  return std::all_of(wholes.begin(), wholes.end(),
                     [&](const SignedSubset& w) { return covered_by(w, parts, signed_fit); });
}

}  // namespace

ValidationReport validate(const OrientedMatroid& m, const OrientedMatroid& mprime, const SweepOptions& opts) {
  require_same_ground(m, mprime);
  ValidationReport report;

  for (const auto& x : m.circuits()) {
    for (const auto& y : mprime.cocircuits()) {
      const Subset shared = x.support() & y.support();
      if (shared.empty()) continue;
      if (report.weak && shared.count() == 1) {
        report.weak = false;
        report.weak_witness = {x.support(), y.support()};
      }
      const Subset agree = (x.positive & y.positive) | (x.negative & y.negative);
      if (report.oriented && agree == shared) {
        report.oriented = false;
        report.oriented_witness = {x, y};
      }
    }
  }

  const RankTable rm = rank_table(m.realization(), opts);
  const RankTable rp = rank_table(mprime.realization(), opts);
  const std::size_t n = m.size();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total && report.rank_condition; ++bits) {
    const Subset a(bits);
    const long gap = static_cast<long>(rm[a]) - static_cast<long>(rp[a]);
    for (std::size_t e = 0; e < n; ++e) {
      if (a.contains(e)) continue;
      const Subset b = a.with(e);
      if (static_cast<long>(rm[b]) - static_cast<long>(rp[b]) < gap) {
        report.rank_condition = false;
        report.rank_witness = {a, b};
        break;
      }
    }
  }
  return report;
}

bool circuits_are_unions(const OrientedMatroid& m, const OrientedMatroid& mprime) {
  require_same_ground(m, mprime);
  return all_covered(m.circuits(), mprime.circuits(), false);
}

bool circuits_are_conformal_unions(const OrientedMatroid& m, const OrientedMatroid& mprime) {
  require_same_ground(m, mprime);
  return all_covered(m.circuits(), mprime.circuits(), true);
}

bool cocircuits_are_unions(const OrientedMatroid& m, const OrientedMatroid& mprime) {
  require_same_ground(m, mprime);
  return all_covered(mprime.cocircuits(), m.cocircuits(), false);
}

bool cocircuits_are_conformal_unions(const OrientedMatroid& m, const OrientedMatroid& mprime) {
  require_same_ground(m, mprime);
  return all_covered(mprime.cocircuits(), m.cocircuits(), true);
}

Perspective Perspective::create(OrientedMatroid m, OrientedMatroid mprime, const SweepOptions& opts) {
  const auto report = validate(m, mprime, opts);
  const auto& g = m.ground();
  if (!report.weak) {
    const auto [c, d] = *report.weak_witness;
    throw AxiomError("not a perspective: circuit " + format_subset(g, c) + " of M meets cocircuit " +
                     format_subset(g, d) + " of M' in exactly one element");
  }
  if (!report.oriented) {
    const auto& [x, y] = *report.oriented_witness;
    throw AxiomError("not an oriented perspective: circuit " + format_signed(g, x) + " of M and cocircuit " +
                     format_signed(g, y) + " of M' have a conformal intersection");
  }
  if (!report.rank_condition) {
    const auto [a, b] = *report.rank_witness;
    throw AxiomError("not a perspective: r_M - r_M' decreases from " + format_subset(g, a) + " to " +
                     format_subset(g, b));
  }
  return Perspective(std::move(m), std::move(mprime));
}

Perspective Perspective::identity(const OrientedMatroid& m) { return Perspective(m, m); }

Perspective Perspective::reorient(Subset a) const { return Perspective(m_.reorient(a), mprime_.reorient(a)); }

Perspective Perspective::delete_position(std::size_t position, const SweepOptions& opts) const {
  return Perspective(OrientedMatroid(omt::delete_position(m_.realization(), position), opts),
                     OrientedMatroid(omt::delete_position(mprime_.realization(), position), opts));
}

Perspective Perspective::contract_position(std::size_t position, const SweepOptions& opts) const {
  return Perspective(OrientedMatroid(omt::contract_position(m_.realization(), position), opts),
                     OrientedMatroid(omt::contract_position(mprime_.realization(), position), opts));
}

Perspective from_major(const Realization& n, std::span<const int> contracted, const SweepOptions& opts) {
  const Subset c = n.ground().subset(contracted);
  const Subset keep = Subset::full(n.size()) - c;
  if (keep.empty()) throw InputError("from_major: the contracted set is the whole ground set");

  std::vector<int> labels;
  for (auto p : keep.positions()) labels.push_back(n.ground().label(p));
  Realization m(GroundSet(labels), n.matrix().select_columns(keep));

  Realization mprime = n;
  // highest position first so lower positions stay valid
  auto positions = c.positions();
  for (auto it = positions.rbegin(); it != positions.rend(); ++it) mprime = contract_position(mprime, *it);

  return Perspective::create(OrientedMatroid(std::move(m), opts), OrientedMatroid(std::move(mprime), opts), opts);
}

Perspective bounded_perspective(const Realization& m, int label, const SweepOptions& opts) {
  const std::size_t e = m.ground().position(label);
  if (m.is_loop(e)) throw InputError("bounded_perspective: element " + std::to_string(label) + " is a loop");
  if (m.is_isthmus(e))
    throw InputError("bounded_perspective: element " + std::to_string(label) + " is an isthmus");

  const Realization contracted = contract_position(m, e);
  RationalMatrix a(contracted.matrix().rows(), m.size());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0, k = 0; c < m.size(); ++c) {
      if (c == e) continue;
      a(r, c) = contracted.matrix()(r, k++);
    }
  return Perspective::create(OrientedMatroid(m, opts), OrientedMatroid(Realization(m.ground(), std::move(a)), opts),
                             opts);
}

Polynomial tutte3_closed(const Realization& m, const Realization& mprime, const SweepOptions& opts) {
  if (!(m.ground() == mprime.ground())) throw InputError("tutte3: M and M' have different ground sets");
  const RankTable rm = rank_table(m, opts);
  const RankTable rp = rank_table(mprime, opts);
  const auto h = opts.parallel ? kernels::closed_form_histogram_parallel(rm, rp, m.size())
                               : kernels::closed_form_histogram_serial(rm, rp, m.size());
  return kernels::expand_closed_form(h);
}

Polynomial tutte3_closed(const Perspective& p, const SweepOptions& opts) {
  return tutte3_closed(p.m().realization(), p.mprime().realization(), opts);
}

}  // namespace omt
