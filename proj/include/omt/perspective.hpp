#pragma once

#include <optional>
#include <span>
#include <utility>

#include "omt/oriented.hpp"

namespace omt {

struct ValidationReport {
  /// No circuit of M meets a cocircuit of M' in exactly one element.
  bool weak = true;
  /// No signed circuit of M and signed cocircuit of M' share a nonempty
  /// intersection on which all signs agree.
  bool oriented = true;
  /// r_M(A) - r_{M'}(A) is monotone in A (checked on single-element steps).
  bool rank_condition = true;

  std::optional<std::pair<Subset, Subset>> weak_witness;  ///< (circuit, cocircuit) supports
  std::optional<std::pair<SignedSubset, SignedSubset>> oriented_witness;
  std::optional<std::pair<Subset, Subset>> rank_witness;  ///< (A, A + e)

  bool ok() const { return weak && oriented && rank_condition; }
};

/// Pairwise scans of the stored families; the first failing pair in family
/// order is reported. Throws InputError if the ground sets differ.
ValidationReport validate(const OrientedMatroid& m, const OrientedMatroid& mprime,
                          const SweepOptions& opts = {});

/// Cross-check oracles: every circuit of M is a union of circuits of M'
/// (unsigned), resp. a conformal union of signed circuits of M'.
bool circuits_are_unions(const OrientedMatroid& m, const OrientedMatroid& mprime);
bool circuits_are_conformal_unions(const OrientedMatroid& m, const OrientedMatroid& mprime);
/// Dual forms: every cocircuit of M' is a (conformal) union of cocircuits of M.
bool cocircuits_are_unions(const OrientedMatroid& m, const OrientedMatroid& mprime);
bool cocircuits_are_conformal_unions(const OrientedMatroid& m, const OrientedMatroid& mprime);

/// An oriented matroid perspective M -> M'. Only constructible from pairs that
/// pass validate().
class Perspective {
 public:
  /// Throws AxiomError naming the failing property.
  static Perspective create(OrientedMatroid m, OrientedMatroid mprime, const SweepOptions& opts = {});
  static Perspective identity(const OrientedMatroid& m);

  const OrientedMatroid& m() const noexcept { return m_; }
  const OrientedMatroid& mprime() const noexcept { return mprime_; }
  const GroundSet& ground() const noexcept { return m_.ground(); }
  std::size_t size() const noexcept { return m_.size(); }

  /// Both sides reoriented on the same set.
  Perspective reorient(Subset a) const;
  /// (M \ e, M' \ e) and (M / e, M' / e) by position.
  Perspective delete_position(std::size_t position, const SweepOptions& opts = {}) const;
  Perspective contract_position(std::size_t position, const SweepOptions& opts = {}) const;

 private:
  Perspective(OrientedMatroid m, OrientedMatroid mprime) : m_(std::move(m)), mprime_(std::move(mprime)) {}

  OrientedMatroid m_;
  OrientedMatroid mprime_;
};

/// M = N \ C and M' = N / C on E = ground(N) \ C, order inherited.
/// Throws InputError if C is the whole ground set.
Perspective from_major(const Realization& n, std::span<const int> contracted, const SweepOptions& opts = {});

/// M' = M / e plus a loop at e, keeping e's label and position. Throws
/// InputError if e is a loop or an isthmus of M.
Perspective bounded_perspective(const Realization& m, int label, const SweepOptions& opts = {});

/// Three-variable closed formula over all subsets. The realization overload
/// throws AxiomError on a negative z exponent (the pair is not a perspective).
Polynomial tutte3_closed(const Realization& m, const Realization& mprime, const SweepOptions& opts = {});
Polynomial tutte3_closed(const Perspective& p, const SweepOptions& opts = {});

}  // namespace omt
