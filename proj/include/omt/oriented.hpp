#pragma once

#include <vector>

#include "omt/matroid.hpp"
#include "omt/poly.hpp"
#include "omt/subset.hpp"

namespace omt {

/// Disjoint positive and negative parts over element positions.
struct SignedSubset {
  Subset positive;
  Subset negative;

  Subset support() const { return positive | negative; }
  bool is_positive() const { return negative.empty(); }
  SignedSubset negated() const { return {negative, positive}; }
  /// Sign flip on the elements of `a`.
  SignedSubset reoriented(Subset a) const {
    const Subset flip = support() & a;
    return {(positive - flip) | (negative & flip), (negative - flip) | (positive & flip)};
  }

  friend bool operator==(const SignedSubset&, const SignedSubset&) = default;
  friend auto operator<=>(const SignedSubset&, const SignedSubset&) = default;
};

/// Families are stored closed under negation and sorted by
/// (support size, support, positive part).
using SignedFamily = std::vector<SignedSubset>;
void sort_canonical(SignedFamily& family);

/// y conforms to x: y+ inside x+ and y- inside x-.
bool conformal(const SignedSubset& y, const SignedSubset& x);

std::string format_signed(const GroundSet& ground, const SignedSubset& s);

/// Sign patterns of the minimal linear dependences among the columns, with
/// both signs.
SignedFamily signed_circuits(const Realization& m, const SweepOptions& opts = {});
/// Signed circuits of the dual realization.
SignedFamily signed_cocircuits(const Realization& m, const SweepOptions& opts = {});
/// Independent route: each hyperplane H (closed set of rank r-1) gives the
/// sign pattern of the row-space functional vanishing on H.
SignedFamily signed_cocircuits_direct(const Realization& m, const SweepOptions& opts = {});

/// A realization together with its signed circuits and cocircuits, and the
/// reorientation applied so far. Immutable.
class OrientedMatroid {
 public:
  OrientedMatroid() = default;
  explicit OrientedMatroid(Realization realization, const SweepOptions& opts = {});

  const Realization& realization() const noexcept { return realization_; }
  const GroundSet& ground() const noexcept { return realization_.ground(); }
  std::size_t size() const noexcept { return realization_.size(); }
  const SignedFamily& circuits() const noexcept { return circuits_; }
  const SignedFamily& cocircuits() const noexcept { return cocircuits_; }
  /// Elements reoriented relative to the realization this was built from.
  Subset reorientation() const noexcept { return reorientation_; }

  /// -_A M: columns in `a` negated, stored families flipped on `a`.
  OrientedMatroid reorient(Subset a) const;

  /// Equality as oriented matroids: ground set and signed families.
  friend bool operator==(const OrientedMatroid& a, const OrientedMatroid& b) {
    return a.ground() == b.ground() && a.circuits_ == b.circuits_ && a.cocircuits_ == b.cocircuits_;
  }

 private:
  Realization realization_;
  SignedFamily circuits_;
  SignedFamily cocircuits_;
  Subset reorientation_;
};

struct ActiveSets {
  Subset o;      ///< smallest elements of positive circuits
  Subset ostar;  ///< smallest elements of positive cocircuits
  friend bool operator==(const ActiveSets&, const ActiveSets&) = default;
};

ActiveSets orientation_active_sets(const OrientedMatroid& om);

/// Smallest elements of the members of `family` that become positive after
/// reorientation on `a`. Shared by the fast sweep kernels.
Subset smallest_of_positive(const SignedFamily& family, Subset a);

struct ThetaRecord {
  Subset a;
  Subset o;
  Subset ostar;
  Subset theta;           ///< O \ A
  Subset theta_bar;       ///< O & A
  Subset theta_star;      ///< O* \ A
  Subset theta_bar_star;  ///< O* & A
  Monomial monomial;      ///< x^|Theta*| u^|ThetaBar*| y^|Theta| v^|ThetaBar|

  friend bool operator==(const ThetaRecord&, const ThetaRecord&) = default;
};

/// Builds the record from O (primal side) and O* (dual side) of the
/// reorientation on `a`.
ThetaRecord make_theta_record(Subset a, Subset o, Subset ostar);

/// O and O* of -_A(base), split along A.
ThetaRecord theta_record(const OrientedMatroid& base, Subset a);

struct Indicators {
  bool o = false;      ///< a in O(M)
  bool ostar = false;  ///< a in O*(M)
};

Indicators element_indicators(const OrientedMatroid& om, std::size_t position);

bool is_acyclic(const OrientedMatroid& om);
/// Every element lies in some positive circuit.
bool is_totally_cyclic(const OrientedMatroid& om);
/// Every element is in a positive circuit or a positive cocircuit, never both.
bool minty_check(const OrientedMatroid& om);

}  // namespace omt
