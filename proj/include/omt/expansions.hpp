#pragma once

// Reorientation sweeps over a perspective and everything computed from them:
// the four-variable identity, its specializations, counts and derivatives.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omt/perspective.hpp"

namespace omt {

struct ExpansionReport {
  std::vector<ThetaRecord> rows;  ///< indexed by A.bits()
  Polynomial sum;                 ///< sum of the row monomials
  Polynomial reference;           ///< t(M,M';x+u,y+v,1) from the closed formula
  bool pass = false;
};

/// Theta* and ThetaBar* taken in M', Theta and ThetaBar taken in M.
ThetaRecord monomial_of(const Perspective& p, Subset a);

/// One sweep over all 2^|E| reorientations. Throws GuardError past the guard.
ExpansionReport expansion_sum(const Perspective& p, const SweepOptions& opts = {});
/// The identity perspective M -> M.
ExpansionReport expansion_sum(const OrientedMatroid& m, const SweepOptions& opts = {});

/// t(M,M';x,y,1), the closed formula at z = 1.
Polynomial tutte_xy(const Perspective& p, const SweepOptions& opts = {});

/// Sum over A of x^|O*(-_A M')| y^|O(-_A M)|.
Polynomial lv84_expansion(const ExpansionReport& report);
Polynomial lv84_expansion(const Perspective& p, const SweepOptions& opts = {});

struct SpecializationReport {
  Polynomial shifted;     ///< sum of (x-1)^theta* (y-1)^theta
  Polynomial restricted;  ///< sum of x^theta* y^theta over rows with thetabar* = thetabar = 0
  Integer two_zero_star;  ///< sum of 2^theta* over rows with thetabar* = theta = thetabar = 0
  Integer two_zero_bar;   ///< sum of 2^thetabar* over rows with theta* = theta = thetabar = 0
  Polynomial t;           ///< t(x,y,1)
  Integer t20;            ///< t(2,0,1)

  bool shifted_ok() const { return shifted == t; }
  bool restricted_ok() const { return restricted == t; }
  bool two_zero_ok() const { return two_zero_star == t20 && two_zero_bar == t20; }
  bool ok() const { return shifted_ok() && restricted_ok() && two_zero_ok(); }
};

/// `t` is t(M,M';x,y,1).
SpecializationReport specialization_suite(const ExpansionReport& report, const Polynomial& t);

/// #{A : -_A M acyclic}.
Integer count_acyclic(const OrientedMatroid& m, const SweepOptions& opts = {});
/// #{A : -_A M acyclic and -_A M' totally cyclic}.
Integer count_bounded(const Perspective& p, const SweepOptions& opts = {});

/// Sums of (-1)^(a+b) over the rows, with (a, b) in turn
/// (theta*, theta), (theta*, thetabar), (thetabar*, theta), (thetabar*, thetabar).
std::array<Integer, 4> signed_sums(const ExpansionReport& report);
/// The first of signed_sums.
Integer signed_sum(const ExpansionReport& report);

struct BasicCounts {
  Integer unbarred;  ///< #{A : theta* = theta = 0}
  Integer barred;    ///< #{A : thetabar* = thetabar = 0}
};
BasicCounts count_basic_orientations(const ExpansionReport& report);
BasicCounts count_basic_orientations(const OrientedMatroid& m, const SweepOptions& opts = {});

/// dp! dq! times the sum of x^theta* y^theta over rows with thetabar* = dp
/// and thetabar = dq.
Polynomial derivative_expansion(const ExpansionReport& report, std::uint32_t dp, std::uint32_t dq);
/// dp! times the sum of x^(theta* + theta) over rows with thetabar* + thetabar = dp.
Polynomial derivative_diag(const ExpansionReport& report, std::uint32_t dp);

/// d^(dp+dq) t / dx^dp dy^dq of t(x,y,1), and d^dp/dx^dp of t(x,x,1).
Polynomial derivative_reference(const Polynomial& t, std::uint32_t dp, std::uint32_t dq);
Polynomial derivative_diag_reference(const Polynomial& t, std::uint32_t dp);

/// Sum over p, q of u^p v^q / (p! q!) times derivative_expansion(p, q).
Polynomial taylor_reconstruction(const ExpansionReport& report);

enum class LemmaCase { first, second, both };
const char* to_string(LemmaCase c);

/// Which of the two groups of indicator equalities holds for every a below
/// the greatest element e. Throws Error if neither does.
LemmaCase lemma1_case(const Perspective& p, const SweepOptions& opts = {});

struct DeletionContractionReport {
  bool pass = true;
  std::size_t nodes = 0;  ///< perspectives checked
  std::string failure;    ///< first failing node, if any
};

/// Checks f(P) against the recursion on the greatest element: (x+u) f(P\e)
/// for an isthmus of M', (y+v) f(P\e) for a loop of M, f(P\e) + f(P/e)
/// otherwise, and 1 on the empty ground set. The minors are checked in turn
/// down to `depth` levels.
DeletionContractionReport deletion_contraction_check(const Perspective& p, std::size_t depth = SIZE_MAX,
                                                     const SweepOptions& opts = {});

/// Row-for-row comparison of two row sets (e.g. against a transcribed table);
/// returns the first differing A, or nullopt.
std::optional<Subset> first_row_mismatch(const std::vector<ThetaRecord>& a, const std::vector<ThetaRecord>& b);

/// The monomial with x<->u and y<->v exchanged.
Monomial swap_sides(const Monomial& m);

}  // namespace omt
