#pragma once

// The 2^|E| sweeps. Each kernel has a straightforward serial reference and an
// OpenMP version; the two must agree exactly (tests/test_kernels.cpp), and
// bench/ compares their speed. Callers normally go through the dispatching
// functions in matroid.hpp / expansions.hpp, which honour SweepOptions.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "omt/matroid.hpp"
#include "omt/oriented.hpp"

namespace omt::kernels {

/// Per-subset Gaussian elimination.
std::vector<std::uint8_t> rank_table_serial(const Realization& m);

/// Depth-first subset enumeration that extends one echelon basis per step;
/// the top bits are split across threads.
std::vector<std::uint8_t> rank_table_parallel(const Realization& m);

/// Multiplicities of exponent triples (x-1, y-1, z) of the perspective closed
/// formula: (r(M')-r_{M'}(A), |A|-r_M(A), r(M)-r(M')-(r_M(A)-r_{M'}(A))).
/// Throws AxiomError if a z exponent would be negative.
using ExponentHistogram = std::map<std::array<std::uint32_t, 3>, std::uint64_t>;

ExponentHistogram closed_form_histogram_serial(const RankTable& m, const RankTable& mprime, std::size_t n);
ExponentHistogram closed_form_histogram_parallel(const RankTable& m, const RankTable& mprime, std::size_t n);

/// Sum of count * (x-1)^a (y-1)^b z^c over the histogram.
Polynomial expand_closed_form(const ExponentHistogram& h);

/// One ThetaRecord per A, indexed by A.bits(): O and Theta/ThetaBar are taken
/// in `m`, O* and Theta*/ThetaBar* in `mprime`.
/// The serial version reorients both oriented matroids as values for every A.
std::vector<ThetaRecord> theta_sweep_serial(const OrientedMatroid& m, const OrientedMatroid& mprime);
/// Bitmask sign flips on the stored families, no copies.
std::vector<ThetaRecord> theta_sweep_parallel(const OrientedMatroid& m, const OrientedMatroid& mprime);

/// Sum of the row monomials, reduced per thread and merged.
Polynomial monomial_sum_serial(const std::vector<ThetaRecord>& rows);
Polynomial monomial_sum_parallel(const std::vector<ThetaRecord>& rows);

}  // namespace omt::kernels
