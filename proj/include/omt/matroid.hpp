#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "omt/linalg.hpp"
#include "omt/poly.hpp"
#include "omt/subset.hpp"

namespace omt {

/// Linearly ordered ground set: position i holds the i-th smallest label.
class GroundSet {
 public:
  GroundSet() = default;
  /// Labels must be distinct; they are kept in the given order.
  explicit GroundSet(std::vector<int> labels);
  /// Labels 1..n.
  static GroundSet iota(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  int label(std::size_t position) const { return labels_.at(position); }
  const std::vector<int>& labels() const noexcept { return labels_; }

  /// Throws InputError for an unknown label.
  std::size_t position(int label) const;
  Subset subset(std::span<const int> labels) const;
  std::vector<int> labels_of(Subset s) const;
  GroundSet without(std::size_t position) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<int> labels_;
};

/// Concatenated labels ("134"), or "-" for the empty set. Labels above 9 are
/// comma separated so the text stays unambiguous.
std::string format_subset(const GroundSet& ground, Subset s);

/// Rational matrix whose columns realize an oriented matroid on `ground`.
class Realization {
 public:
  Realization() = default;
  Realization(GroundSet ground, RationalMatrix matrix);

  const GroundSet& ground() const noexcept { return ground_; }
  const RationalMatrix& matrix() const noexcept { return matrix_; }
  std::size_t size() const noexcept { return ground_.size(); }
  std::size_t rank() const noexcept { return rank_; }

  std::size_t rank(Subset s) const { return column_rank(matrix_, s); }
  /// Label-based rank query; throws InputError on unknown labels.
  std::size_t rank_of(std::span<const int> labels) const { return rank(ground_.subset(labels)); }

  bool is_loop(std::size_t position) const { return rank(Subset::single(position)) == 0; }
  bool is_isthmus(std::size_t position) const {
    return rank(Subset::full(size()).without(position)) < rank_;
  }

 private:
  GroundSet ground_;
  RationalMatrix matrix_;
  std::size_t rank_ = 0;
};

struct Arc {
  int label;
  std::string tail;
  std::string head;
};

struct Digraph {
  std::vector<Arc> arcs;
};

/// Signed incidence realization: +1 in the head row, -1 in the tail row, a
/// zero column for a loop. Columns follow ascending arc label; rows follow
/// first appearance of each vertex.
Realization from_digraph(const Digraph& g);

/// Controls for every operation that scans 2^|E| subsets.
struct SweepOptions {
  std::size_t guard = 20;  ///< largest |E| accepted without `force`
  bool force = false;
  bool parallel = true;  ///< OpenMP kernel; false selects the serial reference
};

/// Largest |E| accepted even with `force` (2^|E| tables must fit in memory).
inline constexpr std::size_t kHardElementLimit = 30;

/// Throws GuardError when n exceeds the guard (or the hard limit).
void check_guard(std::size_t n, const SweepOptions& opts);

/// rank of every subset, indexed by Subset::bits().
class RankTable {
 public:
  RankTable() = default;
  explicit RankTable(std::vector<std::uint8_t> ranks) : ranks_(std::move(ranks)) {}

  std::size_t operator[](Subset s) const { return ranks_[s.bits()]; }
  std::size_t size() const noexcept { return ranks_.size(); }
  const std::vector<std::uint8_t>& data() const noexcept { return ranks_; }

  friend bool operator==(const RankTable&, const RankTable&) = default;

 private:
  std::vector<std::uint8_t> ranks_;
};

RankTable rank_table(const Realization& m, const SweepOptions& opts = {});

Realization delete_position(const Realization& m, std::size_t position);
Realization contract_position(const Realization& m, std::size_t position);
/// Deletion by label. Throws InputError for an unknown label.
Realization delete_element(const Realization& m, int label);
/// Contraction by label: pivot on a nonzero entry of the column, drop that
/// row and the column. Contracting a loop is deleting it.
Realization contract_element(const Realization& m, int label);
/// Rows span the orthogonal complement of the row space; same ground order.
Realization dual(const Realization& m);

/// (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)} summed over all subsets.
Polynomial tutte_closed(const Realization& m, const SweepOptions& opts = {});

/// All bases in ascending Subset order.
std::vector<Subset> bases(const Realization& m, const SweepOptions& opts = {});

struct BasisActivity {
  std::size_t internal = 0;  ///< iota
  std::size_t external = 0;  ///< epsilon
  Subset internally_active;
  Subset externally_active;
};

/// Tutte activities of a basis w.r.t. the ground order. Throws InputError if
/// `basis` is not a basis.
BasisActivity basis_activities(const Realization& m, Subset basis);

/// Sum over bases of x^iota y^epsilon.
Polynomial tutte_bases(const Realization& m, const SweepOptions& opts = {});

}  // namespace omt
