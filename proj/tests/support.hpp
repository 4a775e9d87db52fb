#pragma once

// Test fixtures and independent oracles.

#include <random>
#include <string>
#include <vector>

#include "omt/expansions.hpp"
#include "omt/io.hpp"

namespace omt::test {

std::string read_data(const std::string& name);

Realization example1();
Perspective example2();
Realization triangle();
Perspective path_parallel();
std::vector<ThetaRecord> table(const std::string& name, std::size_t n);

/// Rows sorted by A.
std::vector<ThetaRecord> by_subset(std::vector<ThetaRecord> rows);

/// Weakly connected digraphs on vertices 0..k-1 (k <= max_vertices) with
/// 1..max_arcs arcs, loops and parallel arcs allowed, one per isomorphism
/// class; arcs are labelled 1.. in sorted order.
std::vector<Digraph> small_digraphs(int max_vertices, int max_arcs);
std::string describe(const Digraph& g);

/// rows x cols matrix with entries in {-2..2} (about a third zero) and an
/// occasional fraction.
Realization random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols);

/// Tutte polynomial of a multigraph by deletion/contraction on the edge
/// list; loops are (u,u).
Polynomial tutte_graph_oracle(std::vector<std::pair<int, int>> edges);
std::vector<std::pair<int, int>> edges_of(const Digraph& g);

/// O and O* of -_A M from scratch: negate the columns of A in the matrix and
/// recompute the signed circuits and cocircuits.
ActiveSets active_sets_oracle(const Realization& m, Subset a);

/// Positive loop, single isthmus, parallel pair, two coloops.
Realization positive_loop();
Realization single_isthmus();
Realization parallel_pair();
Realization two_coloops();

}  // namespace omt::test
