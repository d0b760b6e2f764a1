#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <utility>
#include <vector>

#include "dqf/errors.hpp"

namespace dqf {

using RealMatrix = Eigen::MatrixXd;

// Directed graph on nodes 1..n. Arc (i, j) means agent i senses agent j;
// with the out-degree Laplacian below, information therefore flows from
// head to tail.
struct DiGraph {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;  // (tail, head), 1-based, ordered

  DiGraph() = default;
  // Validates ids, self-loops and duplicates; throws ArgumentError.
  DiGraph(int n_, std::vector<std::pair<int, int>> arcs_);

  int out_degree(int v) const;
};

// Directed n-cycle (1,2),...,(n-1,n),(n,1); the undirected variant appends
// every reversed arc. Requires n >= 3.
DiGraph gen_cycle(int n, bool directed);

// Core directed n0-cycle on nodes 1..n0 plus branch nodes n0+1..2n0, each
// branch sensing the two adjacent core nodes i and i+1 (wrapping).
// Requires n0 >= 3.
DiGraph gen_star(int n0, bool directed);

// n0 x n0 row-major lattice; horizontal arcs (v, v+1) inside each row and
// vertical arcs (v, v+n0). The directed variant is acyclic with the single
// sink n0^2. Requires n0 >= 2.
DiGraph gen_grid(int n0, bool directed);

// L = D - A with d_i the out-degree and a_ij = 1 iff (i,j) is an arc.
// Rows sum to zero exactly.
RealMatrix underlying_laplacian(const DiGraph& g);

// True iff some node is reachable from every node along arc direction
// (a sensing sink every agent can reach).
bool has_sensing_sink(const DiGraph& g);

// True iff the Laplacian's zero eigenvalue is algebraically simple and every
// other eigenvalue has positive real part. Decided spectrally; agrees with
// has_sensing_sink (asserted in debug builds).
bool has_simple_zero(const DiGraph& g);

// Plain-text edge list: header "n <count>" then one "tail head" per line.
void write_graph(std::ostream& os, const DiGraph& g);
DiGraph read_graph(std::istream& is);

}  // namespace dqf
