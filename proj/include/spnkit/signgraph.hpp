#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "spnkit/matrix.hpp"

namespace spnkit {

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected simple graph on vertices 0..n-1; edges are stored with
/// first < second, sorted.
struct Graph {
  std::size_t n = 0;
  std::vector<Edge> edges;

  std::vector<std::vector<std::size_t>> adjacency() const;
};

struct SignGraphs {
  Graph positive;
  Graph negative;
};

/// Entries within eps_ord of zero belong to neither graph.
SignGraphs extract_sign_graphs(const SymMatrix& a, const Tolerances& tol = {});

struct ThresholdResult {
  bool threshold = false;
  /// Vertices in deletion order, each isolated or dominating at its turn.
  /// Covers every vertex when `threshold` holds.
  std::vector<std::size_t> elimination;
};

ThresholdResult threshold_elimination(const Graph& g);
bool is_threshold(const Graph& g);

/// Both sign graphs threshold. False proves that no permutation and positive
/// rescaling maps A into M_n; true is inconclusive.
bool orbit_necessary_filter(const SymMatrix& a, const Tolerances& tol = {});

std::string to_dot(const SignGraphs& g, const std::string& name = "signs");

}  // namespace spnkit
