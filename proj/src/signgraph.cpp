#include "spnkit/signgraph.hpp"

#include <algorithm>

namespace spnkit {

std::vector<std::vector<std::size_t>> Graph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

SignGraphs extract_sign_graphs(const SymMatrix& a, const Tolerances& tol) {
  SignGraphs g;
  g.positive.n = a.n();
  g.negative.n = a.n();
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = i + 1; j < a.n(); ++j) {
      if (a(i, j) > tol.eps_ord) g.positive.edges.emplace_back(i, j);
      if (a(i, j) < -tol.eps_ord) g.negative.edges.emplace_back(i, j);
    }
  return g;
}

ThresholdResult threshold_elimination(const Graph& g) {
  const std::size_t n = g.n;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [u, v] : g.edges) {
    if (u == v || adj[u][v]) continue;
    adj[u][v] = adj[v][u] = true;
    ++degree[u];
    ++degree[v];
  }
  std::vector<bool> alive(n, true);
  ThresholdResult out;
  std::size_t remaining = n;
  while (remaining > 0) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n && pick == n; ++v)
      if (alive[v] && (degree[v] == 0 || degree[v] + 1 == remaining)) pick = v;
    if (pick == n) return out;
    alive[pick] = false;
    --remaining;
    out.elimination.push_back(pick);
    for (std::size_t w = 0; w < n; ++w)
      if (alive[w] && adj[pick][w]) --degree[w];
  }
  out.threshold = true;
  return out;
}

bool is_threshold(const Graph& g) { return threshold_elimination(g).threshold; }

bool orbit_necessary_filter(const SymMatrix& a, const Tolerances& tol) {
  const SignGraphs g = extract_sign_graphs(a, tol);
  return is_threshold(g.positive) && is_threshold(g.negative);
}

std::string to_dot(const SignGraphs& g, const std::string& name) {
  std::string out = "graph " + name + " {\n";
  for (std::size_t v = 0; v < g.positive.n; ++v) out += "  " + std::to_string(v) + ";\n";
  for (const auto& [u, v] : g.positive.edges)
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + " [color=blue, label=\"+\"];\n";
  for (const auto& [u, v] : g.negative.edges)
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) +
           " [color=red, style=dashed, label=\"-\"];\n";
  out += "}\n";
  return out;
}

}  // namespace spnkit
