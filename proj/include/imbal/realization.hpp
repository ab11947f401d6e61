#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "imbal/checks.hpp"
#include "imbal/core.hpp"
#include "imbal/error.hpp"

namespace imbal {

class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const Witness& w)
      : Error(Errc::infeasible, "infeasible at k=" + std::to_string(w.k) + ": " +
                                    std::to_string(w.lhs) + " vs " + std::to_string(w.rhs)),
        witness_(w) {}

  const Witness& witness() const noexcept { return witness_; }

 private:
  Witness witness_;
};

struct RealizationResult {
  RGraph graph;
  std::vector<Vertex> vertex_map;  // 0-based position in B -> vertex id
  Multiplicity arc_count = 0;
};

/// Sum of the positive entries: each arc raises one imbalance by one, so no
/// realization has fewer arcs.
inline Multiplicity min_arc_lower_bound(std::span<const Imbalance> b) {
  Imbalance total = 0;
  Multiplicity positive = 0;
  for (auto x : b) {
    total = detail::checked_add(total, x);
    if (x > 0) positive = detail::checked_add(positive, x);
  }
  if (total != 0) {
    throw Error(Errc::invalid_parameter, "sequence sums to " + std::to_string(total) + ", not 0");
  }
  return positive;
}

namespace detail {

// Unit-cost flow on the complete digraph with at most r units per pair. Net
// flow between a pair only ever runs one way, so the residual arc u->v is
// either "cancel flow v->u" (cost -1) or "add flow u->v" (cost +1).
class PairFlow {
 public:
  PairFlow(std::size_t n, Multiplicity r) : n_(n), r_(r), flow_(n * n, 0) {}

  Multiplicity flow(Vertex u, Vertex v) const { return flow_[u * n_ + v]; }

  Multiplicity residual(Vertex u, Vertex v) const {
    return flow(v, u) > 0 ? flow(v, u) : r_ - flow(u, v);
  }
  int cost(Vertex u, Vertex v) const { return flow(v, u) > 0 ? -1 : 1; }

  void push(Vertex u, Vertex v, Multiplicity amount) {
    auto& back = flow_[v * n_ + u];
    if (back > 0) {
      back -= amount;
    } else {
      flow_[u * n_ + v] += amount;
    }
  }

  std::size_t size() const noexcept { return n_; }

 private:
  std::size_t n_;
  Multiplicity r_;
  std::vector<Multiplicity> flow_;
};

// Shortest (by residual cost) path from any vertex with spare supply to any
// vertex with unmet demand. Returns the path as a vertex list, empty if none.
inline std::vector<Vertex> cheapest_augmenting_path(const PairFlow& f,
                                                    const std::vector<Multiplicity>& supply,
                                                    const std::vector<Multiplicity>& demand) {
  const auto n = f.size();
  constexpr auto kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(n, kInf);
  std::vector<Vertex> pred(n, n);
  std::vector<bool> queued(n, false);
  std::deque<Vertex> queue;
  for (Vertex u = 0; u < n; ++u) {
    if (supply[u] > 0) {
      dist[u] = 0;
      queue.push_back(u);
      queued[u] = true;
    }
  }
  // Bellman-Ford (queue form); the current flow is cost-optimal for its value,
  // so the residual graph has no negative cycles.
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    queued[u] = false;
    for (Vertex v = 0; v < n; ++v) {
      if (v == u || f.residual(u, v) == 0) continue;
      const auto nd = dist[u] + f.cost(u, v);
      if (nd < dist[v]) {
        dist[v] = nd;
        pred[v] = u;
        if (!queued[v]) {
          queue.push_back(v);
          queued[v] = true;
        }
      }
    }
  }
  Vertex target = n;
  for (Vertex v = 0; v < n; ++v) {
    if (demand[v] > 0 && dist[v] != kInf && (target == n || dist[v] < dist[target])) target = v;
  }
  if (target == n) return {};
  std::vector<Vertex> path{target};
  while (pred[path.back()] != n) path.push_back(pred[path.back()]);
  return {path.rbegin(), path.rend()};
}

}  // namespace detail

/// Builds an r-graph whose sorted imbalances equal the non-decreasing sequence
/// b, using as few arcs as any realization of b.
///
/// Positive entries ship to negative entries greedily in ascending position
/// order, at most r arcs per pair. If the greedy pass leaves supply unmet,
/// cheapest augmenting paths finish the job; these may route through
/// zero-imbalance vertices, which is the only case where the result has more
/// than min_arc_lower_bound(b) arcs. Vertex i realizes position i.
inline RealizationResult realize(std::span<const Imbalance> b, Multiplicity r) {
  if (auto verdict = check_feasible_nondecreasing(b, r); !verdict) {
    throw InfeasibleError(*verdict.witness);
  }
  const auto n = b.size();
  std::vector<Multiplicity> supply(n, 0);
  std::vector<Multiplicity> demand(n, 0);
  for (Vertex i = 0; i < n; ++i) {
    if (b[i] > 0) supply[i] = b[i];
    if (b[i] < 0) demand[i] = -b[i];
  }

  detail::PairFlow flow(n, r);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n && supply[i] > 0; ++j) {
      if (demand[j] == 0) continue;
      const auto ship = std::min({r, supply[i], demand[j]});
      flow.push(i, j, ship);
      supply[i] -= ship;
      demand[j] -= ship;
    }
  }

  auto remaining = std::accumulate(supply.begin(), supply.end(), Multiplicity{0});
  while (remaining > 0) {
    const auto path = detail::cheapest_augmenting_path(flow, supply, demand);
    if (path.empty()) {
      throw Error(Errc::internal_contradiction,
                  "sequence passed the feasibility check but could not be saturated");
    }
    auto amount = std::min(supply[path.front()], demand[path.back()]);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      amount = std::min(amount, flow.residual(path[k], path[k + 1]));
    }
    for (std::size_t k = 0; k + 1 < path.size(); ++k) flow.push(path[k], path[k + 1], amount);
    supply[path.front()] -= amount;
    demand[path.back()] -= amount;
    remaining -= amount;
  }

  RealizationResult result{RGraph(n, r), {}, 0};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && flow.flow(u, v) > 0) result.graph.add_arcs(u, v, flow.flow(u, v));
    }
  }
  result.vertex_map.resize(n);
  std::iota(result.vertex_map.begin(), result.vertex_map.end(), Vertex{0});
  result.arc_count = result.graph.arc_count();

  if (result.graph.imbalances() != std::vector<Imbalance>(b.begin(), b.end())) {
    throw Error(Errc::internal_contradiction, "realization does not reproduce the sequence");
  }
  return result;
}

}  // namespace imbal
