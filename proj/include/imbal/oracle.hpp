#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "imbal/core.hpp"
#include "imbal/error.hpp"
#include "imbal/transforms.hpp"

namespace imbal {

struct EnumerationLimits {
  std::size_t n = 1;
  Multiplicity r = 1;
  std::uint64_t hard_cap = 10'000'000;
};

/// ((r+1)(r+2)/2)^(n(n-1)/2), saturating at UINT64_MAX.
inline std::uint64_t rgraph_universe_size(std::size_t n, Multiplicity r) {
  const auto states = static_cast<std::uint64_t>((r + 1) * (r + 2) / 2);
  const auto pairs = n * (n - 1) / 2;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < pairs; ++i) {
    if (__builtin_mul_overflow(total, states, &total)) return UINT64_MAX;
  }
  return total;
}

/// Streams every r-graph on n labelled vertices exactly once. Each unordered
/// pair {u,v}, u < v, independently takes every state (a_uv, a_vu) with
/// a_uv + a_vu <= r; pairs and states advance like an odometer, the last pair
/// fastest, so the order is lexicographic.
class RGraphEnumerator {
 public:
  explicit RGraphEnumerator(const EnumerationLimits& limits) : limits_(limits) {
    if (limits.n == 0 || limits.r < 1) {
      throw Error(Errc::invalid_parameter, "enumeration needs n >= 1 and r >= 1");
    }
    const auto count = rgraph_universe_size(limits.n, limits.r);
    if (count > limits.hard_cap) {
      throw Error(Errc::enumeration_too_large,
                  "enumeration of n=" + std::to_string(limits.n) + ", r=" +
                      std::to_string(limits.r) + " needs " +
                      (count == UINT64_MAX ? std::string("more than 2^64")
                                           : std::to_string(count)) +
                      " graphs, cap is " + std::to_string(limits.hard_cap));
    }
    for (Multiplicity f = 0; f <= limits.r; ++f) {
      for (Multiplicity b = 0; f + b <= limits.r; ++b) states_.emplace_back(f, b);
    }
    for (Vertex u = 0; u < limits.n; ++u) {
      for (Vertex v = u + 1; v < limits.n; ++v) pairs_.emplace_back(u, v);
    }
    odometer_.assign(pairs_.size(), 0);
  }

  std::uint64_t size() const { return rgraph_universe_size(limits_.n, limits_.r); }

  /// Writes the next graph into out; false once exhausted.
  bool next(RGraph& out) {
    if (done_) return false;
    if (started_) {
      std::size_t i = odometer_.size();
      while (i > 0) {
        --i;
        if (++odometer_[i] < states_.size()) break;
        odometer_[i] = 0;
        if (i == 0) {
          done_ = true;
          return false;
        }
      }
      if (odometer_.empty()) {
        done_ = true;
        return false;
      }
    }
    started_ = true;
    out = RGraph(limits_.n, limits_.r);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      const auto [f, b] = states_[odometer_[i]];
      if (f > 0) out.add_arcs(pairs_[i].first, pairs_[i].second, f);
      if (b > 0) out.add_arcs(pairs_[i].second, pairs_[i].first, b);
    }
    return true;
  }

 private:
  EnumerationLimits limits_;
  std::vector<std::pair<Multiplicity, Multiplicity>> states_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<std::size_t> odometer_;
  bool started_ = false;
  bool done_ = false;
};

inline void for_each_rgraph(const EnumerationLimits& limits,
                            const std::function<void(const RGraph&)>& visit) {
  RGraphEnumerator it(limits);
  RGraph g(limits.n, limits.r);
  while (it.next(g)) visit(g);
}

/// Distinct non-decreasing imbalance sequences over the whole universe.
inline std::set<std::vector<Imbalance>> enumerate_imbalance_sequences(
    const EnumerationLimits& limits) {
  std::set<std::vector<Imbalance>> out;
  for_each_rgraph(limits, [&](const RGraph& g) { out.insert(imbalance_sequence(g).values); });
  return out;
}

/// Visits every non-decreasing length-n sequence with entries in
/// [-r(n-1), r(n-1)] summing to zero: the candidates any feasibility test on
/// (n, r) has to sort into realizable and not.
inline void for_each_candidate_sequence(std::size_t n, Multiplicity r,
                                        const std::function<void(const std::vector<Imbalance>&)>& visit) {
  if (n == 0 || r < 1) throw Error(Errc::invalid_parameter, "need n >= 1 and r >= 1");
  const auto bound = r * static_cast<Imbalance>(n - 1);
  std::vector<Imbalance> seq(n);
  // Fill position i with values >= lo; the remaining n-i entries are each at
  // least seq[i] and at most bound, which prunes on the running sum.
  std::function<void(std::size_t, Imbalance, Imbalance)> fill = [&](std::size_t i, Imbalance lo,
                                                                    Imbalance sum) {
    const auto left = static_cast<Imbalance>(n - i);
    if (i == n) {
      if (sum == 0) visit(seq);
      return;
    }
    for (Imbalance x = lo; x <= bound; ++x) {
      if (sum + x * left > 0) break;
      if (sum + x + bound * (left - 1) < 0) continue;
      seq[i] = x;
      fill(i + 1, x, sum + x);
    }
  };
  fill(0, -bound, 0);
}

struct MinArcs {
  Multiplicity count = 0;
  std::vector<RGraph> witnesses;
};

namespace detail {

inline std::vector<Imbalance> validated_target(std::span<const Imbalance> b,
                                               const EnumerationLimits& limits) {
  if (b.size() != limits.n) {
    throw Error(Errc::invalid_parameter, "sequence length does not match n");
  }
  std::vector<Imbalance> target(b.begin(), b.end());
  if (!is_sorted_as(target, Order::non_decreasing)) {
    throw Error(Errc::invalid_order, "sequence is not non-decreasing");
  }
  return target;
}

// Every enumerated graph whose sorted imbalances equal b, or only those in
// which vertex i itself has imbalance b_i when `labelled` is set.
inline std::vector<RGraph> realizations_of(std::span<const Imbalance> b,
                                           const EnumerationLimits& limits, bool labelled) {
  const auto target = validated_target(b, limits);
  std::vector<RGraph> out;
  for_each_rgraph(limits, [&](const RGraph& g) {
    if ((labelled ? g.imbalances() : imbalance_sequence(g).values) == target) out.push_back(g);
  });
  if (out.empty()) {
    throw Error(Errc::not_realizable, "no enumerated graph realizes the sequence");
  }
  return out;
}

}  // namespace detail

/// Minimum arc count over all realizations of b, with every realization that
/// attains it (in enumeration order).
inline MinArcs min_arcs_brute(std::span<const Imbalance> b, const EnumerationLimits& limits) {
  auto all = detail::realizations_of(b, limits, false);
  MinArcs out{all.front().arc_count(), {}};
  for (const auto& g : all) out.count = std::min(out.count, g.arc_count());
  for (auto& g : all) {
    if (g.arc_count() == out.count) out.witnesses.push_back(std::move(g));
  }
  return out;
}

/// Whether single forward/inverse moves link every realization of b to every
/// other one (breadth-first search from the first realization).
inline bool move_graph_connected(std::span<const Imbalance> b, const EnumerationLimits& limits) {
  const auto all = detail::realizations_of(b, limits, true);
  std::set<RGraph::ArcMap> seen{all.front().arcs()};
  std::deque<RGraph> frontier{all.front()};
  while (!frontier.empty()) {
    const RGraph g = std::move(frontier.front());
    frontier.pop_front();
    for (auto direction : {Direction::forward, Direction::inverse}) {
      for (const auto& m : find_moves(g, kAllMoveKinds, direction)) {
        auto next = apply_move(g, m);
        if (seen.insert(next.arcs()).second) frontier.push_back(std::move(next));
      }
    }
  }
  return seen.size() == all.size();
}

}  // namespace imbal
