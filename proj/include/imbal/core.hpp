#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "imbal/error.hpp"

namespace imbal {

using Vertex = std::size_t;
using Multiplicity = std::int64_t;
using Imbalance = std::int64_t;

enum class Order { non_decreasing, non_increasing };

inline const char* to_string(Order order) {
  return order == Order::non_decreasing ? "non-decreasing" : "non-increasing";
}

inline bool is_sorted_as(const std::vector<Imbalance>& values, Order order) {
  return order == Order::non_decreasing
             ? std::is_sorted(values.begin(), values.end())
             : std::is_sorted(values.begin(), values.end(), std::greater<>{});
}

/// A loopless directed multigraph on vertices 0..n-1 in which every pair of
/// distinct vertices carries at most r arcs in total (both directions).
///
/// Multiplicities are stored sparsely keyed by ordered pair; zero entries are
/// never stored, so structural equality is graph equality.
class RGraph {
 public:
  using ArcMap = std::map<std::pair<Vertex, Vertex>, Multiplicity>;

  RGraph(std::size_t n, Multiplicity r) : n_(n), r_(r) {
    if (n == 0) throw Error(Errc::invalid_parameter, "vertex count must be at least 1");
    if (r < 1) throw Error(Errc::invalid_parameter, "capacity r must be at least 1");
  }

  std::size_t vertex_count() const noexcept { return n_; }
  Multiplicity capacity() const noexcept { return r_; }
  const ArcMap& arcs() const noexcept { return arcs_; }

  Multiplicity multiplicity(Vertex u, Vertex v) const {
    auto it = arcs_.find({u, v});
    return it == arcs_.end() ? 0 : it->second;
  }

  // a_uv + a_vu
  Multiplicity pair_total(Vertex u, Vertex v) const {
    return multiplicity(u, v) + multiplicity(v, u);
  }

  RGraph& add_arcs(Vertex u, Vertex v, Multiplicity m) {
    check_pair(u, v);
    if (m < 1) throw Error(Errc::invalid_parameter, "multiplicity must be at least 1");
    if (pair_total(u, v) + m > r_) {
      throw Error(Errc::cap_exceeded, "pair (" + std::to_string(u) + "," + std::to_string(v) +
                                          ") would carry " + std::to_string(pair_total(u, v) + m) +
                                          " arcs, capacity is " + std::to_string(r_));
    }
    arcs_[{u, v}] += m;
    return *this;
  }

  RGraph& remove_arcs(Vertex u, Vertex v, Multiplicity m) {
    check_pair(u, v);
    auto it = arcs_.find({u, v});
    if (m < 1 || it == arcs_.end() || it->second < m) {
      throw Error(Errc::invalid_parameter, "cannot remove " + std::to_string(m) + " arcs " +
                                               std::to_string(u) + "->" + std::to_string(v));
    }
    if ((it->second -= m) == 0) arcs_.erase(it);
    return *this;
  }

  Multiplicity arc_count() const {
    Multiplicity total = 0;
    for (const auto& [pair, m] : arcs_) total += m;
    return total;
  }

  // Per-vertex outdegree minus indegree, indexed by vertex id.
  std::vector<Imbalance> imbalances() const {
    std::vector<Imbalance> b(n_, 0);
    for (const auto& [pair, m] : arcs_) {
      b[pair.first] += m;
      b[pair.second] -= m;
    }
    return b;
  }

  bool operator==(const RGraph&) const = default;

 private:
  void check_pair(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) {
      throw Error(Errc::invalid_parameter, "vertex out of range: (" + std::to_string(u) + "," +
                                               std::to_string(v) + ") with n=" +
                                               std::to_string(n_));
    }
    if (u == v) throw Error(Errc::loop, "loop at vertex " + std::to_string(u));
  }

  std::size_t n_;
  Multiplicity r_;
  ArcMap arcs_;
};

inline RGraph new_rgraph(std::size_t n, Multiplicity r) { return RGraph(n, r); }

inline RGraph add_arcs(RGraph g, Vertex u, Vertex v, Multiplicity m) {
  g.add_arcs(u, v, m);
  return g;
}

inline Multiplicity arc_count(const RGraph& g) { return g.arc_count(); }

struct ImbalanceSequence {
  std::vector<Imbalance> values;
  Order order = Order::non_decreasing;

  ImbalanceSequence() = default;
  ImbalanceSequence(std::vector<Imbalance> v, Order o) : values(std::move(v)), order(o) {
    if (!is_sorted_as(values, order)) {
      throw Error(Errc::invalid_order, std::string("sequence is not ") + to_string(order));
    }
  }

  std::size_t size() const noexcept { return values.size(); }
  bool operator==(const ImbalanceSequence&) const = default;
};

inline ImbalanceSequence sorted_sequence(std::vector<Imbalance> values, Order order) {
  if (order == Order::non_decreasing) {
    std::sort(values.begin(), values.end());
  } else {
    std::sort(values.begin(), values.end(), std::greater<>{});
  }
  return ImbalanceSequence(std::move(values), order);
}

inline ImbalanceSequence imbalance_sequence(const RGraph& g,
                                            Order order = Order::non_decreasing) {
  return sorted_sequence(g.imbalances(), order);
}

// Reverses every arc.
inline RGraph converse(const RGraph& g) {
  RGraph out(g.vertex_count(), g.capacity());
  for (const auto& [pair, m] : g.arcs()) out.add_arcs(pair.second, pair.first, m);
  return out;
}

// ---------------------------------------------------------------------------
// Oriented triples

enum class TripleKind { transitive, intransitive };

struct TripleClass {
  TripleKind kind;
  std::string pattern;

  bool transitive() const noexcept { return kind == TripleKind::transitive; }
};

namespace detail {

// Sign of a pair: 0 empty, 1 forward only, 2 backward only, 3 both directions.
inline int pair_sign(const RGraph& g, Vertex a, Vertex b) {
  return (g.multiplicity(a, b) > 0 ? 1 : 0) | (g.multiplicity(b, a) > 0 ? 2 : 0);
}

struct TriplePattern {
  std::array<int, 3> signs;  // (x,y), (y,z), (z,x)
  const char* tag;
  bool transitive;
};

inline constexpr std::array<TriplePattern, 7> kTriplePatterns{{
    {{1, 1, 2}, "u(1-0)v(1-0)w(0-1)u", true},
    {{1, 2, 0}, "u(1-0)v(0-1)w(0-0)u", true},
    {{1, 0, 2}, "u(1-0)v(0-0)w(0-1)u", true},
    {{1, 0, 0}, "u(1-0)v(0-0)w(0-0)u", true},
    {{0, 0, 0}, "u(0-0)v(0-0)w(0-0)u", true},
    {{1, 1, 1}, "u(1-0)v(1-0)w(1-0)u", false},
    {{1, 1, 0}, "u(1-0)v(1-0)w(0-0)u", false},
}};

}  // namespace detail

/// Classifies the subdigraph induced by three distinct vertices by the sign
/// pattern of its pairs. Multiplicities above one are treated like one; a pair
/// with arcs in both directions yields the tag "double-present".
inline TripleClass classify_oriented_triple(const RGraph& g, Vertex u, Vertex v, Vertex w) {
  const auto n = g.vertex_count();
  if (u >= n || v >= n || w >= n) throw Error(Errc::invalid_parameter, "vertex out of range");
  if (u == v || v == w || u == w) {
    throw Error(Errc::invalid_parameter, "triple vertices must be pairwise distinct");
  }
  if (detail::pair_sign(g, u, v) == 3 || detail::pair_sign(g, v, w) == 3 ||
      detail::pair_sign(g, w, u) == 3) {
    return {TripleKind::intransitive, "double-present"};
  }
  std::array<Vertex, 3> p{u, v, w};
  std::sort(p.begin(), p.end());
  for (const auto& form : detail::kTriplePatterns) {
    auto q = p;
    do {
      if (detail::pair_sign(g, q[0], q[1]) == form.signs[0] &&
          detail::pair_sign(g, q[1], q[2]) == form.signs[1] &&
          detail::pair_sign(g, q[2], q[0]) == form.signs[2]) {
        return {form.transitive ? TripleKind::transitive : TripleKind::intransitive, form.tag};
      }
    } while (std::next_permutation(q.begin(), q.end()));
  }
  // Every double-free sign pattern is a relabeling of one of the forms above.
  throw Error(Errc::internal_contradiction, "unclassified triple");
}

/// True iff no pair carries arcs both ways and every triple is transitive.
inline bool is_transitive(const RGraph& g) {
  for (const auto& [pair, m] : g.arcs()) {
    if (g.multiplicity(pair.second, pair.first) > 0) return false;
  }
  // With no doubles a triple is intransitive iff it holds a 2-path x->y->z
  // lacking the arc x->z.
  for (const auto& [xy, m1] : g.arcs()) {
    const auto [x, y] = xy;
    for (auto it = g.arcs().lower_bound({y, 0}); it != g.arcs().end() && it->first.first == y;
         ++it) {
      const Vertex z = it->first.second;
      if (z != x && g.multiplicity(x, z) == 0) return false;
    }
  }
  return true;
}

}  // namespace imbal
