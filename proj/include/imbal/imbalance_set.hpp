#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "imbal/core.hpp"
#include "imbal/error.hpp"

namespace imbal {

inline std::set<Imbalance> imbalance_set_of(const RGraph& g) {
  const auto b = g.imbalances();
  return {b.begin(), b.end()};
}

/// Prescribed positive values P and magnitudes Q of the negative values,
/// factored by their common gcd t: p_i = t f_i, q_j = t g_j.
struct ImbalanceSetSpec {
  std::vector<std::int64_t> p;
  std::vector<std::int64_t> q;
  std::int64_t r = 1;
  std::int64_t t = 1;
  std::vector<std::int64_t> f;
  std::vector<std::int64_t> g;

  static ImbalanceSetSpec make(std::vector<std::int64_t> p, std::vector<std::int64_t> q,
                               std::int64_t r) {
    auto validate = [](const std::vector<std::int64_t>& xs, const char* name) {
      if (xs.empty()) throw Error(Errc::invalid_parameter, std::string(name) + " must not be empty");
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] <= 0) {
          throw Error(Errc::invalid_parameter, std::string(name) + " entries must be positive");
        }
        if (i > 0 && xs[i] <= xs[i - 1]) {
          throw Error(Errc::invalid_parameter,
                      std::string(name) + " must be strictly increasing");
        }
      }
    };
    validate(p, "P");
    validate(q, "Q");
    if (r < 1) throw Error(Errc::invalid_parameter, "capacity r must be at least 1");

    ImbalanceSetSpec spec{std::move(p), std::move(q), r, 0, {}, {}};
    for (auto x : spec.p) spec.t = std::gcd(spec.t, x);
    for (auto x : spec.q) spec.t = std::gcd(spec.t, x);
    if (spec.t > r) {
      throw Error(Errc::gcd_exceeds_capacity,
                  "gcd t=" + std::to_string(spec.t) + " exceeds r=" + std::to_string(r));
    }
    for (auto x : spec.p) spec.f.push_back(x / spec.t);
    for (auto x : spec.q) spec.g.push_back(x / spec.t);
    return spec;
  }
};

enum class BlockSide { x, y };

/// One vertex block. X blocks are sources and Y blocks sinks; (lower, upper)
/// are the block's sub- and superscript, e.g. X_2^1 has lower 2, upper 1.
struct Block {
  BlockSide side;
  std::size_t lower;
  std::size_t upper;
  std::size_t size;
  Vertex first_vertex;

  std::string name() const {
    return std::string(side == BlockSide::x ? "X" : "Y") + "_" + std::to_string(lower) + "^" +
           std::to_string(upper);
  }

  bool operator==(const Block&) const = default;
};

struct BlockLayout {
  std::vector<Block> blocks;
  std::size_t total_vertices = 0;
};

struct ImbalanceSetConstruction {
  RGraph graph;
  BlockLayout layout;
  ImbalanceSetSpec spec;
};

/// Builds an r-graph whose distinct imbalances are exactly p_1..p_m together
/// with -q_1..-q_n.
///
/// Blocks, in vertex order:
///   X_i^1 (i = 1..m), size g_1   ->  t arcs to every vertex of Y_i^1, size f_i
///   X_1^j (j = 2..n), size g_j   ->  t arcs to every vertex of Y_1^j, size f_1
/// so X_i^1 vertices get t f_i = p_i, Y_i^1 vertices get -t g_1 = -q_1,
/// X_1^j vertices get t f_1 = p_1 and Y_1^j vertices get -t g_j = -q_j.
inline ImbalanceSetConstruction construct_from_imbalance_set(std::vector<std::int64_t> p,
                                                             std::vector<std::int64_t> q,
                                                             std::int64_t r) {
  auto spec = ImbalanceSetSpec::make(std::move(p), std::move(q), r);
  const auto m = spec.p.size();
  const auto n = spec.q.size();
  auto sz = [](std::int64_t x) { return static_cast<std::size_t>(x); };

  BlockLayout layout;
  auto add = [&](BlockSide side, std::size_t lower, std::size_t upper, std::size_t size) {
    layout.blocks.push_back({side, lower, upper, size, layout.total_vertices});
    layout.total_vertices += size;
  };
  for (std::size_t i = 1; i <= m; ++i) add(BlockSide::x, i, 1, sz(spec.g[0]));
  for (std::size_t j = 2; j <= n; ++j) add(BlockSide::x, 1, j, sz(spec.g[j - 1]));
  for (std::size_t i = 1; i <= m; ++i) add(BlockSide::y, i, 1, sz(spec.f[i - 1]));
  for (std::size_t j = 2; j <= n; ++j) add(BlockSide::y, 1, j, sz(spec.f[0]));

  RGraph graph(layout.total_vertices, r);
  // The k-th X block feeds the k-th Y block.
  const auto half = layout.blocks.size() / 2;
  for (std::size_t k = 0; k < half; ++k) {
    const auto& from = layout.blocks[k];
    const auto& to = layout.blocks[half + k];
    for (Vertex x = from.first_vertex; x < from.first_vertex + from.size; ++x) {
      for (Vertex y = to.first_vertex; y < to.first_vertex + to.size; ++y) {
        graph.add_arcs(x, y, spec.t);
      }
    }
  }
  return {std::move(graph), std::move(layout), std::move(spec)};
}

}  // namespace imbal
