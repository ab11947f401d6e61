#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "imbal/core.hpp"
#include "imbal/error.hpp"

namespace imbal {

enum class MoveKind {
  double_cancel,    // u(1-1)v  <->  u(0-0)v
  triangle_cancel,  // u(1-0)v(1-0)w(1-0)u  <->  u(0-0)v(0-0)w(0-0)u
  path_shortcut,    // u(1-0)v(1-0)w(0-0)u  <->  u(0-0)v(0-0)w(0-1)u
};

enum class Direction { forward, inverse };

inline const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::double_cancel: return "double-cancel";
    case MoveKind::triangle_cancel: return "triangle-cancel";
    case MoveKind::path_shortcut: return "path-shortcut";
  }
  return "unknown";
}

inline const char* to_string(Direction d) {
  return d == Direction::forward ? "forward" : "inverse";
}

inline constexpr std::initializer_list<MoveKind> kAllMoveKinds = {
    MoveKind::double_cancel, MoveKind::triangle_cancel, MoveKind::path_shortcut};

struct Move {
  MoveKind kind;
  std::vector<Vertex> vertices;  // (u,v) for double-cancel, (u,v,w) otherwise
  Direction direction = Direction::forward;

  Move inverse() const {
    return {kind, vertices,
            direction == Direction::forward ? Direction::inverse : Direction::forward};
  }

  // Change in arc count when applied.
  int arc_delta() const {
    const int forward = kind == MoveKind::triangle_cancel ? -3
                        : kind == MoveKind::path_shortcut ? -1
                                                          : -2;
    return direction == Direction::forward ? forward : -forward;
  }

  bool operator==(const Move&) const = default;
};

inline std::string to_string(const Move& m) {
  std::string out = std::string(to_string(m.kind)) + " " + to_string(m.direction) + " (";
  for (std::size_t i = 0; i < m.vertices.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(m.vertices[i]);
  }
  return out + ")";
}

/// Returns a description of the first precondition of m that g violates, or
/// nullopt if m applies to g.
inline std::optional<std::string> failed_precondition(const RGraph& g, const Move& m) {
  const auto& x = m.vertices;
  const std::size_t want = m.kind == MoveKind::double_cancel ? 2 : 3;
  if (x.size() != want) return "expected " + std::to_string(want) + " vertices";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] >= g.vertex_count()) return "vertex " + std::to_string(x[i]) + " out of range";
    for (std::size_t j = 0; j < i; ++j) {
      if (x[i] == x[j]) return "vertices must be distinct";
    }
  }
  const auto r = g.capacity();
  auto a = [&](Vertex p, Vertex q) { return g.multiplicity(p, q); };
  auto arc = [](Vertex p, Vertex q) { return std::to_string(p) + "->" + std::to_string(q); };
  auto pair = [](Vertex p, Vertex q) {
    return "{" + std::to_string(p) + "," + std::to_string(q) + "}";
  };
  auto need_arc = [&](Vertex p, Vertex q) -> std::optional<std::string> {
    if (a(p, q) < 1) return "needs an arc " + arc(p, q);
    return std::nullopt;
  };
  auto need_room = [&](Vertex p, Vertex q, Multiplicity k) -> std::optional<std::string> {
    if (g.pair_total(p, q) + k > r) return "pair " + pair(p, q) + " has no room";
    return std::nullopt;
  };
  const bool fwd = m.direction == Direction::forward;

  switch (m.kind) {
    case MoveKind::double_cancel: {
      const auto u = x[0], v = x[1];
      if (fwd) {
        if (auto e = need_arc(u, v)) return e;
        return need_arc(v, u);
      }
      return need_room(u, v, 2);
    }
    case MoveKind::triangle_cancel: {
      const auto u = x[0], v = x[1], w = x[2];
      if (fwd) {
        if (auto e = need_arc(u, v)) return e;
        if (auto e = need_arc(v, w)) return e;
        return need_arc(w, u);
      }
      if (auto e = need_room(u, v, 1)) return e;
      if (auto e = need_room(v, w, 1)) return e;
      return need_room(w, u, 1);
    }
    case MoveKind::path_shortcut: {
      const auto u = x[0], v = x[1], w = x[2];
      if (a(w, u) != 0) return "needs no arc " + arc(w, u);
      if (fwd) {
        if (auto e = need_arc(u, v)) return e;
        if (auto e = need_arc(v, w)) return e;
        return need_room(u, w, 1);
      }
      if (auto e = need_arc(u, w)) return e;
      if (auto e = need_room(u, v, 1)) return e;
      return need_room(v, w, 1);
    }
  }
  return "unknown move kind";
}

inline bool is_applicable(const RGraph& g, const Move& m) {
  return !failed_precondition(g, m).has_value();
}

/// All applicable moves of the given kinds and direction, sorted by vertex
/// tuple (then kind). Triangles are listed once per cyclic orientation, with
/// the smallest vertex first; doubles as (u,v) with u < v.
inline std::vector<Move> find_moves(const RGraph& g, std::initializer_list<MoveKind> kinds,
                                    Direction direction) {
  std::vector<Move> out;
  const auto n = g.vertex_count();
  auto wanted = [&](MoveKind k) { return std::find(kinds.begin(), kinds.end(), k) != kinds.end(); };
  auto consider = [&](Move m) {
    if (is_applicable(g, m)) out.push_back(std::move(m));
  };
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (v == u) continue;
      if (wanted(MoveKind::double_cancel) && u < v) {
        consider({MoveKind::double_cancel, {u, v}, direction});
      }
      for (Vertex w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        if (wanted(MoveKind::triangle_cancel) && u < v && u < w) {
          consider({MoveKind::triangle_cancel, {u, v, w}, direction});
        }
        if (wanted(MoveKind::path_shortcut)) {
          consider({MoveKind::path_shortcut, {u, v, w}, direction});
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Move& l, const Move& r) {
    return l.vertices != r.vertices ? l.vertices < r.vertices : l.kind < r.kind;
  });
  return out;
}

inline RGraph apply_move(RGraph g, const Move& m) {
  if (auto why = failed_precondition(g, m)) {
    throw Error(Errc::move_not_applicable, to_string(m) + ": " + *why);
  }
  const bool fwd = m.direction == Direction::forward;
  auto step = [&](Vertex p, Vertex q, bool remove) {
    if (remove) {
      g.remove_arcs(p, q, 1);
    } else {
      g.add_arcs(p, q, 1);
    }
  };
  const auto& x = m.vertices;
  switch (m.kind) {
    case MoveKind::double_cancel:
      step(x[0], x[1], fwd);
      step(x[1], x[0], fwd);
      break;
    case MoveKind::triangle_cancel:
      step(x[0], x[1], fwd);
      step(x[1], x[2], fwd);
      step(x[2], x[0], fwd);
      break;
    case MoveKind::path_shortcut:
      // Remove before adding so the capacity check sees the final pair totals.
      if (fwd) {
        step(x[0], x[1], true);
        step(x[1], x[2], true);
        step(x[0], x[2], false);
      } else {
        step(x[0], x[2], true);
        step(x[0], x[1], false);
        step(x[1], x[2], false);
      }
      break;
  }
  return g;
}

struct ReduceResult {
  RGraph graph;
  std::vector<Move> log;
};

/// Applies forward moves until none is applicable: doubles first, then
/// triangles, then path shortcuts, always taking the lexicographically first
/// move and rescanning. Every step lowers the arc count, so this terminates;
/// the fixpoint is transitive.
inline ReduceResult reduce_with_log(RGraph g) {
  std::vector<Move> log;
  for (;;) {
    bool applied = false;
    for (auto kind : kAllMoveKinds) {
      auto moves = find_moves(g, {kind}, Direction::forward);
      if (!moves.empty()) {
        g = apply_move(std::move(g), moves.front());
        log.push_back(std::move(moves.front()));
        applied = true;
        break;
      }
    }
    if (!applied) break;
  }
  return {std::move(g), std::move(log)};
}

inline RGraph reduce(RGraph g) { return reduce_with_log(std::move(g)).graph; }

}  // namespace imbal
