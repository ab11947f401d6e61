#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "imbal/core.hpp"
#include "imbal/error.hpp"

namespace imbal {

enum class Bound {
  prefix_lower,      // sum_{i<=k} b_i >= rk(k-n), non-decreasing order
  prefix_upper,      // sum_{i<=k} b_i <= rk(n-k), non-increasing order
  total,             // full sum must be zero
  positional_lower,  // b_i >= r(i-n)
  positional_upper,  // b_i <= r(i-1)
  square,            // sum b_i^2 <= sum (2rn-2rk-b_i)^2
};

inline const char* to_string(Bound bound) {
  switch (bound) {
    case Bound::prefix_lower: return "prefix-lower";
    case Bound::prefix_upper: return "prefix-upper";
    case Bound::total: return "total";
    case Bound::positional_lower: return "positional-lower";
    case Bound::positional_upper: return "positional-upper";
    case Bound::square: return "square";
  }
  return "unknown";
}

struct Witness {
  std::size_t k;  // 1-based
  std::int64_t lhs;
  std::int64_t rhs;
  Bound bound;

  bool operator==(const Witness&) const = default;
};

struct Verdict {
  std::optional<Witness> witness;

  bool ok() const noexcept { return !witness.has_value(); }
  explicit operator bool() const noexcept { return ok(); }

  static Verdict pass() { return {}; }
  static Verdict fail(std::size_t k, std::int64_t lhs, std::int64_t rhs, Bound bound) {
    return {Witness{k, lhs, rhs, bound}};
  }
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(Errc::overflow, "integer overflow in bound arithmetic");
  }
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error(Errc::overflow, "integer overflow in bound arithmetic");
  }
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(Errc::overflow, "integer overflow in bound arithmetic");
  }
  return out;
}

inline void require_capacity(std::int64_t r) {
  if (r < 1) throw Error(Errc::invalid_parameter, "capacity r must be at least 1");
}

inline void require_sequence(std::span<const Imbalance> b, Order order) {
  if (b.empty()) throw Error(Errc::invalid_parameter, "sequence must not be empty");
  for (std::size_t i = 1; i < b.size(); ++i) {
    const bool bad = order == Order::non_decreasing ? b[i] < b[i - 1] : b[i] > b[i - 1];
    if (bad) {
      throw Error(Errc::invalid_order, std::string("sequence is not ") + to_string(order) +
                                           " at position " + std::to_string(i + 1));
    }
  }
}

}  // namespace detail

/// Realizability test for a non-decreasing sequence: every prefix sum must be
/// at least rk(k-n) and the total must be zero. Reports the smallest failing k.
inline Verdict check_feasible_nondecreasing(std::span<const Imbalance> b, std::int64_t r) {
  detail::require_capacity(r);
  detail::require_sequence(b, Order::non_decreasing);
  const auto n = static_cast<std::int64_t>(b.size());
  std::int64_t prefix = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    prefix = detail::checked_add(prefix, b[k - 1]);
    if (k == n) {
      if (prefix != 0) return Verdict::fail(k, prefix, 0, Bound::total);
      break;
    }
    const auto rhs = detail::checked_mul(detail::checked_mul(r, k), k - n);
    if (prefix < rhs) return Verdict::fail(k, prefix, rhs, Bound::prefix_lower);
  }
  return Verdict::pass();
}

/// Mirror of check_feasible_nondecreasing for non-increasing input: prefix sums
/// at most rk(n-k), total zero.
inline Verdict check_feasible_nonincreasing(std::span<const Imbalance> b, std::int64_t r) {
  detail::require_capacity(r);
  detail::require_sequence(b, Order::non_increasing);
  const auto n = static_cast<std::int64_t>(b.size());
  std::int64_t prefix = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    prefix = detail::checked_add(prefix, b[k - 1]);
    if (k == n) {
      if (prefix != 0) return Verdict::fail(k, prefix, 0, Bound::total);
      break;
    }
    const auto rhs = detail::checked_mul(detail::checked_mul(r, k), n - k);
    if (prefix > rhs) return Verdict::fail(k, prefix, rhs, Bound::prefix_upper);
  }
  return Verdict::pass();
}

inline Verdict check_feasible(std::span<const Imbalance> b, std::int64_t r, Order order) {
  return order == Order::non_decreasing ? check_feasible_nondecreasing(b, r)
                                        : check_feasible_nonincreasing(b, r);
}

// Simple digraphs are the r = 1 case.
inline Verdict check_simple_feasible(std::span<const Imbalance> f) {
  return check_feasible_nonincreasing(f, 1);
}

/// r(i-n) <= b_i <= r(i-1) at every 1-based position of a non-decreasing
/// sequence.
inline Verdict positional_bounds(std::span<const Imbalance> b, std::int64_t r) {
  detail::require_capacity(r);
  detail::require_sequence(b, Order::non_decreasing);
  const auto n = static_cast<std::int64_t>(b.size());
  for (std::int64_t i = 1; i <= n; ++i) {
    const auto lower = detail::checked_mul(r, i - n);
    const auto upper = detail::checked_mul(r, i - 1);
    if (b[i - 1] < lower) return Verdict::fail(i, b[i - 1], lower, Bound::positional_lower);
    if (b[i - 1] > upper) return Verdict::fail(i, b[i - 1], upper, Bound::positional_upper);
  }
  return Verdict::pass();
}

/// Sum-of-squares inequality on a non-increasing sequence:
/// sum_{i<=k} b_i^2 <= sum_{i<=k} (2rn - 2rk - b_i)^2, with equality at k = n.
/// Throws Errc::overflow if any intermediate term leaves the int64 range.
inline Verdict square_inequality(std::span<const Imbalance> b, std::int64_t r) {
  using detail::checked_add;
  using detail::checked_mul;
  using detail::checked_sub;
  detail::require_capacity(r);
  detail::require_sequence(b, Order::non_increasing);
  const auto n = static_cast<std::int64_t>(b.size());
  const auto two_rn = checked_mul(checked_mul(2, r), n);
  for (std::int64_t k = 1; k <= n; ++k) {
    const auto shift = checked_sub(two_rn, checked_mul(checked_mul(2, r), k));
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    for (std::int64_t i = 0; i < k; ++i) {
      lhs = checked_add(lhs, checked_mul(b[i], b[i]));
      const auto term = checked_sub(shift, b[i]);
      rhs = checked_add(rhs, checked_mul(term, term));
    }
    if (lhs > rhs || (k == n && lhs != rhs)) return Verdict::fail(k, lhs, rhs, Bound::square);
  }
  return Verdict::pass();
}

}  // namespace imbal
