#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace imbal {

enum class Errc {
  invalid_parameter,
  loop,
  cap_exceeded,
  invalid_order,
  overflow,
  infeasible,
  internal_contradiction,
  move_not_applicable,
  gcd_exceeds_capacity,
  enumeration_too_large,
  not_realizable,
  parse_error,
};

inline std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::invalid_parameter: return "invalid-parameter";
    case Errc::loop: return "loop";
    case Errc::cap_exceeded: return "cap-exceeded";
    case Errc::invalid_order: return "invalid-order";
    case Errc::overflow: return "overflow";
    case Errc::infeasible: return "infeasible";
    case Errc::internal_contradiction: return "internal-contradiction";
    case Errc::move_not_applicable: return "move-not-applicable";
    case Errc::gcd_exceeds_capacity: return "gcd-exceeds-capacity";
    case Errc::enumeration_too_large: return "enumeration-too-large";
    case Errc::not_realizable: return "not-realizable";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

// All library failures are reported through this type; code() distinguishes them.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace imbal
