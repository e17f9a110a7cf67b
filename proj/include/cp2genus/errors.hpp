#pragma once

#include <stdexcept>
#include <string>

namespace cp2 {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::string msg, std::size_t pos)
      : std::runtime_error(std::move(msg)), position(pos) {}
};

// Knot-level semantic violation: bad torus parameters, multi-component braid
// closure, invalid Seifert matrix.
struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The Levine-Tristram form is singular at the requested root of unity
// (the Alexander polynomial vanishes there); the caller must skip the rule.
struct SingularAtOmega : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The exact signature oracle only accepts small matrices.
struct SizeTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The precision escalation ladder ran out without certifying a sign.
struct PrecisionExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal consistency violation (e.g. a lower bound exceeding an upper bound).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace cp2
