#pragma once

#include <stdexcept>
#include <string>

namespace minvar {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text or a coefficient not representable in the field.
struct ParseError : Error {
  using Error::Error;
};

// Operands from different ring contexts.
struct RingMismatchError : Error {
  using Error::Error;
};

// Step budget exhausted; distinct from any mathematical failure.
struct BudgetExceededError : Error {
  using Error::Error;
};

// Krull dimension requested for the unit ideal.
struct UnitIdealError : Error {
  using Error::Error;
};

// Invalid matrix spec or out-of-range (s, t, characteristic).
struct SpecError : Error {
  using Error::Error;
};

// Domain error: zero-polynomial leading term, unsupported parameter, ...
struct ValueError : Error {
  using Error::Error;
};

// A hypothesis of a radical-combination rule failed; carries the offending
// pair.
struct HypothesisError : Error {
  HypothesisError(std::size_t group, std::string p, std::string q)
      : Error("pairwise-product hypothesis fails in group " + std::to_string(group + 1) +
              " for (" + p + ", " + q + ")"),
        group_index(group),
        first(std::move(p)),
        second(std::move(q)) {}
  std::size_t group_index;
  std::string first, second;
};

}  // namespace minvar
