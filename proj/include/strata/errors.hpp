#pragma once

#include <stdexcept>
#include <string>

namespace strata {

struct InvalidDatum : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  int column;
  ParseError(const std::string& msg, int col)
      : std::runtime_error(msg + " at column " + std::to_string(col)),
        column(col) {}
};

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonStableJ : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAnAlcove : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoRepresentative : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResidueFieldTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RankTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Semantically invalid request (kappa mismatch, translation outside the
// cocharacter lattice, ...): CLI exit code 4.
struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace strata
