#pragma once

#include <stdexcept>
#include <string>

namespace rmt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad arguments or violated structural invariants (graphs, witnesses, ...).
struct ValidationError : Error {
  using Error::Error;
};

// Input text that does not parse or does not match the file schema.
struct ParseError : Error {
  using Error::Error;
};

// Instance too large for an exhaustive routine.
struct SizeLimitError : Error {
  using Error::Error;
};

// Behavior-space budget exceeded.
struct BudgetError : Error {
  using Error::Error;
};

// Corrupted set not covered by the adversary structure (or touching the
// sender/receiver) without the override flag.
struct InadmissibleError : Error {
  using Error::Error;
};

// A message that violates the network model (non-edge, wrong recipient).
struct ProtocolViolation : Error {
  using Error::Error;
};

// Two distinct values reached certifying support in the same delivery batch.
struct ContradictionFault : Error {
  using Error::Error;
};

}  // namespace rmt
