#pragma once

#include <stdexcept>
#include <string>

namespace ncspace {

// Error taxonomy shared across the library. Every condition the engine can
// reject is a named type so callers (and the CLI exit-code mapping) can
// dispatch on it.

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define NCSPACE_DEFINE_ERROR(NAME)                                  \
  struct NAME : Error {                                             \
    explicit NAME(const std::string& msg) : Error(#NAME ": " + msg) {} \
  }

NCSPACE_DEFINE_ERROR(FieldMismatch);
NCSPACE_DEFINE_ERROR(ShapeError);
NCSPACE_DEFINE_ERROR(DegenerateInput);
NCSPACE_DEFINE_ERROR(RankError);
NCSPACE_DEFINE_ERROR(NoEmbeddings);
NCSPACE_DEFINE_ERROR(ConstantUnresolvable);
NCSPACE_DEFINE_ERROR(UnboundGenerator);
NCSPACE_DEFINE_ERROR(AlgebraMismatch);
NCSPACE_DEFINE_ERROR(NotCentral);
NCSPACE_DEFINE_ERROR(InvalidAction);
NCSPACE_DEFINE_ERROR(TooLarge);
NCSPACE_DEFINE_ERROR(Undecided);
NCSPACE_DEFINE_ERROR(NotZeroDimensional);
NCSPACE_DEFINE_ERROR(ResourceExhausted);
NCSPACE_DEFINE_ERROR(Unsupported);

#undef NCSPACE_DEFINE_ERROR

// Parse errors carry a source position.
struct ParseError : Error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& msg)
      : Error("parse error at " + std::to_string(line_) + ":" +
              std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

}  // namespace ncspace
