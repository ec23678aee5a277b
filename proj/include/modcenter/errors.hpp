#pragma once

#include <stdexcept>
#include <string>

namespace modcenter {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact integer arithmetic overflowed a machine word.  Results are never
// silently wrapped.
struct OverflowError : Error {
  using Error::Error;
};

// Matrix or hom dimensions do not line up.
struct ShapeMismatch : Error {
  using Error::Error;
};

// Two subgroups live in different ambient groups.
struct AmbientMismatch : Error {
  using Error::Error;
};

// Two module actions have different base rings.
struct RingMismatch : Error {
  using Error::Error;
};

// Carrier groups differ where they must agree.
struct CarrierMismatch : Error {
  using Error::Error;
};

// A presentation has a free summand; only finite groups are supported.
struct InfiniteQuotient : Error {
  using Error::Error;
};

struct InvalidModulus : Error {
  using Error::Error;
};

// An operation that requires a scalar base ring got a structure-constant ring.
struct NonScalarRing : Error {
  using Error::Error;
};

// An input exceeds a configured size guard.  Carries the offending size.
struct BoundExceeded : Error {
  int64_t size;
  BoundExceeded(const std::string& what, int64_t size_) : Error(what), size(size_) {}
};

// A theorem-check was invoked on an instance that does not satisfy its
// hypotheses.
struct HypothesisUnmet : Error {
  using Error::Error;
};

// A provable equivalence failed at runtime; always an implementation bug.
struct EquivalenceViolation : Error {
  using Error::Error;
};

// An internal invariant that must hold by construction was violated.
struct InternalInconsistency : Error {
  using Error::Error;
};

// Input text could not be parsed.  Positions are 1-based; 0 = unknown.
struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& what, int line_ = 0, int column_ = 0)
      : Error(what), line(line_), column(column_) {}
};

}  // namespace modcenter
