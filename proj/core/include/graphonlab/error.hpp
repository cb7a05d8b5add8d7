#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graphonlab {

enum class Errc {
  AsymmetricValues,
  ValueOutOfRange,
  NonpositiveMeasure,
  MeasuresDontSumToOne,
  MalformedGraphon,
  InvalidGraph,
  BadFraction,
  BadIndex,
  NotAPermutation,
  BadSize,
  BadVertex,
  BadK,
  TooLarge,
  NotASubset,
  LengthMismatch,
  HypothesisViolated,
  ParseError,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// True for codes that describe a structurally valid input violating a
/// mathematical invariant (as opposed to unparseable text or a guardrail).
bool is_invariant_violation(Errc code);

}  // namespace graphonlab
