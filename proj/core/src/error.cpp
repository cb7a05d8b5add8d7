#include "graphonlab/error.hpp"

namespace graphonlab {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::AsymmetricValues: return "AsymmetricValues";
    case Errc::ValueOutOfRange: return "ValueOutOfRange";
    case Errc::NonpositiveMeasure: return "NonpositiveMeasure";
    case Errc::MeasuresDontSumToOne: return "MeasuresDontSumToOne";
    case Errc::MalformedGraphon: return "MalformedGraphon";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::BadFraction: return "BadFraction";
    case Errc::BadIndex: return "BadIndex";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::BadSize: return "BadSize";
    case Errc::BadVertex: return "BadVertex";
    case Errc::BadK: return "BadK";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotASubset: return "NotASubset";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

bool is_invariant_violation(Errc code) {
  switch (code) {
    case Errc::AsymmetricValues:
    case Errc::ValueOutOfRange:
    case Errc::NonpositiveMeasure:
    case Errc::MeasuresDontSumToOne:
    case Errc::MalformedGraphon:
    case Errc::InvalidGraph:
      return true;
    default:
      return false;
  }
}

}  // namespace graphonlab
