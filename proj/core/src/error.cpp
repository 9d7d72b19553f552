#include "bfw/error.hpp"

namespace bfw {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::not_irreducible: return "NotIrreducible";
    case Errc::too_large: return "TooLarge";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::not_in_subfield: return "NotInSubfield";
    case Errc::in_subfield: return "InSubfield";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::zero_mu: return "ZeroMu";
    case Errc::invalid_lambda: return "InvalidLambda";
    case Errc::unexpected_value: return "UnexpectedValue";
    case Errc::no_such_mu: return "NoSuchMu";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace bfw
