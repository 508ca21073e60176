#include "numsys/errors.hpp"

namespace numsys {

const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::empty_language: return "EmptyLanguage";
    case errc::finite_language: return "FiniteLanguage";
    case errc::not_in_language: return "NotInLanguage";
    case errc::unknown_letter: return "UnknownLetter";
    case errc::not_a_sublanguage: return "NotASublanguage";
    case errc::morphism_conflict: return "MorphismConflict";
    case errc::invalid_modulus: return "InvalidModulus";
    case errc::not_strictly_increasing: return "NotStrictlyIncreasing";
    case errc::not_increasing: return "NotIncreasing";
    case errc::zero_trailing_coefficient: return "ZeroTrailingCoefficient";
    case errc::horizon_exceeded: return "HorizonExceeded";
    case errc::negative_value: return "NegativeValue";
    case errc::no_suitable_anchor: return "NoSuitableAnchor";
    case errc::not_positional: return "NotPositional";
    case errc::remainder_closure_overflow: return "RemainderClosureOverflow";
    case errc::unsupported_growth_class: return "UnsupportedGrowthClass";
    case errc::not_exactly_polynomial: return "NotExactlyPolynomial";
    case errc::golden_mismatch: return "GoldenMismatch";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace numsys
