#pragma once

#include <stdexcept>
#include <string>

namespace numsys {

// Error conditions surfaced by the library. Each maps to one failure mode of
// an operation contract; the CLI translates them to exit codes.
enum class errc {
  empty_language,
  finite_language,
  not_in_language,
  unknown_letter,
  not_a_sublanguage,
  morphism_conflict,
  invalid_modulus,
  not_strictly_increasing,
  not_increasing,
  zero_trailing_coefficient,
  horizon_exceeded,
  negative_value,
  no_suitable_anchor,
  not_positional,
  remainder_closure_overflow,
  unsupported_growth_class,
  not_exactly_polynomial,
  golden_mismatch,
  invalid_argument,
};

const char* to_string(errc code) noexcept;

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool condition, errc code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace numsys
