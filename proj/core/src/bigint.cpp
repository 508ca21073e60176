#include "numsys/bigint.hpp"

namespace numsys {

std::string to_string(const Integer& value) { return value.get_str(); }

std::string decimal_string(const Rational& value, int digits) {
  Rational v = value;
  v.canonicalize();
  bool negative = v < 0;
  if (negative) v = -v;

  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;

  Integer scaled = (v.get_num() * scale) / v.get_den();  // truncated
  Integer whole = scaled / scale;
  Integer frac = scaled % scale;

  std::string frac_str = frac.get_str();
  frac_str.insert(frac_str.begin(), static_cast<std::size_t>(digits) - frac_str.size(), '0');

  std::string out = negative && (whole != 0 || frac != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    out += '.';
    out += frac_str;
  }
  return out;
}

}  // namespace numsys
