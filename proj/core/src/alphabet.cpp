#include "numsys/alphabet.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace numsys {

OrderedAlphabet::OrderedAlphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
  require(!letters_.empty(), errc::invalid_argument, "alphabet must not be empty");
  std::unordered_set<std::string> seen;
  for (const auto& l : letters_) {
    require(!l.empty(), errc::invalid_argument, "alphabet labels must be non-empty");
    require(seen.insert(l).second, errc::invalid_argument, "duplicate alphabet label '" + l + "'");
  }
}

Letter OrderedAlphabet::rank(std::string_view label) const {
  for (Letter i = 0; i < letters_.size(); ++i) {
    if (letters_[i] == label) return i;
  }
  fail(errc::unknown_letter, "'" + std::string(label) + "' is not an alphabet letter");
}

bool OrderedAlphabet::contains(std::string_view label) const {
  return std::find(letters_.begin(), letters_.end(), label) != letters_.end();
}

Word OrderedAlphabet::parse(std::string_view text) const {
  Word out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    // longest label match at this position
    Letter best = 0;
    std::size_t best_len = 0;
    for (Letter i = 0; i < letters_.size(); ++i) {
      const std::string& l = letters_[i];
      if (l.size() > best_len && text.substr(pos, l.size()) == l) {
        best = i;
        best_len = l.size();
      }
    }
    require(best_len > 0, errc::unknown_letter,
            "no alphabet letter matches \"" + std::string(text.substr(pos)) + "\"");
    out.push_back(best);
    pos += best_len;
  }
  return out;
}

std::string OrderedAlphabet::format(const Word& word) const {
  std::string out;
  for (Letter l : word) out += label(l);
  return out;
}

std::strong_ordering genealogical_cmp(const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() <=> y.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return x[i] <=> y[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering genealogical_cmp(const OrderedAlphabet& alphabet, std::string_view x,
                                      std::string_view y) {
  return genealogical_cmp(alphabet.parse(x), alphabet.parse(y));
}

}  // namespace numsys
