#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "numsys/errors.hpp"

namespace numsys {

using Letter = std::uint32_t;  // index into an OrderedAlphabet
using Word = std::vector<Letter>;

// A totally ordered finite alphabet. Letters are labelled by non-empty,
// distinct strings; the order is the position in the list.
class OrderedAlphabet {
 public:
  OrderedAlphabet() = default;
  explicit OrderedAlphabet(std::vector<std::string> letters);

  std::size_t size() const { return letters_.size(); }
  const std::string& label(Letter l) const { return letters_.at(l); }
  const std::vector<std::string>& labels() const { return letters_; }

  // Index of a label, or throws unknown_letter.
  Letter rank(std::string_view label) const;
  bool contains(std::string_view label) const;

  // Splits `text` into letters, longest label match first.
  Word parse(std::string_view text) const;
  std::string format(const Word& word) const;

  bool operator==(const OrderedAlphabet&) const = default;

 private:
  std::vector<std::string> letters_;
};

// Genealogical (length first, then lexicographic by rank) comparison.
std::strong_ordering genealogical_cmp(const Word& x, const Word& y);
std::strong_ordering genealogical_cmp(const OrderedAlphabet& alphabet, std::string_view x,
                                      std::string_view y);

}  // namespace numsys
