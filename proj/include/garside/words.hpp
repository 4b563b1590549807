#pragma once

#include "garside/braid.hpp"

#include <string>

namespace garside {

// Word grammar, whitespace separated:
//   s<k>  generator sigma_k           S<k>  its inverse
//   D     the half twist              d     its inverse
// Example: "s1 S2 D d s3".

struct ParseError : std::runtime_error {
  // 0-based character offset of the offending token in the input string.
  std::size_t offset;
  ParseError(std::size_t off, const std::string& msg)
      : std::runtime_error(msg), offset(off) {}
};

// Parses a word over n strands; half-twist tokens are expanded into
// generator letters.
BraidWord parse_word(int n, const std::string& text);

// Positive word for the half twist: (s1..s_{n-1})(s1..s_{n-2})...(s1).
std::vector<int> half_twist_letters(int n);

// Renders a normal form as "D^p | w1 . w2 . ... . wr" where each wi is the
// canonical positive word of the factor.
std::string format_normal_form(const NormalForm& x);

}  // namespace garside
