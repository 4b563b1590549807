#include "garside/words.hpp"

#include <cctype>
#include <sstream>

namespace garside {

std::vector<int> half_twist_letters(int n) {
  std::vector<int> out;
  for (int top = n - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) out.push_back(i);
  return out;
}

BraidWord parse_word(int n, const std::string& text) {
  if (n < 2 || n > kMaxStrands) throw std::invalid_argument("strand count out of range");
  BraidWord w;
  w.n = n;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    std::string tok = text.substr(start, pos - start);
    if (tok == "D" || tok == "d") {
      auto letters = half_twist_letters(n);
      if (tok == "D") {
        w.letters.insert(w.letters.end(), letters.begin(), letters.end());
      } else {
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
          w.letters.push_back(-*it);
      }
      continue;
    }
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S'))
      throw ParseError(start, "bad token '" + tok + "' (expected s<k>, S<k>, D or d)");
    int k = 0;
    for (std::size_t j = 1; j < tok.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(tok[j])))
        throw ParseError(start, "bad token '" + tok + "' (expected s<k>, S<k>, D or d)");
      k = k * 10 + (tok[j] - '0');
      if (k > kMaxStrands) break;
    }
    if (k < 1 || k >= n)
      throw ParseError(start, "generator index " + std::to_string(k) +
                                  " out of range for " + std::to_string(n) +
                                  " strands");
    w.letters.push_back(tok[0] == 's' ? k : -k);
  }
  return w;
}

std::string format_normal_form(const NormalForm& x) { return x.str(); }

}  // namespace garside
