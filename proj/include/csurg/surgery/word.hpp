#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace csurg::surgery {

struct Letter {
  std::string label;
  int exponent = 1;
  bool operator==(const Letter&) const = default;
};

// Word in labeled Dehn-twist generators, read left to right as composition.
// Only free reduction is imposed; distinct labels never interact.
struct MonodromyWord {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  bool operator==(const MonodromyWord&) const = default;
};

MonodromyWord make_word(std::vector<Letter> letters);
MonodromyWord reduce_word(const MonodromyWord& w);
// reduce(a . b)
MonodromyWord concat(const MonodromyWord& a, const MonodromyWord& b);
MonodromyWord power(const MonodromyWord& w, int q);
MonodromyWord inverse(const MonodromyWord& w);

// "a^2 b^-1 c"; "id" or blank is the empty word. Throws malformed_text.
MonodromyWord parse_word(std::string_view text);
// Inverse of parse_word on reduced words; the empty word prints as "id".
std::string to_string(const MonodromyWord& w);

}  // namespace csurg::surgery
