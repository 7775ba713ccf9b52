#include "csurg/surgery/word.hpp"

#include <cctype>
#include <charconv>

#include "csurg/error.hpp"

namespace csurg::surgery {

MonodromyWord make_word(std::vector<Letter> letters) {
  return reduce_word(MonodromyWord{std::move(letters)});
}

MonodromyWord reduce_word(const MonodromyWord& w) {
  std::vector<Letter> out;
  for (const Letter& l : w.letters) {
    if (l.label.empty()) throw Error(ErrorCode::invalid_argument, "letter without a label");
    if (l.exponent == 0) continue;
    if (!out.empty() && out.back().label == l.label) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return MonodromyWord{std::move(out)};
}

MonodromyWord concat(const MonodromyWord& a, const MonodromyWord& b) {
  MonodromyWord w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return reduce_word(w);
}

MonodromyWord inverse(const MonodromyWord& w) {
  MonodromyWord out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->label, -it->exponent});
  return reduce_word(out);
}

MonodromyWord power(const MonodromyWord& w, int q) {
  const MonodromyWord base = q < 0 ? inverse(w) : reduce_word(w);
  MonodromyWord out;
  for (int i = 0; i < (q < 0 ? -q : q); ++i) out = concat(out, base);
  return out;
}

namespace {

bool label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

}  // namespace

MonodromyWord parse_word(std::string_view text) {
  MonodromyWord w;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (text.substr(i) == "id" || (text.size() >= i + 2 && text.substr(i, 2) == "id" &&
                                 text.find_first_not_of(" \t\r\n", i + 2) == std::string_view::npos))
    return w;
  while (true) {
    skip();
    if (i >= text.size()) break;
    const std::size_t start = i;
    while (i < text.size() && label_char(text[i])) ++i;
    if (i == start)
      throw Error(ErrorCode::malformed_text,
                  "unexpected '" + std::string(1, text[i]) + "' in word at column " +
                      std::to_string(i + 1));
    Letter l{std::string(text.substr(start, i - start)), 1};
    if (i < text.size() && text[i] == '^') {
      ++i;
      const char* first = text.data() + i;
      const char* last = text.data() + text.size();
      if (first != last && *first == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, last, l.exponent);
      if (ec != std::errc())
        throw Error(ErrorCode::malformed_text,
                    "bad exponent in word at column " + std::to_string(i + 1));
      i = static_cast<std::size_t>(ptr - text.data());
    }
    w.letters.push_back(std::move(l));
  }
  return reduce_word(w);
}

std::string to_string(const MonodromyWord& w) {
  if (w.letters.empty()) return "id";
  std::string out;
  for (const Letter& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += l.label;
    if (l.exponent != 1) out += '^' + std::to_string(l.exponent);
  }
  return out;
}

}  // namespace csurg::surgery
