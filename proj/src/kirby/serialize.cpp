#include "csurg/kirby/serialize.hpp"

#include <charconv>
#include <sstream>

#include "csurg/error.hpp"

namespace csurg::kirby {

namespace {

constexpr std::string_view kHeader = "KIRBY\t1";

std::string word_text(const std::vector<WordItem>& word) {
  std::string out;
  for (const auto& item : word) {
    if (!out.empty()) out += ' ';
    if (const auto* arc = std::get_if<Arc>(&item))
      out += (arc->sign > 0 ? "+" : "-") + to_string(arc->curve);
    else
      out += std::get<Traverse>(item).dotted;
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorCode::malformed_text, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

CopyLabel parse_copy_label(std::string_view tok, int line) {
  CopyLabel c;
  if (!tok.empty() && tok.back() == '\'') {
    c.pushoff = true;
    tok.remove_suffix(1);
  }
  const auto us = tok.rfind('_');
  if (us == std::string_view::npos || us == 0 || us + 1 == tok.size())
    fail(line, "expected label_copy, got " + std::string(tok));
  c.label = std::string(tok.substr(0, us));
  const auto digits = tok.substr(us + 1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), c.copy);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || c.copy < 1)
    fail(line, "bad copy index in " + std::string(tok));
  return c;
}

std::vector<WordItem> parse_word(std::string_view field, int line) {
  std::vector<WordItem> word;
  for (const auto& tok : split(field, ' ')) {
    if (tok.empty()) fail(line, "empty token in attaching word");
    if (tok[0] == '+' || tok[0] == '-')
      word.emplace_back(Arc{parse_copy_label(std::string_view(tok).substr(1), line),
                            tok[0] == '+' ? 1 : -1});
    else
      word.emplace_back(Traverse{tok});
  }
  return word;
}

}  // namespace

std::string serialize_diagram(const KirbyDiagram& d) {
  validate(d);
  const KirbyDiagram n = normalize(d);
  std::ostringstream out;
  out << kHeader << '\n' << "BASE\n";
  for (const auto& b : n.base)
    out << b.id << '\t' << b.manifold << '\t' << b.description << '\t' << b.coefficient << '\n';
  out << "DOTTED\n";
  for (const auto& h : n.dotted)
    out << h.id << '\t' << to_string(h.anchors.first) << '\t' << to_string(h.anchors.second)
        << '\n';
  out << "2HANDLES\n";
  for (const auto& h : n.two_handles)
    out << h.id << '\t' << h.coefficient << '\t' << word_text(h.word) << '\n';
  out << "NOTES\n";
  for (const auto& note : n.notes) out << note << '\n';
  out << "END\n";
  return out.str();
}

KirbyDiagram parse_diagram(std::string_view text) {
  const std::vector<std::string> lines = split(text, '\n');
  enum class Section { header, base, dotted, two, notes, done } section = Section::header;
  KirbyDiagram d;
  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    const int line = static_cast<int>(i) + 1;
    const std::string& l = lines[i];
    if (section == Section::done) {
      if (i + 1 == lines.size() && l.empty()) break;
      fail(line, "content after END");
    }
    if (section == Section::header) {
      if (l != kHeader) fail(line, "expected header KIRBY<TAB>1");
      section = Section::base;
      if (i + 1 >= lines.size() || lines[i + 1] != "BASE") fail(line + 1, "expected BASE");
      ++i;
      continue;
    }
    if (section != Section::notes) {
      if (l == "DOTTED" && section == Section::base) { section = Section::dotted; continue; }
      if (l == "2HANDLES" && section == Section::dotted) { section = Section::two; continue; }
      if (l == "NOTES" && section == Section::two) { section = Section::notes; continue; }
    } else if (l == "END") {
      section = Section::done;
      continue;
    }
    const auto fields = split(l, '\t');
    switch (section) {
      case Section::base:
        if (fields.size() != 4) fail(line, "base line needs 4 fields");
        d.base.push_back({fields[0], fields[1], fields[2], fields[3]});
        break;
      case Section::dotted:
        if (fields.size() != 3) fail(line, "dotted line needs 3 fields");
        d.dotted.push_back(
            {fields[0], {parse_copy_label(fields[1], line), parse_copy_label(fields[2], line)}});
        break;
      case Section::two:
        if (fields.size() != 3) fail(line, "2-handle line needs 3 fields");
        d.two_handles.push_back({fields[0], parse_word(fields[2], line), fields[1]});
        break;
      case Section::notes:
        d.notes.push_back(l);
        break;
      default:
        break;
    }
  }
  if (section != Section::done)
    fail(static_cast<int>(lines.size()), "missing END");
  try {
    validate(d);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::dangling_reference) throw;
    throw Error(ErrorCode::malformed_text, e.what());
  }
  return d;
}

}  // namespace csurg::kirby
