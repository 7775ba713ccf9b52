#include "csurg/scenario/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace csurg::scenario {

std::string_view to_string(ScenarioErrorKind k) {
  switch (k) {
    case ScenarioErrorKind::syntax: return "syntax";
    case ScenarioErrorKind::undeclared: return "undeclared";
    case ScenarioErrorKind::arity: return "arity";
    case ScenarioErrorKind::runtime: return "runtime";
  }
  return "syntax";
}

ScenarioError::ScenarioError(ScenarioErrorKind kind, Position pos, const std::string& message)
    : std::runtime_error("line " + std::to_string(pos.line) + ", column " +
                         std::to_string(pos.column) + ": " + std::string(to_string(kind)) +
                         " error: " + message),
      kind_(kind),
      pos_(pos),
      message_(message) {}

const Option* Statement::option(std::string_view key) const {
  for (const auto& o : options)
    if (o.key.text == key) return &o;
  return nullptr;
}

namespace {

[[noreturn]] void syntax(Position p, const std::string& what) {
  throw ScenarioError(ScenarioErrorKind::syntax, p, what);
}

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'' ||
         c == '+' || c == '-' || c == '^' || c == '*' || c == '/';
}

// Words absorb a directly attached (...) group, so weinstein(2,1) and
// catalog(1,2) are single tokens; a bracket group [...] is one token.
std::vector<Token> tokenize(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto pos = [&](std::size_t at) { return Position{line_no, static_cast<int>(at) + 1}; };
  auto group = [&](std::size_t start, char open, char close) {
    int depth = 0;
    std::size_t j = start;
    for (; j < line.size(); ++j) {
      if (line[j] == open) ++depth;
      if (line[j] == close && --depth == 0) return j + 1;
    }
    syntax(pos(start), std::string("unclosed '") + open + "'");
  };
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '#') {
      break;
    } else if (c == '[') {
      const std::size_t end = group(i, '[', ']');
      out.push_back({std::string(line.substr(i, end - i)), pos(i)});
      i = end;
    } else if (c == '=' || c == '(' || c == ')' || c == ',') {
      out.push_back({std::string(1, c), pos(i)});
      ++i;
    } else if (word_char(c)) {
      std::size_t j = i;
      while (j < line.size() && word_char(line[j])) ++j;
      if (j < line.size() && line[j] == '(') j = group(j, '(', ')');
      out.push_back({std::string(line.substr(i, j - i)), pos(i)});
      i = j;
    } else {
      syntax(pos(i), std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

bool is_word(const Token& t) {
  return !t.text.empty() && word_char(t.text[0]);
}

bool is_name(const Token& t) {
  if (t.text.empty() || !(std::isalpha(static_cast<unsigned char>(t.text[0])) || t.text[0] == '_'))
    return false;
  return std::all_of(t.text.begin(), t.text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  });
}

// Splits the tail of a line into positional words and key=value options.
void split_operands(const std::vector<Token>& toks, std::size_t from, Statement& s) {
  for (std::size_t i = from; i < toks.size(); ++i) {
    if (i + 1 < toks.size() && toks[i + 1].text == "=") {
      if (!is_name(toks[i])) syntax(toks[i].pos, "bad option name '" + toks[i].text + "'");
      if (i + 2 >= toks.size()) syntax(toks[i + 1].pos, "missing value after '='");
      const Token& v = toks[i + 2];
      if (!is_word(v) && v.text[0] != '[') syntax(v.pos, "bad option value '" + v.text + "'");
      if (s.option(toks[i].text)) syntax(toks[i].pos, "duplicate option " + toks[i].text);
      s.options.push_back({toks[i], v});
      i += 2;
    } else if (is_word(toks[i]) || toks[i].text[0] == '[') {
      if (!s.options.empty())
        syntax(toks[i].pos, "positional operand after options: '" + toks[i].text + "'");
      s.args.push_back(toks[i]);
    } else {
      syntax(toks[i].pos, "unexpected '" + toks[i].text + "'");
    }
  }
}

enum class Kind { page, word, manifold, sphere };

class Checker {
 public:
  void declare(const Token& name, Kind kind) {
    if (!is_name(name)) syntax(name.pos, "bad name '" + name.text + "'");
    if (names_.count(name.text)) syntax(name.pos, "'" + name.text + "' is already declared");
    names_[name.text] = kind;
  }
  void declare_sphere(const std::string& label) { spheres_.insert(label); }
  void use(const Token& name, Kind kind) const {
    const auto it = names_.find(name.text);
    if (it == names_.end() || it->second != kind)
      throw ScenarioError(ScenarioErrorKind::undeclared, name.pos,
                          "no " + kind_name(kind) + " named '" + name.text + "'");
  }
  void use_sphere(const std::string& label, Position pos) const {
    if (!spheres_.count(label))
      throw ScenarioError(ScenarioErrorKind::undeclared, pos,
                          "sphere '" + label + "' is not declared by any page");
  }

 private:
  static std::string kind_name(Kind k) {
    switch (k) {
      case Kind::page: return "page";
      case Kind::word: return "word";
      case Kind::manifold: return "manifold";
      case Kind::sphere: return "sphere";
    }
    return "name";
  }
  std::map<std::string, Kind> names_;
  std::set<std::string> spheres_;
};

void arity(const Statement& s, std::size_t expected, const std::string& shape) {
  if (s.args.size() != expected) {
    const Position p = s.args.size() > expected ? s.args[expected].pos : s.keyword.pos;
    throw ScenarioError(ScenarioErrorKind::arity, p,
                        s.keyword.text + " expects " + shape + ", got " +
                            std::to_string(s.args.size()) + " operand(s)");
  }
}

void allow_options(const Statement& s, std::initializer_list<std::string_view> keys) {
  for (const auto& o : s.options)
    if (std::find(keys.begin(), keys.end(), o.key.text) == keys.end())
      syntax(o.key.pos, "unknown option '" + o.key.text + "' for " + s.keyword.text);
}

void require_option(const Statement& s, std::string_view key) {
  if (!s.option(key))
    syntax(s.keyword.pos, s.keyword.text + " needs " + std::string(key) + "=");
}

// Items of a [a,b,...] token with their positions.
std::vector<Token> list_items(const Token& t) {
  if (t.text.size() < 2 || t.text.front() != '[' || t.text.back() != ']')
    syntax(t.pos, "expected a [...] list");
  std::vector<Token> out;
  const std::string body = t.text.substr(1, t.text.size() - 2);
  std::size_t start = 0;
  if (body.find_first_not_of(" ") == std::string::npos) return out;
  while (true) {
    const auto comma = body.find(',', start);
    std::string item = body.substr(start, comma - start);
    const auto lead = item.find_first_not_of(' ');
    const auto trail = item.find_last_not_of(' ');
    const Position p{t.pos.line, t.pos.column + 1 + static_cast<int>(start + (lead == std::string::npos ? 0 : lead))};
    if (lead == std::string::npos) syntax(p, "empty list item");
    out.push_back({item.substr(lead, trail - lead + 1), p});
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

bool integer(std::string_view t) {
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) t.remove_prefix(1);
  return !t.empty() && t.size() <= 9 &&
         std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

void require_integer(const Token& t) {
  if (!integer(t.text)) syntax(t.pos, "expected an integer, got '" + t.text + "'");
}

// Integer- and real-valued options are checked here so that a parsed
// scenario never fails on number syntax at run time.
void check_numbers(const Statement& s) {
  for (const auto& o : s.options) {
    const std::string& k = o.key.text;
    if (k == "dim" || k == "k" || k == "q" || k == "n" || k == "samples" ||
        k == "expect_dotted" || k == "expect_two")
      require_integer(o.value);
    if (k == "eps") {
      std::size_t used = 0;
      try {
        std::stod(o.value.text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != o.value.text.size())
        syntax(o.value.pos, "expected a number, got '" + o.value.text + "'");
    }
  }
}

// Target of "keyword name = ...": returns the index of the first operand.
std::size_t assignment(const std::vector<Token>& toks, Statement& s) {
  if (toks.size() < 2) syntax(s.keyword.pos, s.keyword.text + " needs a name");
  if (toks.size() < 3 || toks[2].text != "=")
    syntax(toks.size() < 3 ? toks[1].pos : toks[2].pos, "expected '=' after the name");
  s.target = toks[1];
  return 3;
}

void check_page(Statement& s, Checker& names) {
  allow_options(s, {"dim", "handles", "stein", "spheres", "cores"});
  require_option(s, "dim");
  require_option(s, "handles");
  names.declare(*s.target, Kind::page);
  if (const auto* sp = s.option("spheres"))
    for (const auto& item : list_items(sp->value)) {
      if (!is_name(item)) syntax(item.pos, "bad sphere label '" + item.text + "'");
      names.declare_sphere(item.text);
    }
  for (const char* key : {"handles", "cores"})
    if (const auto* o = s.option(key))
      for (const auto& item : list_items(o->value))
      {
        const auto colon = item.text.find(':');
        if (colon == std::string::npos)
          syntax(item.pos, std::string("expected index:value in ") + key);
        require_integer({item.text.substr(0, colon), item.pos});
        if (std::string_view(key) == "handles")
          require_integer({item.text.substr(colon + 1), item.pos});
      }
  if (const auto* st = s.option("stein"))
    if (st->value.text != "true" && st->value.text != "false")
      syntax(st->value.pos, "stein must be true or false");
}

void check_word(const Statement& s, const Checker& names) {
  if (s.args.size() == 1 && s.args[0].text == "id") return;
  for (const auto& a : s.args) {
    const std::string label = a.text.substr(0, a.text.find('^'));
    if (!is_name({label, a.pos})) syntax(a.pos, "bad letter '" + a.text + "'");
    names.use_sphere(label, a.pos);
    if (const auto caret = a.text.find('^'); caret != std::string::npos)
      require_integer({a.text.substr(caret + 1), {a.pos.line, a.pos.column + static_cast<int>(caret) + 1}});
  }
}

Statement parse_line(const std::vector<Token>& toks, const std::string& source, Checker& names) {
  Statement s;
  s.keyword = toks[0];
  s.source = source;
  const std::string& kw = s.keyword.text;

  if (kw == "page") {
    if (toks.size() < 2) syntax(s.keyword.pos, "page needs a name");
    s.target = toks[1];
    split_operands(toks, 2, s);
    arity(s, 0, "only options");
    check_page(s, names);
  } else if (kw == "word") {
    split_operands(toks, assignment(toks, s), s);
    allow_options(s, {});
    check_word(s, names);
    names.declare(*s.target, Kind::word);
  } else if (kw == "openbook") {
    const std::size_t i = assignment(toks, s);
    if (toks.size() != i + 5 || toks[i].text != "(" || toks[i + 2].text != "," ||
        toks[i + 4].text != ")")
      syntax(toks[std::min(i, toks.size() - 1)].pos, "expected (<page>, <word>)");
    s.args = {toks[i + 1], toks[i + 3]};
    names.use(s.args[0], Kind::page);
    names.use(s.args[1], Kind::word);
    names.declare(*s.target, Kind::manifold);
  } else if (kw == "manifold") {
    split_operands(toks, assignment(toks, s), s);
    arity(s, 1, "catalog(<n>,<k>)");
    allow_options(s, {"hypersurface", "legendrian"});
    {
      const std::string& c = s.args[0].text;
      const auto comma = c.find(',');
      if (c.rfind("catalog(", 0) != 0 || comma == std::string::npos || c.back() != ')' ||
          !integer(c.substr(8, comma - 8)) || !integer(c.substr(comma + 1, c.size() - comma - 2)))
        syntax(s.args[0].pos, "expected catalog(<n>,<k>)");
    }
    if (const auto* h = s.option("hypersurface")) names.use(h->value, Kind::page);
    names.declare(*s.target, Kind::manifold);
  } else if (kw == "sum" || kw == "surgery" || kw == "cover" || kw == "fibered") {
    split_operands(toks, assignment(toks, s), s);
    if (kw == "sum") {
      arity(s, 2, "two manifolds");
      allow_options(s, {});
      for (const auto& a : s.args) names.use(a, Kind::manifold);
    } else if (kw == "surgery") {
      arity(s, 1, "one manifold");
      allow_options(s, {"sphere", "k", "param"});
      require_option(s, "sphere");
      require_option(s, "k");
      names.use(s.args[0], Kind::manifold);
    } else if (kw == "cover") {
      arity(s, 1, "one manifold");
      allow_options(s, {"q", "along"});
      require_option(s, "q");
      names.use(s.args[0], Kind::manifold);
      if (const auto* a = s.option("along"); a && a->value.text != "page")
        names.use(a->value, Kind::page);
    } else {
      arity(s, 3, "<page> <phi> <psi>");
      allow_options(s, {});
      names.use(s.args[0], Kind::page);
      names.use(s.args[1], Kind::word);
      names.use(s.args[2], Kind::word);
    }
    names.declare(*s.target, Kind::manifold);
  } else if (kw == "compose") {
    split_operands(toks, 1, s);
    allow_options(s, {});
    if (s.args.empty()) throw ScenarioError(ScenarioErrorKind::arity, s.keyword.pos,
                                            "compose expects at least one coefficient");
    for (const auto& a : s.args) require_integer(a);
  } else if (kw == "print") {
    split_operands(toks, 1, s);
    arity(s, 1, "one manifold");
    allow_options(s, {});
    names.use(s.args[0], Kind::manifold);
  } else if (kw == "kirby" || kw == "verify") {
    if (toks.size() < 2 || !is_name(toks[1])) syntax(s.keyword.pos, kw + " needs a subcommand");
    s.sub = toks[1];
    split_operands(toks, 2, s);
    const std::string& sub = s.sub->text;
    if (kw == "kirby" && sub == "cover") {
      arity(s, 1, "one page");
      allow_options(s, {"q", "base", "out", "expect_dotted", "expect_two"});
      require_option(s, "q");
      names.use(s.args[0], Kind::page);
    } else if (kw == "kirby" && sub == "surgery") {
      arity(s, 0, "only options");
      allow_options(s, {"k", "out"});
      require_option(s, "k");
    } else if (kw == "verify" && sub == "equal") {
      arity(s, 2, "two manifolds");
      allow_options(s, {});
      for (const auto& a : s.args) names.use(a, Kind::manifold);
    } else if (kw == "verify" && sub == "flags") {
      arity(s, 1, "one manifold");
      allow_options(s, {"weakly", "symplectically", "exactly", "stein"});
      names.use(s.args[0], Kind::manifold);
    } else if (kw == "verify" && sub == "twist") {
      arity(s, 0, "only options");
      allow_options(s, {"n", "samples", "eps"});
      require_option(s, "n");
    } else if (kw == "verify" && sub == "contact") {
      arity(s, 1, "one form id");
      allow_options(s, {"n", "samples"});
      require_option(s, "n");
    } else {
      syntax(s.sub->pos, "unknown " + kw + " subcommand '" + sub + "'");
    }
  } else {
    syntax(s.keyword.pos, "unknown statement '" + kw + "'");
  }
  check_numbers(s);
  return s;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  Scenario sc;
  Checker names;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const std::string_view line = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
    ++line_no;
    const auto toks = tokenize(line, line_no);
    if (!toks.empty()) {
      std::string source(line);
      if (!source.empty() && source.back() == '\r') source.pop_back();
      sc.statements.push_back(parse_line(toks, source, names));
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return sc;
}

}  // namespace csurg::scenario
