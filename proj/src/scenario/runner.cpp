#include "csurg/scenario/runner.hpp"

#include <fmt/format.h>

#include <charconv>
#include <map>

#include "csurg/error.hpp"
#include "csurg/kirby/construct.hpp"
#include "csurg/kirby/serialize.hpp"
#include "csurg/surgery/calculus.hpp"
#include "csurg/surgery/text.hpp"

namespace csurg::scenario {

namespace {

using surgery::ManifoldDescriptor;
using surgery::MonodromyWord;
using surgery::PageSpec;

[[noreturn]] void runtime(Position p, const std::string& what) {
  throw ScenarioError(ScenarioErrorKind::runtime, p, what);
}

int to_int(const Token& t) {
  int v = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw ScenarioError(ScenarioErrorKind::syntax, t.pos, "expected an integer, got " + t.text);
  return v;
}

double to_real(const Token& t) {
  try {
    std::size_t used = 0;
    const double v = std::stod(t.text, &used);
    if (used == t.text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ScenarioError(ScenarioErrorKind::syntax, t.pos, "expected a number, got " + t.text);
}

// Items of a [a,b] list token; the parser has already checked the shape.
std::vector<std::string> items(const Token& t) {
  std::vector<std::string> out;
  std::string body = t.text.substr(1, t.text.size() - 2);
  std::size_t start = 0;
  if (body.find_first_not_of(' ') == std::string::npos) return out;
  while (true) {
    const auto comma = body.find(',', start);
    std::string item = body.substr(start, comma - start);
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::pair<int, std::string> split_pair(const std::string& item, Position p) {
  const auto colon = item.find(':');
  return {to_int({item.substr(0, colon), p}), item.substr(colon + 1)};
}

class Runner {
 public:
  explicit Runner(const RunOptions& opts) : opts_(opts) {}

  void run(const Statement& s) {
    try {
      dispatch(s);
    } catch (const ScenarioError&) {
      throw;
    } catch (const Error& e) {
      runtime(s.keyword.pos, std::string(csurg::to_string(e.code())) + ": " + e.what());
    }
  }

  RunResult result() && { return std::move(result_); }

 private:
  void emit(ReportLine l) {
    result_.any_failed |= l.failed();
    result_.report += format_line(l) + "\n";
  }

  void echo(const Statement& s) {
    result_.report += fmt::format("# line {}: {}\n", s.keyword.pos.line, s.source);
  }

  std::size_t samples(const Statement& s, std::size_t fallback) const {
    if (opts_.samples) return *opts_.samples;
    if (const auto* o = s.option("samples")) return static_cast<std::size_t>(to_int(o->value));
    return fallback;
  }

  void describe(const std::string& name, const ManifoldDescriptor& m) {
    emit({name + ".word",
          m.open_book ? surgery::to_string(m.open_book->word) : std::string("-")});
    emit({name + ".identity", m.identity.empty() ? "-" : m.identity});
    emit({name + ".flags", surgery::to_string(m.flags)});
  }

  void dispatch(const Statement& s) {
    const std::string& kw = s.keyword.text;
    if (kw == "page") return declare_page(s);
    if (kw == "word") return declare_word(s);
    if (kw == "openbook") {
      manifolds_[s.target->text] =
          surgery::from_open_book({pages_.at(s.args[0].text), words_.at(s.args[1].text)});
      return;
    }
    if (kw == "manifold") return declare_manifold(s);

    echo(s);
    if (kw == "sum") {
      assign(s, surgery::liouville_sum_openbooks(manifold(s.args[0]), manifold(s.args[1])));
    } else if (kw == "surgery") {
      const auto* param = s.option("param");
      assign(s, surgery::contact_surgery(manifold(s.args[0]), s.option("sphere")->value.text,
                                         to_int(s.option("k")->value),
                                         param ? param->value.text : "P0"));
    } else if (kw == "cover") {
      const auto* along = s.option("along");
      assign(s, surgery::branched_cover(manifold(s.args[0]), along ? along->value.text : "page",
                                        to_int(s.option("q")->value)));
    } else if (kw == "fibered") {
      assign(s, surgery::fibered_manifold(pages_.at(s.args[0].text), words_.at(s.args[1].text),
                                          words_.at(s.args[2].text)));
    } else if (kw == "compose") {
      std::vector<int> ks;
      std::string label;
      for (const auto& a : s.args) {
        ks.push_back(to_int(a));
        label += (label.empty() ? "" : ",") + a.text;
      }
      const auto c = surgery::surgery_compose(ks);
      emit({"compose(" + label + ")", c ? std::to_string(*c) : "none"});
    } else if (kw == "print") {
      const std::string text = surgery::serialize(manifold(s.args[0]));
      for (std::size_t start = 0; start < text.size();) {
        const auto nl = text.find('\n', start);
        result_.report += "| " + text.substr(start, nl - start) + "\n";
        start = nl + 1;
      }
    } else if (kw == "kirby") {
      run_kirby(s);
    } else {
      run_verify(s);
    }
  }

  void declare_page(const Statement& s) {
    PageSpec p;
    p.name = s.target->text;
    const int dim = to_int(s.option("dim")->value);
    if (dim < 2 || dim % 2 != 0) runtime(s.option("dim")->value.pos, "page dimension must be even");
    p.half_dim = dim / 2;
    for (const auto& item : items(s.option("handles")->value)) {
      const auto [k, count] = split_pair(item, s.option("handles")->value.pos);
      p.handles.emplace_back(k, to_int({count, s.option("handles")->value.pos}));
    }
    if (const auto* st = s.option("stein")) p.stein = st->value.text == "true";
    if (const auto* sp = s.option("spheres")) p.spheres = items(sp->value);
    if (const auto* c = s.option("cores"))
      for (const auto& item : items(c->value)) {
        auto [k, label] = split_pair(item, c->value.pos);
        p.cores.push_back({k, label});
      }
    surgery::validate_page(p);
    pages_[p.name] = p;
  }

  void declare_word(const Statement& s) {
    std::string text;
    for (const auto& a : s.args) text += a.text + " ";
    words_[s.target->text] = surgery::parse_word(text);
  }

  void declare_manifold(const Statement& s) {
    const std::string& spec = s.args[0].text;
    const auto comma = spec.find(',');
    if (comma == std::string::npos || spec.back() != ')')
      throw ScenarioError(ScenarioErrorKind::syntax, s.args[0].pos, "expected catalog(<n>,<k>)");
    const Position p = s.args[0].pos;
    const int n = to_int({spec.substr(8, comma - 8), p});
    const int k = to_int({spec.substr(comma + 1, spec.size() - comma - 2), p});
    ManifoldDescriptor m = surgery::catalog_M_nk(n, k);
    if (const auto* h = s.option("hypersurface")) m.hypersurfaces.push_back(pages_.at(h->value.text));
    if (const auto* l = s.option("legendrian")) m.legendrians.push_back({l->value.text, false});
    manifolds_[s.target->text] = m;
  }

  const ManifoldDescriptor& manifold(const Token& t) const { return manifolds_.at(t.text); }

  void assign(const Statement& s, ManifoldDescriptor m) {
    describe(s.target->text, m);
    manifolds_[s.target->text] = std::move(m);
  }

  void run_kirby(const Statement& s) {
    kirby::KirbyDiagram d;
    std::string tag;
    if (s.sub->text == "cover") {
      const int q = to_int(s.option("q")->value);
      const auto* base = s.option("base");
      const std::string b = base ? base->value.text : "lens";
      if (b != "lens" && b != "none")
        throw ScenarioError(ScenarioErrorKind::syntax, base->value.pos, "base must be lens or none");
      d = kirby::branched_cover_diagram(pages_.at(s.args[0].text),
                                        b == "lens" ? kirby::lens_space_base()
                                                    : std::vector<kirby::BaseComponent>{},
                                        q);
      tag = fmt::format("kirby(cover,{},q={})", s.args[0].text, q);
    } else {
      const int k = to_int(s.option("k")->value);
      d = kirby::surgery_cobordism_diagram(k);
      tag = fmt::format("kirby(surgery,k={})", k);
    }
    std::string words;
    for (const auto& h : d.two_handles) words += (words.empty() ? "" : ",") + kirby::curve_union(h);
    auto count_line = [&](const char* what, std::size_t have, const char* key) {
      ReportLine l{tag + "." + what, std::to_string(have)};
      if (const auto* o = s.option(key)) {
        l.tolerance = "expected=" + o->value.text;
        l.status = static_cast<int>(have) == to_int(o->value) ? "PASS" : "FAIL";
      }
      emit(l);
    };
    count_line("dotted", d.dotted.size(), "expect_dotted");
    count_line("two_handles", d.two_handles.size(), "expect_two");
    emit({tag + ".words", words.empty() ? "-" : words});
    if (const auto* out = s.option("out")) {
      result_.files.push_back({out->value.text, kirby::serialize_diagram(d)});
      emit({tag + ".out", out->value.text});
    }
  }

  void run_verify(const Statement& s) {
    const std::string& sub = s.sub->text;
    if (sub == "equal") {
      const bool eq = surgery::word_equal(manifold(s.args[0]), manifold(s.args[1]));
      emit({fmt::format("equal({},{})", s.args[0].text, s.args[1].text), eq ? "equal" : "distinct",
            "-", eq ? "PASS" : "FAIL"});
    } else if (sub == "flags") {
      const auto& f = manifold(s.args[0]).flags;
      for (const auto& o : s.options) {
        const surgery::Tri want = surgery::parse_tri(o.value.text);
        const surgery::Tri have = o.key.text == "weakly"           ? f.weakly
                                  : o.key.text == "symplectically" ? f.symplectically
                                  : o.key.text == "exactly"        ? f.exactly
                                                                   : f.stein;
        emit({s.args[0].text + "." + o.key.text, std::string(surgery::to_string(have)),
              "expected=" + std::string(surgery::to_string(want)), have == want ? "PASS" : "FAIL"});
      }
    } else if (sub == "twist") {
      const auto* eps = s.option("eps");
      emit(verify_twist(to_int(s.option("n")->value), samples(s, 50), opts_.seed,
                        eps ? to_real(eps->value) : 0.5, opts_.tolerance.value_or(1e-5)));
    } else {
      emit(verify_contact(s.args[0].text, to_int(s.option("n")->value), samples(s, 100),
                          opts_.seed));
    }
  }

  RunOptions opts_;
  RunResult result_;
  std::map<std::string, PageSpec> pages_;
  std::map<std::string, MonodromyWord> words_;
  std::map<std::string, ManifoldDescriptor> manifolds_;
};

}  // namespace

RunResult run_scenario(const Scenario& s, const RunOptions& opts) {
  Runner r(opts);
  for (const auto& st : s.statements) r.run(st);
  return std::move(r).result();
}

}  // namespace csurg::scenario
