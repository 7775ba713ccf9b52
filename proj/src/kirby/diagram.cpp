#include "csurg/kirby/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "csurg/error.hpp"

namespace csurg::kirby {

std::string to_string(const CopyLabel& c) {
  return c.label + "_" + std::to_string(c.copy) + (c.pushoff ? "'" : "");
}

std::string curve_union(const TwoHandle& h) {
  std::string out;
  for (const auto& item : h.word)
    if (const auto* arc = std::get_if<Arc>(&item)) {
      if (!out.empty()) out += "∪";
      if (arc->sign < 0) out += "-";
      out += to_string(arc->curve);
    }
  return out;
}

bool id_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    const std::string digits = s.substr(i);
    // Compare numbers by length, then lexically, to avoid overflow.
    const std::string trimmed = digits.substr(std::min(digits.find_first_not_of('0'), digits.size()));
    return std::make_tuple(s.substr(0, i), trimmed.size(), trimmed, digits);
  };
  return split(a) < split(b);
}

KirbyDiagram normalize(KirbyDiagram d) {
  auto by_id = [](const auto& x, const auto& y) { return id_less(x.id, y.id); };
  std::stable_sort(d.base.begin(), d.base.end(), by_id);
  std::stable_sort(d.dotted.begin(), d.dotted.end(), by_id);
  std::stable_sort(d.two_handles.begin(), d.two_handles.end(), by_id);
  return d;
}

namespace {

void check_field(const std::string& s, const std::string& what, bool allow_space) {
  if (s.empty()) throw Error(ErrorCode::invalid_argument, what + " is empty");
  for (char c : s)
    if (c == '\t' || c == '\n' || c == '\r' || (!allow_space && c == ' '))
      throw Error(ErrorCode::invalid_argument, what + " contains a separator: " + s);
}

void check_label(const CopyLabel& c) {
  check_field(c.label, "curve label", false);
  if (c.copy < 1) throw Error(ErrorCode::invalid_argument, "copy index must be >= 1");
}

}  // namespace

void validate(const KirbyDiagram& d) {
  std::set<std::string> ids;
  auto fresh = [&](const std::string& id) {
    check_field(id, "id", false);
    if (!ids.insert(id).second) throw Error(ErrorCode::invalid_argument, "duplicate id " + id);
  };
  for (const auto& b : d.base) {
    fresh(b.id);
    check_field(b.manifold, "base manifold", true);
    check_field(b.description, "base description", true);
    check_field(b.coefficient, "base coefficient", false);
  }
  std::set<std::string> dotted;
  for (const auto& h : d.dotted) {
    fresh(h.id);
    check_label(h.anchors.first);
    check_label(h.anchors.second);
    if (h.anchors.first == h.anchors.second)
      throw Error(ErrorCode::invalid_argument, "dotted handle " + h.id + " has equal anchors");
    dotted.insert(h.id);
  }
  for (const auto& h : d.two_handles) {
    fresh(h.id);
    check_field(h.coefficient, "2-handle coefficient", false);
    if (h.word.empty())
      throw Error(ErrorCode::invalid_argument, "2-handle " + h.id + " has an empty word");
    for (const auto& item : h.word) {
      if (const auto* t = std::get_if<Traverse>(&item)) {
        if (!dotted.count(t->dotted))
          throw Error(ErrorCode::dangling_reference,
                      "2-handle " + h.id + " passes through missing dotted handle " + t->dotted);
      } else {
        const auto& arc = std::get<Arc>(item);
        check_label(arc.curve);
        if (arc.sign != 1 && arc.sign != -1)
          throw Error(ErrorCode::invalid_argument, "arc sign must be +1 or -1");
      }
    }
  }
  for (const auto& n : d.notes) {
    if (n.find('\n') != std::string::npos || n.find('\r') != std::string::npos)
      throw Error(ErrorCode::invalid_argument, "note contains a newline");
  }
}

int traversals(const TwoHandle& h, const std::string& dotted) {
  return static_cast<int>(std::count_if(h.word.begin(), h.word.end(), [&](const WordItem& w) {
    const auto* t = std::get_if<Traverse>(&w);
    return t && t->dotted == dotted;
  }));
}

}  // namespace csurg::kirby
