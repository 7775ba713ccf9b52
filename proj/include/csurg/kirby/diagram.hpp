#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace csurg::kirby {

// A labeled point or curve in copy `copy` of the base manifold; `pushoff`
// marks the Reeb push-off copy used when one copy takes part in two sums.
struct CopyLabel {
  std::string label;
  int copy = 1;
  bool pushoff = false;
  bool operator==(const CopyLabel&) const = default;
};

struct BaseComponent {
  std::string id;
  std::string manifold;     // e.g. L(2,1)
  std::string description;  // e.g. tb=-1 unknot
  std::string coefficient;  // contact coefficient annotation, e.g. -1 or 1/2
  bool operator==(const BaseComponent&) const = default;
};

struct DottedHandle {
  std::string id;
  std::pair<CopyLabel, CopyLabel> anchors;
  bool operator==(const DottedHandle&) const = default;
};

struct Arc {
  CopyLabel curve;
  int sign = 1;
  bool operator==(const Arc&) const = default;
};

struct Traverse {
  std::string dotted;
  bool operator==(const Traverse&) const = default;
};

using WordItem = std::variant<Arc, Traverse>;

struct TwoHandle {
  std::string id;
  std::vector<WordItem> word;
  std::string coefficient;
  bool operator==(const TwoHandle&) const = default;
};

struct KirbyDiagram {
  std::vector<BaseComponent> base;
  std::vector<DottedHandle> dotted;
  std::vector<TwoHandle> two_handles;
  std::vector<std::string> notes;
  bool operator==(const KirbyDiagram&) const = default;
};

std::string to_string(const CopyLabel& c);  // a_2 or a_2'
// Union of the arcs, e.g. a_1∪-a_2.
std::string curve_union(const TwoHandle& h);

// Natural order on ids: common prefix, then trailing number.
bool id_less(const std::string& a, const std::string& b);

// Sorts every list by id. Notes keep their order.
KirbyDiagram normalize(KirbyDiagram d);

// Throws dangling_reference for unresolved traversals and invalid_argument
// for duplicate ids, equal anchors, empty words, or text fields containing
// tabs or newlines.
void validate(const KirbyDiagram& d);

// How many times the 2-handle passes through the dotted handle.
int traversals(const TwoHandle& h, const std::string& dotted);

}  // namespace csurg::kirby
