#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csurg/surgery/flags.hpp"
#include "csurg/surgery/word.hpp"

namespace csurg::surgery {

// A page handle with a label, e.g. the 0-handle p or a 1-handle core a.
struct CoreLabel {
  int index = 0;
  std::string label;
  bool operator==(const CoreLabel&) const = default;
};

// Liouville page of dimension 2n, described by a handle decomposition.
struct PageSpec {
  std::string name;
  int half_dim = 1;
  std::vector<std::pair<int, int>> handles;  // (index, count)
  bool stein = false;
  std::vector<std::string> spheres;  // Lagrangian spheres usable as twist supports
  std::vector<CoreLabel> cores;      // optional labels, one per handle

  int count(int index) const;
  bool operator==(const PageSpec&) const = default;
};

// Throws invalid_argument on: index outside [0, n], nonpositive count, no
// 0-handle, core labels disagreeing with the handle counts.
void validate_page(const PageSpec& page);

// H^2(page; R) = 0 is guaranteed when there are no index-2 handles.
Tri h2_vanishes(const PageSpec& page);

PageSpec disk_page(int n);            // D^{2n}: one 0-handle
PageSpec cotangent_disk_page(int n);  // D*S^n: 0-handle p, n-handle c, sphere L

struct OpenBook {
  PageSpec page;
  MonodromyWord word;
  bool operator==(const OpenBook&) const = default;
};

// Throws unknown_label when a letter is not a sphere of the page.
void validate_open_book(const OpenBook& ob);

struct LegendrianSphere {
  std::string label;
  bool standard = false;  // standard Legendrian unknot
  bool operator==(const LegendrianSphere&) const = default;
};

struct HistoryEntry {
  std::string op;
  std::vector<std::string> args;
  bool operator==(const HistoryEntry&) const = default;
};

struct Fibration {
  PageSpec page;
  MonodromyWord phi;
  MonodromyWord psi;
  bool operator==(const Fibration&) const = default;
};

enum class Presentation { open_book, glued, catalog };

struct ManifoldDescriptor {
  int dim = 3;
  Presentation presentation = Presentation::catalog;
  std::optional<OpenBook> open_book;
  std::optional<Fibration> fibration;
  std::string identity;  // catalog identity when known
  FillabilityFlags flags;
  std::vector<LegendrianSphere> legendrians;
  std::vector<PageSpec> hypersurfaces;  // extra Liouville hypersurfaces
  std::vector<HistoryEntry> history;

  bool operator==(const ManifoldDescriptor&) const = default;
};

// Both are open books on the same page whose reduced words agree.
bool word_equal(const ManifoldDescriptor& a, const ManifoldDescriptor& b);

}  // namespace csurg::surgery
