#include "csurg/surgery/descriptor.hpp"

#include <algorithm>

#include "csurg/error.hpp"

namespace csurg::surgery {

int PageSpec::count(int index) const {
  int c = 0;
  for (const auto& [k, m] : handles)
    if (k == index) c += m;
  return c;
}

void validate_page(const PageSpec& page) {
  if (page.half_dim < 1) throw Error(ErrorCode::invalid_argument, "page needs half dimension >= 1");
  for (const auto& [k, m] : page.handles) {
    if (k < 0 || k > page.half_dim)
      throw Error(ErrorCode::invalid_argument,
                  "page " + page.name + " has a handle of index " + std::to_string(k) +
                      " outside [0, " + std::to_string(page.half_dim) + "]");
    if (m <= 0)
      throw Error(ErrorCode::invalid_argument, "page " + page.name + " has a nonpositive count");
  }
  if (page.count(0) < 1)
    throw Error(ErrorCode::invalid_argument, "page " + page.name + " has no 0-handle");
  if (!page.cores.empty()) {
    for (int k = 0; k <= page.half_dim; ++k) {
      const auto labeled = std::count_if(page.cores.begin(), page.cores.end(),
                                         [k](const CoreLabel& c) { return c.index == k; });
      if (labeled != page.count(k))
        throw Error(ErrorCode::invalid_argument, "page " + page.name + " labels " +
                                                     std::to_string(labeled) + " handles of index " +
                                                     std::to_string(k) + " but has " +
                                                     std::to_string(page.count(k)));
    }
    for (std::size_t i = 0; i < page.cores.size(); ++i)
      for (std::size_t j = i + 1; j < page.cores.size(); ++j)
        if (page.cores[i].label == page.cores[j].label)
          throw Error(ErrorCode::invalid_argument, "duplicate core label " + page.cores[i].label);
  }
}

Tri h2_vanishes(const PageSpec& page) {
  return page.count(2) == 0 ? Tri::yes : Tri::unknown;
}

PageSpec disk_page(int n) {
  PageSpec p;
  p.name = "D^" + std::to_string(2 * n);
  p.half_dim = n;
  p.handles = {{0, 1}};
  p.stein = true;
  p.cores = {{0, "p"}};
  return p;
}

PageSpec cotangent_disk_page(int n) {
  PageSpec p;
  p.name = "D*S^" + std::to_string(n);
  p.half_dim = n;
  p.handles = {{0, 1}, {n, 1}};
  p.stein = true;
  p.spheres = {"L"};
  p.cores = {{0, "p"}, {n, "c"}};
  return p;
}

void validate_open_book(const OpenBook& ob) {
  validate_page(ob.page);
  for (const Letter& l : ob.word.letters)
    if (std::find(ob.page.spheres.begin(), ob.page.spheres.end(), l.label) == ob.page.spheres.end())
      throw Error(ErrorCode::unknown_label,
                  "word uses " + l.label + ", which is not a sphere of page " + ob.page.name);
}

bool word_equal(const ManifoldDescriptor& a, const ManifoldDescriptor& b) {
  if (!a.open_book || !b.open_book) return false;
  return a.open_book->page == b.open_book->page &&
         reduce_word(a.open_book->word) == reduce_word(b.open_book->word);
}

}  // namespace csurg::surgery
