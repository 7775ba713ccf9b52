#include "csurg/cobordism/handles.hpp"

#include "csurg/error.hpp"

namespace csurg::cobordism {

void validate_cobordism(const CobordismSpec& c) {
  if (c.handles.empty()) return;
  const int dim = c.handles.front().ambient_dim;
  if (dim < 2 || dim % 2 != 0)
    throw Error(ErrorCode::invalid_argument, "handle ambient dimension must be even and positive");
  const int n = dim / 2 - 1;
  for (const Handle& h : c.handles) {
    if (h.ambient_dim != dim)
      throw Error(ErrorCode::invalid_argument, "handles of mixed ambient dimension");
    if (h.index < 0 || h.index > dim)
      throw Error(ErrorCode::invalid_argument,
                  "handle index " + std::to_string(h.index) + " outside [0, " +
                      std::to_string(dim) + "]");
    if (c.exactness == Exactness::stein_candidate && h.index > n + 1)
      throw Error(ErrorCode::invalid_argument,
                  "stein candidate with a handle of index " + std::to_string(h.index));
  }
}

std::vector<Handle> sum_cobordism(const surgery::PageSpec& page, int ambient_half_dim) {
  if (page.handles.empty())
    throw Error(ErrorCode::invalid_argument, "page " + page.name + " has no handle decomposition");
  if (ambient_half_dim != page.half_dim + 1)
    throw Error(ErrorCode::invalid_argument, "ambient half dimension must be page half dimension + 1");
  surgery::validate_page(page);
  std::vector<Handle> out;
  for (const auto& [k, count] : page.handles)
    for (int i = 0; i < count; ++i)
      out.push_back({2 * ambient_half_dim, k + 1,
                     page.name + ":" + std::to_string(k) + "-handle#" + std::to_string(i + 1)});
  return out;
}

CobordismSpec sum_cobordism_spec(const surgery::PageSpec& page, std::vector<std::string> negative,
                                 std::string positive) {
  CobordismSpec c;
  c.negative_boundary = std::move(negative);
  c.positive_boundary = std::move(positive);
  c.handles = sum_cobordism(page, page.half_dim + 1);
  c.exactness = page.stein ? Exactness::stein_candidate : Exactness::exact;
  validate_cobordism(c);
  return c;
}

int euler_characteristic(int base_chi, const std::vector<Handle>& handles) {
  int chi = base_chi;
  for (const Handle& h : handles) chi += h.index % 2 == 0 ? 1 : -1;
  return chi;
}

std::vector<Handle> handle_block(int ambient_dim, int index, int count,
                                 const std::string& provenance) {
  if (count < 0) throw Error(ErrorCode::invalid_argument, "negative handle count");
  return std::vector<Handle>(static_cast<std::size_t>(count), Handle{ambient_dim, index, provenance});
}

}  // namespace csurg::cobordism
