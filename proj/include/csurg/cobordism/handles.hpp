#pragma once

#include <string>
#include <vector>

#include "csurg/surgery/descriptor.hpp"

namespace csurg::cobordism {

// Weinstein k-handle in a (2n+2)-dimensional cobordism.
struct Handle {
  int ambient_dim = 4;
  int index = 0;
  std::string provenance;
  bool operator==(const Handle&) const = default;
};

enum class Exactness { exact, stein_candidate, weak };

struct CobordismSpec {
  std::vector<std::string> negative_boundary;
  std::string positive_boundary;
  std::vector<Handle> handles;
  Exactness exactness = Exactness::exact;
  bool operator==(const CobordismSpec&) const = default;
};

// Throws invalid_argument on an index outside [0, ambient_dim], mixed
// ambient dimensions, or a stein_candidate with an index above n + 1.
void validate_cobordism(const CobordismSpec& c);

// Each page k-handle becomes one ambient (k+1)-handle of dimension
// 2 * ambient_half_dim. Throws invalid_argument when the page has no handle
// list or ambient_half_dim != page.half_dim + 1.
std::vector<Handle> sum_cobordism(const surgery::PageSpec& page, int ambient_half_dim);

// Cobordism of a Liouville connect sum along the page; stein_candidate iff the
// page is Stein.
CobordismSpec sum_cobordism_spec(const surgery::PageSpec& page, std::vector<std::string> negative,
                                 std::string positive);

// base_chi + sum over handles of (-1)^index.
int euler_characteristic(int base_chi, const std::vector<Handle>& handles);

// count handles of the given index and ambient dimension.
std::vector<Handle> handle_block(int ambient_dim, int index, int count, const std::string& provenance);

}  // namespace csurg::cobordism
