#pragma once

#include <vector>

#include "csurg/kirby/diagram.hpp"
#include "csurg/surgery/descriptor.hpp"

namespace csurg::kirby {

// Cobordism from q copies of the base to the q-fold cyclic cover branched
// along the boundary of a page-type surface. Copies are summed along a chain
// Sigma_1 ~ Sigma_2, Sigma_2' ~ Sigma_3, ...; sum j contributes one dotted
// handle per page 0-handle and one 2-handle c_j ∪ -c_{j+1} per page 1-handle.
// Throws unsupported_dimension unless the page is a surface, and
// invalid_argument when the page lacks core labels.
KirbyDiagram branched_cover_diagram(const surgery::PageSpec& page,
                                    const std::vector<BaseComponent>& base, int q);

// Genus-1 page with one boundary component: 0-handle p, 1-handles a and b.
surgery::PageSpec genus_one_page();
// L(2,1) as -1 surgery on the tb=-1 unknot.
std::vector<BaseComponent> lens_space_base();

// Cobordism of contact (1/k)-surgery on the standard Legendrian unknot in S^3
// as a Liouville sum with M_{1,-k}. Throws invalid_argument for k = 0.
KirbyDiagram surgery_cobordism_diagram(int k);

}  // namespace csurg::kirby
