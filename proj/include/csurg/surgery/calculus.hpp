#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csurg/surgery/descriptor.hpp"

namespace csurg::surgery {

// Fillability facts known for an open book from its word alone.
FillabilityFlags openbook_flags(const OpenBook& ob);

ManifoldDescriptor from_open_book(const OpenBook& ob);

// M_{n,k}: the open book (D*S^n, tau^k).
ManifoldDescriptor catalog_M_nk(int n, int k);

// (page, reduce(w1 . w2)). Throws page_mismatch. weak_h2_ok defaults to the
// handle-based H^2 test on the page.
ManifoldDescriptor liouville_sum_openbooks(const ManifoldDescriptor& m1,
                                           const ManifoldDescriptor& m2,
                                           std::optional<Tri> weak_h2_ok = std::nullopt);
ManifoldDescriptor liouville_sum_openbooks(const OpenBook& ob1, const OpenBook& ob2);

// Contact (1/k)-surgery: Liouville sum with M_{n,-k} along the ribbon of the
// labeled sphere. On an open book whose page carries the sphere, appends
// sphere^{-k} to the word. Throws invalid_argument for k = 0 and
// unknown_label for a missing sphere.
ManifoldDescriptor contact_surgery(const ManifoldDescriptor& m, const std::string& sphere, int k,
                                   const std::string& parameter);

// Surgeries on iterated push-offs: 1/p then 1/q equals 1/(p+q). nullopt means
// no surgery. Throws invalid_argument on an empty list or a zero entry.
std::optional<int> surgery_compose(const std::vector<int>& ks);

// q-fold cyclic cover branched over the boundary of a Liouville hypersurface:
// "page" (or the page's name) for open books, otherwise a hypersurface of m.
ManifoldDescriptor branched_cover(const ManifoldDescriptor& m, const std::string& hypersurface,
                                  int q);

// M_(Sigma, Phi, Psi). weak_condition is the exactness hypothesis needed for
// weak fillings in dimension > 3.
ManifoldDescriptor fibered_manifold(const PageSpec& page, const MonodromyWord& phi,
                                    const MonodromyWord& psi, Tri weak_condition = Tri::unknown);

}  // namespace csurg::surgery
