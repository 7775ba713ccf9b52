#pragma once

#include <string>
#include <string_view>

namespace csurg::surgery {

enum class Tri { no, unknown, yes };

std::string_view to_string(Tri t);
Tri parse_tri(std::string_view s);

// stein => exactly => symplectically => weakly.
struct FillabilityFlags {
  Tri weakly = Tri::unknown;
  Tri symplectically = Tri::unknown;
  Tri exactly = Tri::unknown;
  Tri stein = Tri::unknown;

  bool operator==(const FillabilityFlags&) const = default;
};

FillabilityFlags all_flags(Tri t);

// Pushes yes up the chain toward weakly and no down toward stein. Throws
// invalid_argument when a yes sits above a no.
FillabilityFlags close_flags(FillabilityFlags f);
bool respects_closure(const FillabilityFlags& f);

// Flags of the Liouville connect sum of two manifolds carrying f1 and f2
// along a common page:
//   symplectically, exactly: both yes
//   stein: both yes and (page_stein or dim == 3)
//   weakly: both yes and (dim == 3 or weak_h2_ok == yes)
// Every other output is unknown; no output is ever set to no.
FillabilityFlags fillability_propagate(const FillabilityFlags& f1, const FillabilityFlags& f2,
                                       bool page_stein, int dim, Tri weak_h2_ok);

std::string to_string(const FillabilityFlags& f);

}  // namespace csurg::surgery
