#include "csurg/surgery/flags.hpp"

#include <array>

#include "csurg/error.hpp"

namespace csurg::surgery {

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::no: return "false";
    case Tri::unknown: return "unknown";
    case Tri::yes: return "true";
  }
  return "unknown";
}

Tri parse_tri(std::string_view s) {
  if (s == "true" || s == "yes") return Tri::yes;
  if (s == "false" || s == "no") return Tri::no;
  if (s == "unknown" || s == "?") return Tri::unknown;
  throw Error(ErrorCode::malformed_text, "not a tri-state value: " + std::string(s));
}

FillabilityFlags all_flags(Tri t) { return {t, t, t, t}; }

namespace {

// Weakest first.
std::array<Tri*, 4> chain(FillabilityFlags& f) {
  return {&f.weakly, &f.symplectically, &f.exactly, &f.stein};
}

constexpr std::array<const char*, 4> kNames = {"weakly", "symplectically", "exactly", "stein"};

}  // namespace

FillabilityFlags close_flags(FillabilityFlags f) {
  auto c = chain(f);
  for (int i = 3; i > 0; --i)
    if (*c[i] == Tri::yes) {
      if (*c[i - 1] == Tri::no)
        throw Error(ErrorCode::invalid_argument, std::string("inconsistent flags: ") + kNames[i] +
                                                     " fillable but not " + kNames[i - 1]);
      *c[i - 1] = Tri::yes;
    }
  for (int i = 0; i < 3; ++i)
    if (*c[i] == Tri::no) {
      if (*c[i + 1] == Tri::yes)
        throw Error(ErrorCode::invalid_argument, std::string("inconsistent flags: ") +
                                                     kNames[i + 1] + " fillable but not " +
                                                     kNames[i]);
      *c[i + 1] = Tri::no;
    }
  return f;
}

bool respects_closure(const FillabilityFlags& f) {
  FillabilityFlags g = f;
  auto c = chain(g);
  for (int i = 0; i < 3; ++i) {
    if (*c[i + 1] == Tri::yes && *c[i] != Tri::yes) return false;
    if (*c[i] == Tri::no && *c[i + 1] != Tri::no) return false;
  }
  return true;
}

FillabilityFlags fillability_propagate(const FillabilityFlags& f1, const FillabilityFlags& f2,
                                       bool page_stein, int dim, Tri weak_h2_ok) {
  auto both = [](Tri a, Tri b) { return a == Tri::yes && b == Tri::yes; };
  auto tri = [](bool b) { return b ? Tri::yes : Tri::unknown; };
  FillabilityFlags out;
  out.symplectically = tri(both(f1.symplectically, f2.symplectically));
  out.exactly = tri(both(f1.exactly, f2.exactly));
  out.stein = tri(both(f1.stein, f2.stein) && (page_stein || dim == 3));
  out.weakly = tri(both(f1.weakly, f2.weakly) && (dim == 3 || weak_h2_ok == Tri::yes));
  return close_flags(out);
}

std::string to_string(const FillabilityFlags& f) {
  std::string out;
  out += "weakly=" + std::string(to_string(f.weakly));
  out += " symplectically=" + std::string(to_string(f.symplectically));
  out += " exactly=" + std::string(to_string(f.exactly));
  out += " stein=" + std::string(to_string(f.stein));
  return out;
}

}  // namespace csurg::surgery
