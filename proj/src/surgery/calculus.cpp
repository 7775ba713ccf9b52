#include "csurg/surgery/calculus.hpp"

#include <algorithm>
#include <numeric>

#include "csurg/error.hpp"

namespace csurg::surgery {

namespace {

std::string sphere_identity(int n) { return "(S^" + std::to_string(2 * n + 1) + ", xi_std)"; }

std::string catalog_identity(int n, int k) {
  const std::string sn = std::to_string(n);
  switch (k) {
    case 1: return sphere_identity(n);
    case 0: return "boundary of D^2 x D*S^" + sn;
    case 2: return "(S*S^" + std::to_string(n + 1) + ", xi_can)";
    default: return "M_{" + sn + "," + std::to_string(k) + "}";
  }
}

FillabilityFlags catalog_flags(int n, int k) {
  FillabilityFlags f;
  if (k == 1) return all_flags(Tri::yes);
  if (k == -1) {
    f = all_flags(Tri::no);
    // Weak fillability is only excluded in dimension 3 (overtwisted).
    if (n > 1) f.weakly = Tri::unknown;
    return close_flags(f);
  }
  if (k >= 0) f.stein = Tri::yes;
  return close_flags(f);
}

// Combines two sources of information; a yes/no clash is a logic error.
FillabilityFlags merge_flags(const FillabilityFlags& a, const FillabilityFlags& b) {
  auto pick = [](Tri x, Tri y, const char* what) {
    if (x == Tri::unknown) return y;
    if (y == Tri::unknown || x == y) return x;
    throw Error(ErrorCode::invalid_argument, std::string("contradictory ") + what + " flags");
  };
  FillabilityFlags out;
  out.weakly = pick(a.weakly, b.weakly, "weak");
  out.symplectically = pick(a.symplectically, b.symplectically, "symplectic");
  out.exactly = pick(a.exactly, b.exactly, "exact");
  out.stein = pick(a.stein, b.stein, "stein");
  return close_flags(out);
}

// Power of the zero-section twist when ob is (D*S^n, L^j).
std::optional<int> cotangent_power(const OpenBook& ob) {
  if (!(ob.page == cotangent_disk_page(ob.page.half_dim))) return std::nullopt;
  const MonodromyWord w = reduce_word(ob.word);
  if (w.empty()) return 0;
  if (w.letters.size() == 1 && w.letters[0].label == "L") return w.letters[0].exponent;
  return std::nullopt;
}

bool is_disk_identity(const OpenBook& ob) {
  return ob.page == disk_page(ob.page.half_dim) && reduce_word(ob.word).empty();
}

// Open-book descriptor with everything that can be read off the word.
ManifoldDescriptor describe(const OpenBook& ob, const FillabilityFlags& flags,
                            std::vector<HistoryEntry> history) {
  validate_open_book(ob);
  ManifoldDescriptor m;
  const int n = ob.page.half_dim;
  m.dim = 2 * n + 1;
  m.presentation = Presentation::open_book;
  m.open_book = OpenBook{ob.page, reduce_word(ob.word)};
  m.flags = merge_flags(flags, openbook_flags(ob));
  for (const auto& s : ob.page.spheres) m.legendrians.push_back({s, false});
  if (const auto j = cotangent_power(ob)) {
    m.identity = catalog_identity(n, *j);
    m.flags = merge_flags(m.flags, catalog_flags(n, *j));
    if (*j == 1) m.legendrians = {{"L", true}};
  } else if (is_disk_identity(ob)) {
    m.identity = sphere_identity(n);
    m.flags = merge_flags(m.flags, all_flags(Tri::yes));
  }
  m.history = std::move(history);
  return m;
}

void require_sphere(const ManifoldDescriptor& m, const std::string& sphere) {
  const bool found = std::any_of(m.legendrians.begin(), m.legendrians.end(),
                                 [&](const LegendrianSphere& l) { return l.label == sphere; });
  if (!found) throw Error(ErrorCode::unknown_label, "no Legendrian sphere labeled " + sphere);
}

bool is_standard(const ManifoldDescriptor& m, const std::string& sphere) {
  return std::any_of(m.legendrians.begin(), m.legendrians.end(),
                     [&](const LegendrianSphere& l) { return l.label == sphere && l.standard; });
}

}  // namespace

FillabilityFlags openbook_flags(const OpenBook& ob) {
  FillabilityFlags f;
  const MonodromyWord w = reduce_word(ob.word);
  if (w.empty()) {
    f.exactly = Tri::yes;
    if (ob.page.stein) f.stein = Tri::yes;
  } else if (ob.page.stein &&
             std::all_of(w.letters.begin(), w.letters.end(),
                         [](const Letter& l) { return l.exponent > 0; })) {
    f.stein = Tri::yes;
  }
  return close_flags(f);
}

ManifoldDescriptor from_open_book(const OpenBook& ob) {
  return describe(ob, FillabilityFlags{}, {{"open_book", {ob.page.name, to_string(ob.word)}}});
}

ManifoldDescriptor catalog_M_nk(int n, int k) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "catalog M_{n,k} needs n >= 1");
  OpenBook ob{cotangent_disk_page(n), power(MonodromyWord{{{"L", 1}}}, k)};
  return describe(ob, catalog_flags(n, k),
                  {{"catalog", {"M_{" + std::to_string(n) + "," + std::to_string(k) + "}"}}});
}

ManifoldDescriptor liouville_sum_openbooks(const ManifoldDescriptor& m1,
                                           const ManifoldDescriptor& m2,
                                           std::optional<Tri> weak_h2_ok) {
  if (!m1.open_book || !m2.open_book)
    throw Error(ErrorCode::invalid_argument, "Liouville sum of open books needs open-book inputs");
  const PageSpec& page = m1.open_book->page;
  if (!(page == m2.open_book->page))
    throw Error(ErrorCode::page_mismatch,
                "pages " + page.name + " and " + m2.open_book->page.name + " differ");
  const Tri h2 = weak_h2_ok.value_or(h2_vanishes(page));
  const FillabilityFlags f =
      fillability_propagate(m1.flags, m2.flags, page.stein, m1.dim, h2);
  auto history = m1.history;
  history.push_back({"liouville_sum", {page.name, to_string(m2.open_book->word)}});
  return describe({page, concat(m1.open_book->word, m2.open_book->word)}, f, std::move(history));
}

ManifoldDescriptor liouville_sum_openbooks(const OpenBook& ob1, const OpenBook& ob2) {
  return liouville_sum_openbooks(from_open_book(ob1), from_open_book(ob2));
}

ManifoldDescriptor contact_surgery(const ManifoldDescriptor& m, const std::string& sphere, int k,
                                   const std::string& parameter) {
  if (k == 0) throw Error(ErrorCode::invalid_argument, "contact surgery coefficient 1/0");
  require_sphere(m, sphere);
  const int n = (m.dim - 1) / 2;
  const ManifoldDescriptor model = catalog_M_nk(n, -k);
  const FillabilityFlags f = fillability_propagate(m.flags, model.flags, true, m.dim,
                                                   h2_vanishes(cotangent_disk_page(n)));
  auto history = m.history;
  history.push_back(
      {"contact_surgery", {sphere, std::to_string(k), parameter, model.identity}});

  if (m.open_book) {
    MonodromyWord tail{{{sphere, -k}}};
    ManifoldDescriptor out = describe({m.open_book->page, concat(m.open_book->word, tail)}, f,
                                      std::move(history));
    out.hypersurfaces = m.hypersurfaces;
    return out;
  }

  ManifoldDescriptor out = m;
  out.presentation = Presentation::glued;
  out.identity.clear();
  out.fibration.reset();
  out.history = std::move(history);
  out.flags = f;
  if (k == 2 && is_standard(m, sphere)) {
    // (1/2)-surgery on a standard sphere is algebraically overtwisted.
    FillabilityFlags no = all_flags(Tri::no);
    if (n > 1) no.weakly = Tri::unknown;
    out.flags = close_flags(no);
  } else if (k == 1 && is_standard(m, sphere)) {
    out.identity = m.identity.empty() ? "" : m.identity + " # " + catalog_identity(n, 0);
  }
  return out;
}

std::optional<int> surgery_compose(const std::vector<int>& ks) {
  if (ks.empty()) throw Error(ErrorCode::invalid_argument, "surgery_compose needs a coefficient");
  if (std::find(ks.begin(), ks.end(), 0) != ks.end())
    throw Error(ErrorCode::invalid_argument, "contact surgery coefficient 1/0");
  const int sum = std::accumulate(ks.begin(), ks.end(), 0);
  if (sum == 0) return std::nullopt;
  return sum;
}

ManifoldDescriptor branched_cover(const ManifoldDescriptor& m, const std::string& hypersurface,
                                  int q) {
  if (q < 1) throw Error(ErrorCode::invalid_argument, "branched cover needs q >= 1");
  const PageSpec* sigma = nullptr;
  if (m.open_book && (hypersurface == "page" || hypersurface == m.open_book->page.name))
    sigma = &m.open_book->page;
  for (const auto& h : m.hypersurfaces)
    if (!sigma && h.name == hypersurface) sigma = &h;
  if (!sigma)
    throw Error(ErrorCode::unknown_label, "no Liouville hypersurface labeled " + hypersurface);
  if (q == 1) return m;

  // q copies of m joined by q - 1 Liouville sums along the hypersurface.
  FillabilityFlags f = m.flags;
  for (int i = 1; i < q; ++i)
    f = fillability_propagate(f, m.flags, sigma->stein, m.dim, Tri::yes);
  auto history = m.history;
  history.push_back({"branched_cover", {hypersurface, std::to_string(q)}});

  if (m.open_book && sigma == &m.open_book->page) {
    ManifoldDescriptor out =
        describe({*sigma, power(m.open_book->word, q)}, f, std::move(history));
    out.hypersurfaces = m.hypersurfaces;
    return out;
  }
  ManifoldDescriptor out = m;
  out.presentation = Presentation::glued;
  out.identity.clear();
  out.open_book.reset();
  out.fibration.reset();
  out.flags = f;
  out.history = std::move(history);
  return out;
}

ManifoldDescriptor fibered_manifold(const PageSpec& page, const MonodromyWord& phi,
                                    const MonodromyWord& psi, Tri weak_condition) {
  validate_open_book({page, phi});
  validate_open_book({page, psi});
  const ManifoldDescriptor base = describe({page, concat(phi, psi)}, {}, {});
  // Self Liouville sum of two pages of the same open book.
  const FillabilityFlags f = fillability_propagate(
      base.flags, all_flags(Tri::yes), page.stein, base.dim,
      base.dim == 3 ? Tri::yes : weak_condition);

  ManifoldDescriptor out;
  out.dim = base.dim;
  out.presentation = Presentation::glued;
  out.fibration = Fibration{page, reduce_word(phi), reduce_word(psi)};
  out.flags = f;
  if (reduce_word(phi).empty() && reduce_word(psi).empty()) {
    out.identity = "boundary of " + page.name + " x D*S^1";
    out.flags = merge_flags(out.flags, openbook_flags({page, {}}));
  }
  for (const auto& s : page.spheres) out.legendrians.push_back({s, false});
  out.history = {{"open_book", {page.name, to_string(concat(phi, psi))}},
                 {"fibered", {to_string(reduce_word(phi)), to_string(reduce_word(psi))}}};
  return out;
}

}  // namespace csurg::surgery
