#include "csurg/kirby/construct.hpp"

#include "csurg/error.hpp"

namespace csurg::kirby {

namespace {

struct Sum {
  int left = 1;
  bool left_pushoff = false;
  int right = 2;
};

// Weinstein handles of the cobordism of one Liouville sum per entry of
// `sums`: a 1-handle per page 0-handle, a 2-handle per page 1-handle.
void add_sums(KirbyDiagram& d, const surgery::PageSpec& page, const std::vector<Sum>& sums) {
  std::vector<std::string> zeros, ones;
  for (const auto& c : page.cores) (c.index == 0 ? zeros : ones).push_back(c.label);
  int next_dotted = 1, next_two = 1;
  for (const Sum& s : sums) {
    std::string through;
    for (const auto& z : zeros) {
      DottedHandle h{"D" + std::to_string(next_dotted++),
                     {{z, s.left, s.left_pushoff}, {z, s.right, false}}};
      if (through.empty()) through = h.id;
      d.dotted.push_back(std::move(h));
    }
    for (const auto& c : ones)
      d.two_handles.push_back({"H" + std::to_string(next_two++),
                               {Arc{{c, s.left, s.left_pushoff}, 1}, Traverse{through},
                                Arc{{c, s.right, false}, -1}, Traverse{through}},
                               "-1"});
  }
}

void require_surface_page(const surgery::PageSpec& page) {
  surgery::validate_page(page);
  if (page.half_dim != 1)
    throw Error(ErrorCode::unsupported_dimension, "Kirby diagrams need a surface page");
  if (page.cores.empty())
    throw Error(ErrorCode::invalid_argument, "page " + page.name + " has no core-curve labels");
}

std::string surgery_coefficient(int c) {
  if (c == 1) return "+1";
  if (c == -1) return "-1";
  return "1/" + std::to_string(c);
}

}  // namespace

KirbyDiagram branched_cover_diagram(const surgery::PageSpec& page,
                                    const std::vector<BaseComponent>& base, int q) {
  if (q < 1) throw Error(ErrorCode::invalid_argument, "branched cover needs q >= 1");
  require_surface_page(page);
  KirbyDiagram d;
  for (int j = 1; j <= q; ++j)
    for (const auto& b : base)
      d.base.push_back({b.id + "_" + std::to_string(j), b.manifold, b.description, b.coefficient});
  std::vector<Sum> sums;
  for (int j = 1; j < q; ++j) sums.push_back({j, j >= 2, j + 1});
  add_sums(d, page, sums);
  if (q > 1) {
    d.notes.push_back("Stein cobordism from " + std::to_string(q) + " copies of the base to the " +
                      std::to_string(q) + "-fold cyclic cover branched along the boundary of " +
                      page.name);
    d.notes.push_back("Liouville sums along Sigma_j' ~ Sigma_(j+1); ' marks a Reeb push-off");
  }
  d = normalize(std::move(d));
  validate(d);
  return d;
}

surgery::PageSpec genus_one_page() {
  surgery::PageSpec p;
  p.name = "Sigma";
  p.half_dim = 1;
  p.handles = {{0, 1}, {1, 2}};
  p.stein = true;
  p.spheres = {"a", "b"};
  p.cores = {{0, "p"}, {1, "a"}, {1, "b"}};
  return p;
}

std::vector<BaseComponent> lens_space_base() {
  return {{"U", "L(2,1)", "tb=-1 unknot", "-1"}};
}

KirbyDiagram surgery_cobordism_diagram(int k) {
  if (k == 0) throw Error(ErrorCode::invalid_argument, "contact surgery coefficient 1/0");
  KirbyDiagram d;
  d.base.push_back({"B_1", "S^3", "standard Legendrian unknot L", "none"});
  if (k == -1) {
    d.two_handles.push_back({"H1", {Arc{{"L", 1, false}, 1}}, "-1"});
    d.notes.push_back("contact (-1)-surgery on L: a single Weinstein 2-handle");
  } else {
    // Liouville sum of S^3 with M_{1,-k}, itself 1/(k+1) surgery on the unknot.
    d.base.push_back({"B_2", "S^3", "standard Legendrian unknot", surgery_coefficient(k + 1)});
    add_sums(d, surgery::cotangent_disk_page(1), {{1, false, 2}});
    d.notes.push_back("contact (1/" + std::to_string(k) +
                      ")-surgery on L as a Liouville sum with M_{1," + std::to_string(-k) + "}");
    if (k == 1)
      d.notes.push_back("convex end: contact (+1)-surgery on a right-handed Legendrian trefoil");
  }
  d = normalize(std::move(d));
  validate(d);
  return d;
}

}  // namespace csurg::kirby
