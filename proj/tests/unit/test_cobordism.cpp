#include <algorithm>
#include <random>

#include "csurg/cobordism/homology.hpp"
#include "csurg/cobordism/tables.hpp"
#include "csurg/cobordism/text.hpp"
#include "csurg/error.hpp"
#include "doctest.h"

using namespace csurg;
using namespace csurg::cobordism;
using csurg::surgery::PageSpec;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::invalid_argument;
}

PageSpec page(std::string name, int n, std::vector<std::pair<int, int>> handles, bool stein) {
  PageSpec p;
  p.name = std::move(name);
  p.half_dim = n;
  p.handles = std::move(handles);
  p.stein = stein;
  return p;
}

int count_index(const std::vector<Handle>& hs, int k) {
  return static_cast<int>(std::count_if(hs.begin(), hs.end(), [k](const Handle& h) { return h.index == k; }));
}

// Free profile with Z in the listed degrees.
HomologyProfile free_profile(int top, std::vector<int> degrees) {
  std::vector<Group> g(static_cast<std::size_t>(top + 1));
  for (int d : degrees) g[static_cast<std::size_t>(d)].rank += 1;
  return {g};
}

}  // namespace

TEST_CASE("sum cobordism examples") {
  const auto annulus = sum_cobordism(page("D*S^1", 1, {{0, 1}, {1, 1}}, true), 2);
  REQUIRE(annulus.size() == 2);
  CHECK(count_index(annulus, 1) == 1);
  CHECK(count_index(annulus, 2) == 1);
  CHECK(annulus[0].ambient_dim == 4);
  for (int n = 1; n <= 4; ++n) {
    const auto disk = sum_cobordism(page("D", n, {{0, 1}}, true), n + 1);
    REQUIRE(disk.size() == 1);
    CHECK(disk[0].index == 1);
    CHECK(disk[0].ambient_dim == 2 * n + 2);
  }
  const auto torus = sum_cobordism(page("T0", 1, {{0, 1}, {1, 2}}, true), 2);
  CHECK(count_index(torus, 1) == 1);
  CHECK(count_index(torus, 2) == 2);
  CHECK(code_of([] { sum_cobordism(page("x", 1, {}, true), 2); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { sum_cobordism(page("x", 1, {{0, 1}}, true), 3); }) ==
        ErrorCode::invalid_argument);
  const auto spec = sum_cobordism_spec(page("D*S^1", 1, {{0, 1}, {1, 1}}, true), {"M"}, "M#");
  CHECK(spec.exactness == Exactness::stein_candidate);
  CHECK(sum_cobordism_spec(page("P", 1, {{0, 1}}, false), {"M"}, "M#").exactness ==
        Exactness::exact);
}

TEST_CASE("sum cobordism shifts every index by one") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> hs = {{0, 1 + static_cast<int>(rng() % 2)}};
    for (int k = 1; k <= n; ++k)
      if (rng() % 2) hs.push_back({k, 1 + static_cast<int>(rng() % 3)});
    const PageSpec p = page("P", n, hs, true);
    const auto out = sum_cobordism(p, n + 1);
    int total = 0;
    for (const auto& [k, c] : hs) {
      total += c;
      CHECK(count_index(out, k + 1) == c);
    }
    CHECK(static_cast<int>(out.size()) == total);
    CHECK(stein_homology_check(out, n, sphere_profile(2 * n + 1)).passed);
  }
}

TEST_CASE("Euler characteristic") {
  CHECK(euler_characteristic(1, {}) == 1);
  CHECK(euler_characteristic(1, handle_block(4, 2, 1, "h")) == 2);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Handle> a, b;
    for (int i = 0; i < 6; ++i) a.push_back({8, static_cast<int>(rng() % 9), "a"});
    for (int i = 0; i < 4; ++i) b.push_back({8, static_cast<int>(rng() % 9), "b"});
    int oracle = 0;
    for (const auto& h : a) oracle += (h.index % 2 == 0) ? 1 : -1;
    CHECK(euler_characteristic(0, a) == oracle);
    auto ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CHECK(euler_characteristic(1, ab) == euler_characteristic(1, a) + euler_characteristic(0, b));
    std::shuffle(ab.begin(), ab.end(), rng);
    CHECK(euler_characteristic(1, ab) == euler_characteristic(1, a) + euler_characteristic(0, b));
  }
}

TEST_CASE("five-sphere handle count") {
  for (int m = -6; m < 0; ++m) {
    const int chi = five_sphere_euler(2, m);
    CHECK(chi == euler_characteristic(1, handle_block(6, 3, -2 * m, "surgery")));
    CHECK(chi != 1);
    CHECK(chi == 1 + 2 * m);
    CHECK(five_sphere_euler_printed(m) == 1 - 2 * m);
  }
  CHECK(code_of([] { five_sphere_euler(2, 1); }) == ErrorCode::invalid_argument);
}

TEST_CASE("Stein homology check") {
  CHECK(stein_homology_check({}, 2, sphere_profile(5)).passed);
  const auto bad = stein_homology_check(handle_block(6, 4, 1, "h"), 2, sphere_profile(5));
  CHECK_FALSE(bad.passed);
  CHECK(bad.certificate_degree == 4);
  CHECK(bad.predicted.at(4).rank == 1);
  const auto check = stein_homology_check(handle_block(8, 3, 2, "h"), 3, sphere_profile(7));
  CHECK(check.passed);
  CHECK(check.predicted.at(7).rank == 1);
  CHECK(check.predicted.at(5).trivial());
  CHECK(code_of([] { stein_homology_check(handle_block(4, 1, 1, "h"), 2, {}); }) ==
        ErrorCode::invalid_argument);
  CobordismSpec c;
  c.handles = handle_block(6, 4, 1, "h");
  c.exactness = Exactness::stein_candidate;
  CHECK(code_of([&] { validate_cobordism(c); }) == ErrorCode::invalid_argument);
}

TEST_CASE("not-Stein certificate") {
  for (int n = 2; n <= 5; ++n) {
    const auto base = free_profile(2 * n + 1, {0, 2 * n - 1, 2 * n, 2 * n + 1});
    const auto r = not_stein_certificate(2 * n - 1, true, base);
    CHECK(r.conclusive);
    CHECK(r.degree == 2 * n);
    CHECK(r.cobordism.rank == r.boundary.rank + 1);
    CHECK_FALSE(not_stein_certificate(2 * n - 1, false, base).conclusive);
  }
  CHECK(code_of([] { not_stein_certificate(1, true, {}); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { not_stein_certificate(4, true, {}); }) == ErrorCode::invalid_argument);
  // H_g x T with T = S^{2n-1}: H_{2n} = Z^g, forbidden for a Stein domain.
  for (int g = 1; g <= 5; ++g)
    for (int n = 2; n <= 4; ++n) {
      const auto w = handlebody_example(g, sphere_profile(2 * n - 1));
      CHECK(w.at(2 * n).rank == g);
      // H_{2n-1} = Z from the T factor already exceeds the bound once 2n - 1 > n + 1.
      CHECK(stein_domain_obstruction(w, n) == (2 * n - 1 > n + 1 ? 2 * n - 1 : 2 * n));
    }
}

TEST_CASE("Kunneth products against hand computations") {
  CHECK(product_profile(sphere_profile(1), sphere_profile(1)) == free_profile(2, {0, 1, 1, 2}));
  for (int n = 1; n <= 6; ++n)
    CHECK(product_profile(sphere_profile(n), sphere_profile(n + 1)) ==
          free_profile(2 * n + 1, {0, n, n + 1, 2 * n + 1}));
  const auto rp3 = make_profile({make_group(1), make_group(0, {2}), make_group(0), make_group(1)});
  const auto expect = make_profile({make_group(1), make_group(1, {2}), make_group(0, {2}),
                                    make_group(1), make_group(1)});
  CHECK(product_profile(rp3, sphere_profile(1)) == expect);
  // RP^3 x RP^3 in degree 2: Z/2 (x) Z/2 plus Tor(Z/2, Z/2) from degree 1.
  CHECK(product_profile(rp3, rp3).at(2) == make_group(0, {2}));
  CHECK(product_profile(rp3, rp3).at(1) == make_group(0, {2, 2}));
}

TEST_CASE("Gysin sequence for unit cotangent bundles of spheres") {
  const auto rp3 = gysin_sphere_bundle_homology(1);
  CHECK(rp3 == make_profile({make_group(1), make_group(0, {2}), make_group(0), make_group(1)}));
  for (int n = 1; n <= 12; ++n) {
    const auto p = gysin_sphere_bundle_homology(n);
    CHECK(p.top_degree() == 2 * n + 1);
    if (n % 2 == 0) {
      CHECK(p == free_profile(2 * n + 1, {0, n, n + 1, 2 * n + 1}));
    } else {
      CHECK(p.at(n) == make_group(0, {2}));
      for (int k = 0; k <= 2 * n + 1; ++k) {
        if (k != n) CHECK(p.at(k).torsion.empty());
      }
      CHECK(p.at(n + 1).trivial());
    }
  }
  CHECK(code_of([] { gysin_sphere_bundle_homology(0); }) == ErrorCode::invalid_argument);
}

TEST_CASE("fact tables") {
  CHECK(hopf_invariant_one_exists(2));
  CHECK_FALSE(hopf_invariant_one_exists(3));
  CHECK(hopf_invariant_one_exists(8));
  CHECK_FALSE(hopf_invariant_one_exists(16));
  CHECK(twist_square_smoothly_trivial(2));
  CHECK(twist_square_smoothly_trivial(6));
  CHECK_FALSE(twist_square_smoothly_trivial(4));
  CHECK_FALSE(twist_square_smoothly_trivial(1));
  for (int n = 1; n <= 64; ++n) {
    const bool oracle = n % 2 == 0 && (n + 1 == 1 || n + 1 == 3 || n + 1 == 7);
    CHECK(twist_square_smoothly_trivial(n) == oracle);
  }
  CHECK(code_of([] { twist_square_smoothly_trivial(0); }) == ErrorCode::invalid_argument);
}

TEST_CASE("cabling and self-linking") {
  CHECK(cabling_genus(2, 2).genus == 3);
  for (int q = 1; q <= 10; ++q) {
    CHECK(cabling_genus(1, q).genus == 1);
    CHECK(cabling_genus(3, q).class_multiplier == q);
    // Riemann-Hurwitz for an unbranched q-fold cover: chi' = q chi.
    for (int g = 1; g <= 5; ++g) CHECK(2 - 2 * cabling_genus(g, q).genus == q * (2 - 2 * g));
  }
  CHECK(code_of([] { cabling_genus(0, 2); }) == ErrorCode::invalid_argument);
  CHECK(self_linking_liouville(1) == -1);
  CHECK(self_linking_liouville(0) == 0);
  CHECK(self_linking_liouville(-1) == 1);
}

TEST_CASE("cobordism text round trip") {
  const auto spec = sum_cobordism_spec(page("T0", 1, {{0, 1}, {1, 2}}, true), {"M"}, "M'");
  CHECK(cobordism_from_json(nlohmann::json::parse(serialize(to_json(spec)))) == spec);
  const auto p = gysin_sphere_bundle_homology(3);
  CHECK(profile_from_json(to_json(p)) == p);
  CHECK(code_of([] { cobordism_from_json(nlohmann::json::parse("{}")); }) ==
        ErrorCode::malformed_text);
  CHECK(serialize(to_json(stein_homology_check({}, 1, sphere_profile(3)))).find("\"detail\"") <
        serialize(to_json(stein_homology_check({}, 1, sphere_profile(3)))).find("\"passed\""));
}
