#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csurg/cobordism/handles.hpp"

namespace csurg::cobordism {

// Z^rank + Z/t_1 + ... with torsion orders >= 2 in nondecreasing order.
struct Group {
  int rank = 0;
  std::vector<int> torsion;
  bool operator==(const Group&) const = default;
  bool trivial() const { return rank == 0 && torsion.empty(); }
};

// groups[k] = H_k.
struct HomologyProfile {
  std::vector<Group> groups;
  bool operator==(const HomologyProfile&) const = default;
  int top_degree() const { return static_cast<int>(groups.size()) - 1; }
  Group at(int k) const;  // trivial outside the stored range
};

Group make_group(int rank, std::vector<int> torsion = {});
HomologyProfile make_profile(std::vector<Group> groups);

HomologyProfile point_profile();
HomologyProfile sphere_profile(int d);
// Kunneth formula with Tor terms.
HomologyProfile product_profile(const HomologyProfile& a, const HomologyProfile& b);
// Genus-g handlebody: wedge of g circles up to homotopy.
HomologyProfile handlebody_profile(int g);

// Unit cotangent bundle of S^{n+1} from the Gysin sequence with Euler number
// chi(S^{n+1}): H_n = Z/chi (Z when chi = 0), H_{n+1} = ker(chi).
HomologyProfile gysin_sphere_bundle_homology(int n);

struct SteinCheck {
  bool passed = false;
  std::optional<int> certificate_degree;  // first degree forced above n + 1
  HomologyProfile predicted;              // H_k(W) for k > n + 1
  std::string detail;
};

// Passes iff every handle has index <= n + 1. The prediction adds one free
// class per handle of index k > n + 1 in degree k, the Mayer-Vietoris count
// for a handle whose attaching sphere bounds in M.
SteinCheck stein_homology_check(const std::vector<Handle>& handles, int n,
                                const HomologyProfile& boundary_profile);

// First degree above n + 1 with nonzero homology; a Stein domain of
// dimension 2n + 2 has none.
std::optional<int> stein_domain_obstruction(const HomologyProfile& w, int n);

struct SteinObstructionReport {
  bool conclusive = false;
  int degree = 0;
  Group boundary;   // H_{2n}(M)
  Group cobordism;  // H_{2n}(W) = H_{2n}(M) + Z when conclusive
  std::string detail;
};

// t_dim = 2n - 1 with n > 1. Throws invalid_argument otherwise.
SteinObstructionReport not_stein_certificate(int t_dim, bool classes_equal,
                                             const HomologyProfile& base_profile);

// H_g x T for a genus-g handlebody, the domain produced by g self sums along
// pages of the trivial open book with page [-1,1] x T.
HomologyProfile handlebody_example(int g, const HomologyProfile& t_profile);

std::string to_string(const Group& g);

}  // namespace csurg::cobordism
