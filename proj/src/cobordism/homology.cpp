#include "csurg/cobordism/homology.hpp"

#include <algorithm>
#include <numeric>

#include "csurg/error.hpp"

namespace csurg::cobordism {

Group HomologyProfile::at(int k) const {
  if (k < 0 || k >= static_cast<int>(groups.size())) return {};
  return groups[static_cast<std::size_t>(k)];
}

Group make_group(int rank, std::vector<int> torsion) {
  if (rank < 0) throw Error(ErrorCode::invalid_argument, "negative rank");
  torsion.erase(std::remove(torsion.begin(), torsion.end(), 1), torsion.end());
  for (int t : torsion)
    if (t < 2) throw Error(ErrorCode::invalid_argument, "torsion orders must be >= 2");
  std::sort(torsion.begin(), torsion.end());
  return {rank, std::move(torsion)};
}

HomologyProfile make_profile(std::vector<Group> groups) {
  for (auto& g : groups) g = make_group(g.rank, g.torsion);
  return {std::move(groups)};
}

HomologyProfile point_profile() { return {{make_group(1)}}; }

HomologyProfile sphere_profile(int d) {
  if (d < 0) throw Error(ErrorCode::invalid_argument, "sphere dimension must be >= 0");
  if (d == 0) return {{make_group(2)}};
  std::vector<Group> g(static_cast<std::size_t>(d + 1));
  g.front().rank = 1;
  g.back().rank = 1;
  return {g};
}

HomologyProfile product_profile(const HomologyProfile& a, const HomologyProfile& b) {
  const int top = a.top_degree() + b.top_degree();
  std::vector<Group> out(static_cast<std::size_t>(top + 1));
  auto add = [&](int k, int rank, std::vector<int> torsion) {
    Group& g = out[static_cast<std::size_t>(k)];
    g.rank += rank;
    g.torsion.insert(g.torsion.end(), torsion.begin(), torsion.end());
  };
  for (int i = 0; i <= a.top_degree(); ++i)
    for (int j = 0; j <= b.top_degree(); ++j) {
      const Group& x = a.groups[static_cast<std::size_t>(i)];
      const Group& y = b.groups[static_cast<std::size_t>(j)];
      // Tensor products.
      add(i + j, x.rank * y.rank, {});
      for (int s = 0; s < x.rank; ++s) add(i + j, 0, y.torsion);
      for (int s = 0; s < y.rank; ++s) add(i + j, 0, x.torsion);
      std::vector<int> mixed;
      for (int p : x.torsion)
        for (int r : y.torsion) mixed.push_back(std::gcd(p, r));
      add(i + j, 0, mixed);
      // Tor terms land one degree up.
      if (i + j + 1 <= top) add(i + j + 1, 0, mixed);
    }
  return make_profile(std::move(out));
}

HomologyProfile handlebody_profile(int g) {
  if (g < 0) throw Error(ErrorCode::invalid_argument, "genus must be >= 0");
  return make_profile({make_group(1), make_group(g)});
}

HomologyProfile gysin_sphere_bundle_homology(int n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "Gysin computation needs n >= 1");
  const int euler = (n + 1) % 2 == 0 ? 2 : 0;  // chi(S^{n+1})
  std::vector<Group> g(static_cast<std::size_t>(2 * n + 2));
  g[0] = make_group(1);
  g[static_cast<std::size_t>(2 * n + 1)] = make_group(1);
  // ... -> H_{n+1}(S^{n+1}) --e--> H_0(S^{n+1}) -> H_n(S*S^{n+1}) -> 0, and
  // 0 -> H_{n+1}(S*S^{n+1}) -> H_{n+1}(S^{n+1}) --e--> H_0(S^{n+1}).
  if (euler == 0) {
    g[static_cast<std::size_t>(n)].rank += 1;
    g[static_cast<std::size_t>(n + 1)].rank += 1;
  } else {
    g[static_cast<std::size_t>(n)].torsion.push_back(euler);
  }
  return make_profile(std::move(g));
}

SteinCheck stein_homology_check(const std::vector<Handle>& handles, int n,
                                const HomologyProfile& boundary_profile) {
  SteinCheck r;
  for (const Handle& h : handles)
    if (h.ambient_dim != 2 * n + 2)
      throw Error(ErrorCode::invalid_argument, "handle dimension does not match 2n + 2");
  const int top = std::max(boundary_profile.top_degree(), 2 * n + 2);
  std::vector<Group> predicted;
  for (int k = 0; k <= top; ++k)
    predicted.push_back(k > n + 1 ? boundary_profile.at(k) : Group{});
  for (const Handle& h : handles)
    if (h.index > n + 1) {
      predicted[static_cast<std::size_t>(h.index)].rank += 1;
      if (!r.certificate_degree || h.index < *r.certificate_degree) r.certificate_degree = h.index;
    }
  r.predicted = make_profile(std::move(predicted));
  r.passed = !r.certificate_degree.has_value();
  r.detail = r.passed ? "all handle indices <= " + std::to_string(n + 1) +
                            "; H_k(W) = H_k(M) for k > " + std::to_string(n + 1)
                      : "handle of index " + std::to_string(*r.certificate_degree) +
                            " adds a class in degree " + std::to_string(*r.certificate_degree);
  return r;
}

std::optional<int> stein_domain_obstruction(const HomologyProfile& w, int n) {
  for (int k = n + 2; k <= w.top_degree(); ++k)
    if (!w.at(k).trivial()) return k;
  return std::nullopt;
}

SteinObstructionReport not_stein_certificate(int t_dim, bool classes_equal,
                                             const HomologyProfile& base_profile) {
  if (t_dim < 1 || t_dim % 2 == 0)
    throw Error(ErrorCode::invalid_argument, "T must have odd dimension 2n - 1");
  const int n = (t_dim + 1) / 2;
  if (n <= 1) throw Error(ErrorCode::invalid_argument, "the obstruction needs n > 1");
  SteinObstructionReport r;
  r.degree = 2 * n;
  r.boundary = base_profile.at(2 * n);
  r.cobordism = r.boundary;
  if (!classes_equal) {
    r.detail = "i1[T] != i2[T]; no claim";
    return r;
  }
  r.conclusive = true;
  r.cobordism.rank += 1;
  r.detail = "H_" + std::to_string(2 * n) + "(W) = H_" + std::to_string(2 * n) +
             "(M) + Z exceeds the Stein bound in degree " + std::to_string(2 * n) + " > " +
             std::to_string(n + 1);
  return r;
}

HomologyProfile handlebody_example(int g, const HomologyProfile& t_profile) {
  if (g < 1) throw Error(ErrorCode::invalid_argument, "handlebody genus must be >= 1");
  return product_profile(handlebody_profile(g), t_profile);
}

std::string to_string(const Group& g) {
  if (g.trivial()) return "0";
  std::string out;
  if (g.rank > 0) out = g.rank == 1 ? "Z" : "Z^" + std::to_string(g.rank);
  for (int t : g.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(t);
  }
  return out;
}

}  // namespace csurg::cobordism
