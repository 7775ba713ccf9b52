#include "csurg/cobordism/tables.hpp"

#include <algorithm>
#include <array>

#include "csurg/error.hpp"

namespace csurg::cobordism {

namespace {

template <std::size_t N>
bool member(const std::array<int, N>& table, int x) {
  return std::find(table.begin(), table.end(), x) != table.end();
}

constexpr std::array<int, 4> kHopfOne = {1, 2, 4, 8};
constexpr std::array<int, 3> kParallelizable = {1, 3, 7};
constexpr std::array<int, 2> kTrivialSquares = {2, 6};

}  // namespace

bool hopf_invariant_one_exists(int d) { return member(kHopfOne, d); }

bool sphere_bundle_splits(int n) { return member(kParallelizable, n + 1); }

bool twist_square_smoothly_trivial(int n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "twist square needs n >= 1");
  const bool listed = member(kTrivialSquares, n);
  // Even n with S*S^{n+1} ~ S^n x S^{n+1}; equivalently a Hopf invariant one
  // map in dimension n + 2.
  const bool derived = n % 2 == 0 && sphere_bundle_splits(n);
  if (listed != derived || derived != (n % 2 == 0 && hopf_invariant_one_exists(n + 2)))
    throw Error(ErrorCode::tolerance_exceeded, "fact tables disagree at n = " + std::to_string(n));
  return listed;
}

CablingResult cabling_genus(int g, int q) {
  if (g < 1) throw Error(ErrorCode::invalid_argument, "cabling needs genus >= 1");
  if (q < 1) throw Error(ErrorCode::invalid_argument, "cabling needs q >= 1");
  return {q * (g - 1) + 1, q};
}

int self_linking_liouville(int chi) { return -chi; }

int five_sphere_euler(int n, int m) {
  if (m >= 0) throw Error(ErrorCode::invalid_argument, "handle count -2m needs m < 0");
  const int index = n + 1;
  return 1 + (-2 * m) * (index % 2 == 0 ? 1 : -1);
}

int five_sphere_euler_printed(int m) { return 1 - 2 * m; }

}  // namespace csurg::cobordism
