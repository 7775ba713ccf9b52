#pragma once

namespace csurg::cobordism {

// Adams: a map S^{2d-1} -> S^d of Hopf invariant one exists iff d is 1, 2, 4 or 8.
bool hopf_invariant_one_exists(int d);

// James-Whitehead: S*S^{n+1} is homotopy equivalent to S^n x S^{n+1} iff
// n + 1 is 1, 3 or 7.
bool sphere_bundle_splits(int n);

// The square of the twist on D*S^n is smoothly isotopic to the identity rel
// boundary iff n is 2 or 6. Throws invalid_argument for n < 1 and
// tolerance_exceeded if the fact tables disagree.
bool twist_square_smoothly_trivial(int n);

struct CablingResult {
  int genus = 0;
  int class_multiplier = 1;
};

// q-fold cable of a genus-g symplectic surface. Throws invalid_argument for
// g < 1 or q < 1.
CablingResult cabling_genus(int g, int q);

// Transverse boundary of a Liouville surface of Euler characteristic chi.
int self_linking_liouville(int chi);

// Handle count 1 + sum (-1)^(n+1) over -2m handles of index n + 1 for n even.
int five_sphere_euler(int n, int m);
// The closed form printed alongside: 1 - 2m.
int five_sphere_euler_printed(int m);

}  // namespace csurg::cobordism
