#pragma once
// Integral primitives attached to Lyndon words.  A Lyndon word α with part
// gcd g and reduced word w = α/g gets a divided power sequence d_w — built
// recursively through the generic commutator table along the standard
// factorization of w — and the primitive P_α is the g-th Newton primitive of
// d_w.  These elements are integral, primitive, and form a basis of the full
// lattice of primitives in each weight; the Lyndon bracketings of the
// classical Newton primitives span a sublattice of finite index.

#include <vector>

#include "nsq/algebra.hpp"
#include "nsq/lattice.hpp"
#include "nsq/words.hpp"

namespace nsq {

// The k-th Newton primitive of a divided power sequence d (entry 0 must hold
// 1, entries beyond index k are ignored): k d_k = sum_{j=0}^{k-1} d_j P_{k-j}(d).
AlgebraElement curve_newton(const std::vector<AlgebraElement>& d, int k);

// The divided power sequence of a reduced (gcd 1) Lyndon word, entries
// 0..top.  [1] gets the standard curve; w = w' w'' (standard factorization,
// part gcds g', g'') gets entry r = the generic commutator entry at
// (r g', r g'') evaluated at the sequences of the reduced halves.  Memoized.
std::vector<AlgebraElement> build_dps(const Composition& w, int top);

// The primitive of a Lyndon word: P_alpha = (g-th Newton primitive of the
// sequence of alpha/g), where g is the part gcd.  P_[n] is the classical
// Newton primitive of weight n.
AlgebraElement build_P(const Composition& alpha);

// Integer coordinate rows of homogeneous weight-n elements with respect to
// the weight-n words in canonical order.  Throws on non-integral
// coefficients or mixed weights.
IntMatrix element_coords(const std::vector<AlgebraElement>& els, int n);

// Lattice spanned by the coordinates of build_P over all Lyndon words of
// weight n.
IntegerLattice prim_basis_span(int n);

// Lattice spanned by the Lyndon bracketings of the Newton primitives.
IntegerLattice frlie_span(int n);

// The full lattice of weight-n primitives, computed without reference to
// either family: the left kernel of the reduced-coproduct coefficient matrix
// on weight-n words.
IntegerLattice primitive_lattice(int n);

// Index of the free-Lie span inside the full primitive lattice (nullopt when
// the spans do not even have equal rank).
std::optional<Int> frlie_index(int n);

} // namespace nsq
