#pragma once
// Hopf structure on the free algebra in Z_1, Z_2, ...: the coproduct that
// makes Z(t) = 1 + Z_1 t + Z_2 t^2 + ... grouplike, the two Newton primitive
// families P_n and P'_n, conversion to and from the P-monomial basis over the
// rationals, the Verschiebung and (rational) Frobenius operator families, the
// projection onto symmetric functions realized inside the quasisymmetric
// algebra, the exponential change of generators onto a primitively generated
// free algebra, and Lyndon bracketing of the Newton primitives.

#include <map>
#include <vector>

#include "nsq/algebra.hpp"
#include "nsq/qsymm.hpp"
#include "nsq/words.hpp"

namespace nsq {

// Coproduct: Z_n -> sum_{i+j=n} Z_i (x) Z_j (with Z_0 = 1), and likewise for
// the generic curve letters X_n and Y_n; U_n is primitive.  Extended
// multiplicatively over words.
TensorElement coproduct(const AlgebraElement& x);

// Counit: the coefficient of the empty word.
Rat counit(const AlgebraElement& x);

bool is_primitive(const AlgebraElement& x);

// Divided power sequence check: d[0] = 1 and every d[n] satisfies
// coproduct(d[n]) = sum_{i+j=n} d[i] (x) d[j].
bool is_dps(const std::vector<AlgebraElement>& d);

// Newton primitives.  P_n is defined by n Z_n = sum_{j=0}^{n-1} Z_j P_{n-j}
// and P'_n by the mirrored recursion n Z_n = sum_{j=0}^{n-1} P'_{n-j} Z_j.
// Every call cross-checks the recursion against the series route
// (the coefficients of Z(t)^{-1} Z'(t), respectively Z'(t) Z(t)^{-1})
// and refuses to return on disagreement.
AlgebraElement newton_P(int n);
AlgebraElement newton_P_prime(int n);

// Rational coordinates on monomials in the letters P_1, P_2, ... (free
// generators over Q), keyed by their index words.
using PPolynomial = std::map<Composition, Rat>;

PPolynomial to_newton_basis(const AlgebraElement& x);   // Z-alphabet input
AlgebraElement from_newton_basis(const PPolynomial& p);

// Verschiebung family: divide every letter index by n and kill words with an
// index n does not divide.  Hopf algebra endomorphisms with V_n V_m = V_{nm}
// and V_n(P_{nm}) = n P_m.
AlgebraElement verschiebung_N(int n, const AlgebraElement& x);

// Frobenius family over Q: multiply every letter index by n in the P-basis.
// Algebra endomorphisms with f_n(P_m) = P_{nm}; not integral in general.
AlgebraElement frobenius_NQ(int n, const AlgebraElement& x);

// Projection onto symmetric functions: Z_n -> h_n = sum of all monomial words
// of weight n, extended multiplicatively into the quasisymmetric algebra.
// Sends P_n to the power sum, which is the single word [n].
QElement project_to_symm(const AlgebraElement& x);

// Change of generators Z_n -> sum_{b composition of n} U_b / length(b)!,
// the divided exponential of U(t) = U_1 t + U_2 t^2 + ....  With every U_n
// primitive this is a coalgebra map, exhibiting the rational Hopf algebra as
// a free algebra on primitive generators.
AlgebraElement exp_iso(const AlgebraElement& x);

// Standard Lyndon bracketing with Newton primitives at the letters:
// b([n]) = P_n, and b(w) = [b(u), b(v)] for the standard factorization
// w = uv of a longer Lyndon word.
AlgebraElement lyndon_bracket(const Composition& w);

} // namespace nsq
