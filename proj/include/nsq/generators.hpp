#pragma once
// Free polynomial generators of the quasishuffle algebra and the operations
// built from them.  Every composition carries a lambda-ring style family:
// Adams operations p_n (partwise scaling) and elementary operations e_n
// (Newton recursion, integral).  A Lyndon word alpha with part gcd g yields
// the generator E_alpha = e_g(alpha/g); the products of these over multisets
// of Lyndon words form a unimodular basis in each weight, so every integral
// element has unique integer coordinates in generator monomials.  On top of
// that sit the two filtrations (by word length G_i, by generator length F_i),
// the ring morphisms tau_n picking out the coefficient of the classical
// elementary e_n, and the induced Verschiebung family v_phi with its
// property suite.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nsq/lattice.hpp"
#include "nsq/qsymm.hpp"
#include "nsq/words.hpp"

namespace nsq {

// Adams operation: the single word with every part multiplied by n.
QElement adams_p(int n, const Composition& alpha);

// Elementary operation via the Newton recursion
//   k e_k = sum_{j=1..k} (-1)^{j-1} e_{k-j} p_j   (all in the alpha family);
// the division by k is exact on these elements and the result integral
// (asserted; failure signals an implementation bug).  Memoized.
QElement lambda_e(int n, const Composition& alpha);

// The free generator of a Lyndon word: E_alpha = e_g(alpha/g), g the part
// gcd.  Throws on non-Lyndon input.
QElement build_E(const Composition& alpha);

// A generator monomial is a multiset of Lyndon indices, kept sorted; the
// empty multiset is the unit.  Polynomials in the generators are maps from
// monomials to coefficients (integral whenever produced by express_in_E).
using EMonomial = std::vector<Composition>;
using EPolynomial = std::map<EMonomial, Rat>;

struct EMonomialBasis {
    int weight = 0;
    // All multisets of Lyndon words of total weight `weight`, sorted by
    // number of factors, then lexicographically on the wll-sorted factor
    // lists.  One row of coordinates per monomial, columns indexed by
    // enumerate_compositions(weight).
    std::vector<EMonomial> monomials;
    std::vector<QElement> expanded;
    IntMatrix matrix;
};

// Cached per weight; asserts the matrix is square of size 2^(n-1) with
// |det| = 1 (identity Hermite normal form) before returning.
const EMonomialBasis& e_monomial_basis(int n);

// Unique integer coordinates of an integral element in generator monomials,
// computed per weight against the cached basis (a dense rational solve,
// cubic in the 2^(weight-1) basis size).  Throws on non-integral input.
EPolynomial express_in_E(const QElement& x);

// Multiply the expansion back out.
QElement expand_E_polynomial(const EPolynomial& p);

// Matrix <P_alpha, E_beta> over the Lyndon words of weight n, rows and
// columns in wll order.  Upper triangular with diagonal entries +-1.
IntMatrix pairing_matrix(int n);

// Weight-n piece of the two filtrations: kind 'G' spans the words of length
// <= i; kind 'F' spans the generator monomials all of whose factors have
// index words of length <= i.  Coordinates over enumerate_compositions(n).
IntegerLattice filtration_span(int i, int n, char kind);

// Integer coordinate row of a homogeneous weight-n integral element over
// enumerate_compositions(n).
std::vector<Int> q_coords(const QElement& x, int n);

// The ring morphism to the integers sending E_[n] to (-1)^(n-1) and every
// other generator to 0, evaluated through express_in_E.
Rat tau(int n, const QElement& x);

// Verschiebung-type coalgebra morphism attached to an additive functional:
// sum over ordered splittings of the word into nonempty consecutive blocks
// whose weights n divides, of (product of phi over the blocks) times the
// word of scaled-down block weights.
using Functional = std::function<Rat(const QElement&)>;
QElement v_phi(const Functional& phi, int n, const Composition& alpha);
QElement v_phi_element(const Functional& phi, int n, const QElement& x);

// v_phi with phi = tau_n: a Hopf algebra endomorphism, homogeneous of
// degree 1/n, restricting to the classical Verschiebung on the symmetric
// subring.
QElement v_tau(int n, const QElement& x);

// ---- classical symmetric-function oracle in power-sum coordinates ----
// A symmetric element is a rational combination of power-sum monomials,
// keyed by the sorted list of indices.  Used as the independent route for
// the "restricts to the symmetric subring" checks.

using SymmInP = std::map<std::vector<int>, Rat>;

SymmInP symm_multiply(const SymmInP& a, const SymmInP& b);
SymmInP symm_e(int k);  // elementary symmetric in power sums
SymmInP symm_h(int k);  // complete symmetric in power sums
// The classical Verschiebung: ring morphism p_k -> n p_{k/n} (0 if n does
// not divide k).
SymmInP symm_v(int n, const SymmInP& f);
// Substitute p_k -> [k] and expand with quasishuffle products.
QElement symm_to_q(const SymmInP& f);

// The complete quasisymmetric element of weight k: sum of all words of
// weight k (the image of the k-th complete symmetric function).
QElement q_complete(int k);

// The elementary element of weight k: the single word with k parts 1.
QElement q_elementary(int k);

// ---- property suite for the v_tau family ----

struct SuiteClause {
    std::string name;
    bool pass = false;
    std::string witness;  // count of checks on pass, first failure otherwise
};
struct SuiteReport {
    int n = 0;
    int maxweight = 0;
    std::vector<SuiteClause> clauses;
    bool all_pass = false;
};

// Four clauses, each bounded by maxweight on every intermediate weight:
//   leading-term   v_n of a word of length m is n^m times the scaled-down
//                  word (when n divides every part; 0 otherwise) modulo
//                  words of length < m;
//   symm-restrict  v_n agrees with the classical Verschiebung on the
//                  elementary and complete symmetric elements;
//   commute-f2     v_n commutes with v_2 and v_3 on the spanning monomials
//                  of the second filtration;
//   section-mod-f  v_n(f_n(alpha)) = n^len(alpha) alpha modulo the
//                  filtration span one level down.
SuiteReport verschiebung_suite(int n, int maxweight);

} // namespace nsq
