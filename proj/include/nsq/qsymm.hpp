#pragma once
// The algebra of quasisymmetric functions in its monomial basis: elements are
// finite rational combinations of compositions.  Carries the overlapping
// shuffle (quasi-shuffle) and plain shuffle products, the cut coproduct, the
// duality pairing against Z-words, the partwise Frobenius operators, and
// realization as honest quasisymmetric polynomials in finitely many
// commuting variables.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nsq/algebra.hpp"
#include "nsq/ints.hpp"
#include "nsq/words.hpp"

namespace nsq {

struct QElement {
    std::map<Composition, Rat> terms;  // keyed in wll order, no zeros stored

    static QElement zero() { return {}; }
    static QElement one();
    static QElement word(Composition a, Rat c = Rat(1));

    bool is_zero() const { return terms.empty(); }
    bool operator==(const QElement&) const = default;
};

QElement q_add(const QElement& a, const QElement& b);
QElement q_sub(const QElement& a, const QElement& b);
QElement q_negate(const QElement& a);
QElement q_scalar_multiply(const Rat& c, const QElement& a);
Rat q_coefficient(const QElement& a, const Composition& w);
bool q_is_integral(const QElement& a);
bool q_is_homogeneous(const QElement& a, int* weight = nullptr);
int q_max_weight(const QElement& a);
QElement q_weight_part(const QElement& a, int w);
std::string to_string(const QElement& a);

// Overlapping shuffle product: on first letters a and b,
//   (a alpha) * (b beta) = a (alpha * b beta) + b (a alpha * beta)
//                        + (a+b) (alpha * beta).
// Commutative and associative; word products are memoized.
QElement osh_product(const QElement& a, const QElement& b);

// Plain shuffle: the same recursion without the merged (a+b) branch.
QElement shuffle_product(const QElement& a, const QElement& b);

// Cut coproduct: every split of a word into prefix (x) suffix.
struct QTensor {
    std::map<std::pair<Composition, Composition>, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const QTensor&) const = default;
};
QTensor cut_coproduct(const QElement& a);
QTensor q_simple_tensor(const QElement& a, const QElement& b);
QTensor q_tensor_add(const QTensor& a, const QTensor& b);
QTensor q_tensor_sub(const QTensor& a, const QTensor& b);
// Apply linear maps to the two legs.
QTensor q_tensor_map(const QTensor& t,
                     const std::function<QElement(const QElement&)>& f);
std::string to_string(const QTensor& t);

// Duality pairing: <Z_alpha, beta> = delta_{alpha,beta} extended bilinearly.
// The left argument must be a Z-alphabet element.
Rat pairing(const AlgebraElement& x, const QElement& y);

// Frobenius family: multiply every part by n.  Algebra endomorphisms.
QElement frobenius_q(int n, const QElement& a);

// ---- realization in commuting variables x_1 .. x_nvars ----

struct RealizedPolynomial {
    int nvars = 0;
    std::map<std::vector<int>, Rat> terms;  // exponent vector -> coefficient

    bool is_zero() const { return terms.empty(); }
    bool operator==(const RealizedPolynomial&) const = default;
};

RealizedPolynomial poly_add(const RealizedPolynomial& a, const RealizedPolynomial& b);
RealizedPolynomial poly_multiply(const RealizedPolynomial& a,
                                 const RealizedPolynomial& b);
std::string to_string(const RealizedPolynomial& p);

// The monomial quasisymmetric polynomial of a composition: the sum of
// x_{i_1}^{a_1} ... x_{i_m}^{a_m} over strictly increasing index tuples.
RealizedPolynomial realize(const Composition& a, int nvars);
RealizedPolynomial realize_element(const QElement& a, int nvars);

} // namespace nsq
