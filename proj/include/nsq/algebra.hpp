#pragma once
// Sparse exact-rational arithmetic in free associative algebras.  Letters are
// indexed generators drawn from one of three permitted alphabet families:
// Z-only, U-only, or the mixed pair {X, Y}.  All letters inside one element
// must come from a single family (scalars are neutral).  On top of the plain
// algebra sit elementary tensors (for coproducts) and truncated one- and
// two-variable series (for curves and their commutator targets).

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nsq/ints.hpp"
#include "nsq/words.hpp"

namespace nsq {

enum class Alphabet : unsigned char { Z, X, Y, U };

char alphabet_name(Alphabet a);

struct Letter {
    Alphabet tag;
    int index;  // >= 1

    auto operator<=>(const Letter&) const = default;
};

using LWord = std::vector<Letter>;

// Canonical word order: length first, then letterwise with letters compared
// by (alphabet tag, index).  Restricted to words of one homogeneous weight in
// a single alphabet this is exactly weight-length-lex on the index words, so
// the first stored term of a homogeneous element is its wll-leading term.
struct LWordLess {
    bool operator()(const LWord& a, const LWord& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

int word_weight(const LWord& w);

// The alphabet family a word commits its element to.
enum class LetterFamily { neutral, z, u, xy };
LetterFamily word_family(const LWord& w);
// Family of a whole element; throws if words disagree (cannot happen for
// elements built through this module's operations).
LetterFamily element_family(const std::map<LWord, Rat, LWordLess>& terms);

struct AlgebraElement {
    std::map<LWord, Rat, LWordLess> terms;  // no zero coefficients stored

    static AlgebraElement zero() { return {}; }
    static AlgebraElement one();
    static AlgebraElement monomial(LWord w, Rat c = Rat(1));

    bool is_zero() const { return terms.empty(); }
    bool operator==(const AlgebraElement&) const = default;
};

// Z_(a1) Z_(a2) ... Z_(am) as a single word, and the same for any alphabet.
LWord letter_word(Alphabet a, const Composition& idx);
AlgebraElement z_monomial(const Composition& idx, Rat c = Rat(1));

// The index word of a pure Z-word; throws on other alphabets.
Composition word_to_composition(const LWord& w);

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement negate(const AlgebraElement& a);
AlgebraElement scalar_multiply(const Rat& c, const AlgebraElement& a);
Rat coefficient(const AlgebraElement& a, const LWord& w);

// Free product (word concatenation).  Throws when the operands commit to
// different alphabet families.
AlgebraElement concat_product(const AlgebraElement& a, const AlgebraElement& b);

// Commutator [a, b] = ab - ba.
AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b);

bool is_integral(const AlgebraElement& a);
// True when every term has the same weight; then *weight is that weight
// (zero elements are homogeneous of any weight; *weight is set to -1).
bool is_homogeneous(const AlgebraElement& a, int* weight = nullptr);
int max_weight(const AlgebraElement& a);
// The terms of exact weight w.
AlgebraElement weight_part(const AlgebraElement& a, int w);
// Reverse every word (the standard anti-automorphism).
AlgebraElement reverse_words(const AlgebraElement& a);

std::string to_string(const AlgebraElement& a);

// ---- elementary tensors (codomain of coproducts) ----

struct TPairLess {
    bool operator()(const std::pair<LWord, LWord>& a,
                    const std::pair<LWord, LWord>& b) const {
        LWordLess less;
        if (less(a.first, b.first)) return true;
        if (less(b.first, a.first)) return false;
        return less(a.second, b.second);
    }
};

struct TensorElement {
    std::map<std::pair<LWord, LWord>, Rat, TPairLess> terms;

    static TensorElement zero() { return {}; }
    bool is_zero() const { return terms.empty(); }
    bool operator==(const TensorElement&) const = default;
};

TensorElement simple_tensor(const AlgebraElement& a, const AlgebraElement& b);
TensorElement tensor_add(const TensorElement& a, const TensorElement& b);
TensorElement tensor_sub(const TensorElement& a, const TensorElement& b);
TensorElement tensor_scalar_multiply(const Rat& c, const TensorElement& a);
// Componentwise product: (a (x) b)(c (x) d) = ac (x) bd, extended bilinearly.
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b);
// Apply a linear map to both tensor legs.
TensorElement tensor_map(const TensorElement& t,
                         const std::function<AlgebraElement(const AlgebraElement&)>& f);
std::string to_string(const TensorElement& t);

// ---- truncated series ----

// sum_{d=0..bound} coeff[d] t^d.  A curve additionally has coeff[0] == 1 and
// coeff[d] homogeneous of weight d, but Series itself does not enforce that.
struct Series {
    int bound = 0;
    std::vector<AlgebraElement> coeff;  // size bound + 1

    explicit Series(int b) : bound(b), coeff(b + 1) {}
    bool operator==(const Series&) const = default;
};

Series series_one(int bound);
Series series_add(const Series& a, const Series& b);
Series series_multiply(const Series& a, const Series& b);
// Two-sided inverse of a series with constant term 1 (throws otherwise).
Series series_invert(const Series& a);

// sum over i + j <= bound of coeff(i, j) s^i t^j.
struct BiSeries {
    int bound = 0;
    std::map<std::pair<int, int>, AlgebraElement> coeff;  // zero entries omitted

    explicit BiSeries(int b) : bound(b) {}
    const AlgebraElement& at(int i, int j) const;
    void set(int i, int j, AlgebraElement v);
    bool operator==(const BiSeries&) const = default;
};

BiSeries biseries_one(int bound);
BiSeries biseries_multiply(const BiSeries& a, const BiSeries& b);  // bounds must match
BiSeries biseries_invert(const BiSeries& a);  // constant term must be 1
// Embed a one-variable series as a series in s (exponents (d, 0)) or t ((0, d)).
BiSeries biseries_in_s(const Series& a);
BiSeries biseries_in_t(const Series& a);
// The series evaluated at s + t: coefficient at (i, j) is C(i+j, i) times the
// input coefficient at degree i + j.
BiSeries substitute_sum(const Series& a);

} // namespace nsq
