#pragma once
// Compositions: finite words of positive integers.  This module carries the
// combinatorial ground layer: weight/length statistics, the three word orders
// used everywhere else (lexicographic with "proper prefix is smaller",
// weight-length-lex, and the degree-then-left order on index pairs), Lyndon
// words with their standard factorization, enumeration in a fixed order, and
// the rank counts beta(n) of the weight-n Lyndon layer.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsq/ints.hpp"

namespace nsq {

struct Composition {
    std::vector<int> parts;  // every entry >= 1

    Composition() = default;
    explicit Composition(std::vector<int> p);
    Composition(std::initializer_list<int> p);

    int length() const { return static_cast<int>(parts.size()); }
    int weight() const;
    bool empty() const { return parts.empty(); }

    bool operator==(const Composition&) const = default;
};

// Lexicographic comparison where a proper prefix is smaller than the longer
// word.  Returns -1, 0, +1.
int compare_lex(const Composition& a, const Composition& b);

// Weight, then length, then lexicographic.  The canonical storage and
// enumeration order; matrices indexed by compositions use it for rows and
// columns so results are reproducible bit for bit.
int compare_wll(const Composition& a, const Composition& b);

enum class WordOrder { lex, wll, wl_pair };

// wl_pair compares index pairs (u, v) by u + v, then u; both arguments must
// have length 2 in that mode.
int compare(const Composition& a, const Composition& b, WordOrder order);
int compare_wl_pair(std::pair<int, int> a, std::pair<int, int> b);

// Canonical order for containers keyed by Composition.
inline bool operator<(const Composition& a, const Composition& b) {
    return compare_wll(a, b) < 0;
}

// gcd of the parts; undefined (throws) on the empty word.
int gcd_of_parts(const Composition& a);
// product of the parts; undefined (throws) on the empty word.
Int product_of_parts(const Composition& a);

// Divide every part by the gcd.
Composition reduce(const Composition& a);
// Multiply every part by n >= 1.
Composition scale(const Composition& a, int n);
// Divide every part by n when exact; nullopt when some part is not divisible.
std::optional<Composition> scale_div(const Composition& a, int n);

Composition concat(const Composition& a, const Composition& b);

// A word is Lyndon when it is nonempty and lexicographically smaller than
// every proper tail.
bool is_lyndon(const Composition& a);

// Standard factorization of a Lyndon word of length >= 2: split before the
// lexicographically least proper tail.  Both halves are Lyndon and the left
// is lex-smaller than the right.
std::pair<Composition, Composition> canonical_factorization(const Composition& a);

// All 2^(n-1) compositions of n (n >= 1) in wll order; n = 0 gives the empty
// word alone.
std::vector<Composition> enumerate_compositions(int n);

// All Lyndon compositions of weight n in wll order.
std::vector<Composition> enumerate_lyndon(int n);

// Number of Lyndon compositions of weight n, computed from the divisor-sum
// identity  sum_{d | m} d * beta(d) = 2^m - 1  (independent of enumeration).
long long beta(int n);

std::string to_string(const Composition& a);

} // namespace nsq
