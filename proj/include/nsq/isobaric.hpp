#pragma once
// Bi-isobaric decomposition of two-variable curve defects.  A target series
// T(s, t) that is 1 at the origin and trivial on both axes factors uniquely
// as the ordered product, over coprime direction pairs (a, b) in the
// degree-then-left order, of factors
//     1 + E_{a,b} s^a t^b + E_{2a,2b} s^{2a} t^{2b} + ...
// The extraction walks index pairs (u, v) in the same order; at each pair the
// still-missing part of the target coefficient is the new entry, because all
// cross terms in the product involve entries of strictly smaller total
// degree and the entry itself occurs linearly.  Two targets matter here: the
// group commutator of two independent generic curves, and the additive
// defect of the standard curve, whose (1,1) entry is the first Newton
// primitive beyond weight one.

#include <map>
#include <utility>
#include <vector>

#include "nsq/algebra.hpp"

namespace nsq {

struct IsobaricTable {
    int bound = 0;  // entries cover u, v >= 1 with u + v <= bound
    std::map<std::pair<int, int>, AlgebraElement> entries;  // zeros kept

    bool operator==(const IsobaricTable&) const = default;
};

// The generic curve on one alphabet: 1 + A_1 x + A_2 x^2 + ... + A_bound x^bound.
Series letter_curve(Alphabet a, int bound);
// The standard curve on the Z letters.
Series standard_curve(int bound);

// Group commutator  X(s)^{-1} Y(t)^{-1} X(s) Y(t)  of two curves.  Bounds
// must agree; the result carries the same bound as total degree.
BiSeries commutator_target(const Series& x, const Series& y);

// Additive defect  Z(s)^{-1} Z(t)^{-1} Z(s+t)  of one curve.
BiSeries additive_target(const Series& z);

// Unique decomposition of a target with trivial axes (throws otherwise).
IsobaricTable decompose(const BiSeries& target);
// The ordered product of the table's ray factors; inverse of decompose.
BiSeries reconstruct(const IsobaricTable& table);

// Entry (u, v) of the decomposition of the generic commutator target, an
// element of the mixed X/Y alphabet isobaric of weight u in X and v in Y.
// Cached across calls.
AlgebraElement commutator_entry(int u, int v);
// Entry (u, v) for the additive defect of the standard curve.  Cached.
AlgebraElement additive_entry(int u, int v);

// Whether every entry of the table obeys the index-division law
//     v_n(E_{u,v}) = E_{u/n, v/n}  when n divides both u and v, else 0,
// with v_n dividing every letter index (any alphabet) and killing words with
// a non-divisible index.  The commutator table satisfies this for every n;
// the additive table does not: its first row consists of Newton primitives,
// whose images under v_n carry an extra factor n, so the honest answer for
// that table is false.
bool verschiebung_compat(int n, const IsobaricTable& table);

// Substitute divided power sequences for the generic letters: X_i -> dx[i]
// and Y_j -> dy[j].  Index 0 of each sequence must hold 1, and the input
// element may only use X and Y letters within range.
AlgebraElement substitute_dps(const AlgebraElement& x,
                              const std::vector<AlgebraElement>& dx,
                              const std::vector<AlgebraElement>& dy);

} // namespace nsq
