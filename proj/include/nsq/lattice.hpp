#pragma once
// Integer lattices inside Z^n with exact arbitrary-precision arithmetic.
// Row-style Hermite normal form (unique: positive pivots, entries above a
// pivot reduced into [0, pivot)), Smith invariant factors, membership by
// back-substitution, and the index of a finite-index sublattice.

#include <optional>
#include <vector>

#include "nsq/ints.hpp"

namespace nsq {

using IntMatrix = std::vector<std::vector<Int>>;

// Unique row Hermite normal form with zero rows dropped.  Row operations are
// unimodular, so the row span is preserved.
IntMatrix hnf(IntMatrix m);

// As hnf(), but zero rows are kept at the bottom and *transform is set to a
// unimodular matrix with transform * input = result.
IntMatrix hnf_with_transform(IntMatrix m, IntMatrix* transform);

// Nonzero Smith invariant factors d1 | d2 | ... of an integer matrix.
std::vector<Int> smith_invariants(IntMatrix m);

// A sublattice of Z^ambient given by a (not necessarily independent) list of
// spanning vectors.  The HNF basis is computed on first use and cached.
class IntegerLattice {
  public:
    IntegerLattice(int ambient, IntMatrix generators);

    int ambient() const { return ambient_; }
    const IntMatrix& generators() const { return gens_; }
    const IntMatrix& hnf_basis() const;  // cached, unique
    int rank() const { return static_cast<int>(hnf_basis().size()); }

    bool contains(const std::vector<Int>& v) const;

  private:
    int ambient_;
    IntMatrix gens_;
    mutable std::optional<IntMatrix> hnf_;
};

// Index [B : A] for A a sublattice of B.  Throws if A is not contained in B;
// returns nullopt (infinite index) when rank(A) < rank(B).  Computed as the
// product of the Smith invariant factors of A's coordinates in B's HNF basis.
std::optional<Int> sublattice_index(const IntegerLattice& a, const IntegerLattice& b);

// Basis of the left kernel { x : x * m = 0 } as a lattice in Z^rows.  The
// kernel of an integer matrix is saturated, so this is the full kernel
// lattice, not a finite-index sublattice of it.
IntegerLattice left_kernel(const IntMatrix& m, int rows, int cols);

} // namespace nsq
