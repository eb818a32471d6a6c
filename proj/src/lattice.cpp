#include "nsq/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsq {

namespace {

size_t ncols(const IntMatrix& m) { return m.empty() ? 0 : m[0].size(); }

void check_rect(const IntMatrix& m) {
    for (const auto& r : m)
        if (r.size() != m[0].size())
            throw std::invalid_argument("matrix rows have unequal lengths");
}

// r_i -= q * r_j
void row_axpy(std::vector<Int>& ri, const std::vector<Int>& rj, const Int& q) {
    if (q == 0) return;
    for (size_t c = 0; c < ri.size(); ++c) ri[c] -= q * rj[c];
}

// Floor quotient (HNF reduction needs floor, not truncation, so that the
// reduced entry lands in [0, pivot)).
Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

IntMatrix hnf_with_transform(IntMatrix m, IntMatrix* transform) {
    check_rect(m);
    const size_t rows = m.size(), cols = ncols(m);
    IntMatrix u;
    if (transform) {
        u.assign(rows, std::vector<Int>(rows, 0));
        for (size_t i = 0; i < rows; ++i) u[i][i] = 1;
    }
    auto swap_rows = [&](size_t i, size_t j) {
        if (i == j) return;
        std::swap(m[i], m[j]);
        if (transform) std::swap(u[i], u[j]);
    };
    auto axpy = [&](size_t i, size_t j, const Int& q) {
        row_axpy(m[i], m[j], q);
        if (transform) row_axpy(u[i], u[j], q);
    };
    auto negate_row = [&](size_t i) {
        for (auto& x : m[i]) x = -x;
        if (transform)
            for (auto& x : u[i]) x = -x;
    };

    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        // Euclidean elimination below the pivot: repeatedly reduce by the row
        // with the smallest nonzero entry in this column.
        while (true) {
            size_t best = rows;
            for (size_t i = pivot_row; i < rows; ++i) {
                if (m[i][col] == 0) continue;
                if (best == rows || mpz_cmpabs(m[i][col].get_mpz_t(), m[best][col].get_mpz_t()) < 0)
                    best = i;
            }
            if (best == rows) break;  // column is zero below pivot_row
            swap_rows(pivot_row, best);
            bool cleared = true;
            for (size_t i = pivot_row + 1; i < rows; ++i) {
                if (m[i][col] == 0) continue;
                axpy(i, pivot_row, fdiv(m[i][col], m[pivot_row][col]));
                if (m[i][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (m[pivot_row][col] == 0) continue;  // no pivot in this column
        if (m[pivot_row][col] < 0) negate_row(pivot_row);
        // Reduce the entries above the pivot into [0, pivot).
        for (size_t i = 0; i < pivot_row; ++i)
            axpy(i, pivot_row, fdiv(m[i][col], m[pivot_row][col]));
        ++pivot_row;
    }
    if (transform) *transform = std::move(u);
    return m;
}

IntMatrix hnf(IntMatrix m) {
    IntMatrix h = hnf_with_transform(std::move(m), nullptr);
    while (!h.empty() && std::all_of(h.back().begin(), h.back().end(),
                                     [](const Int& x) { return x == 0; }))
        h.pop_back();
    return h;
}

std::vector<Int> smith_invariants(IntMatrix m) {
    check_rect(m);
    size_t rows = m.size(), cols = ncols(m);
    std::vector<Int> inv;
    size_t top = 0, left = 0;
    while (top < rows && left < cols) {
        // Find a nonzero entry of least absolute value in the remaining block.
        size_t pi = rows, pj = cols;
        for (size_t i = top; i < rows; ++i)
            for (size_t j = left; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                if (pi == rows || mpz_cmpabs(m[i][j].get_mpz_t(), m[pi][pj].get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break;  // block is zero
        std::swap(m[top], m[pi]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][left], m[i][pj]);

        bool clean = true;
        for (size_t i = top + 1; i < rows; ++i) {
            if (m[i][left] == 0) continue;
            row_axpy(m[i], m[top], fdiv(m[i][left], m[top][left]));
            if (m[i][left] != 0) clean = false;
        }
        for (size_t j = left + 1; j < cols; ++j) {
            if (m[top][j] == 0) continue;
            Int q = fdiv(m[top][j], m[top][left]);
            for (size_t i = top; i < rows; ++i) m[i][j] -= q * m[i][left];
            if (m[top][j] != 0) clean = false;
        }
        if (!clean) continue;  // new smaller entries appeared; repeat the block
        // Pivot must divide every remaining entry; if not, fold an offending
        // row in and repeat.
        bool divides = true;
        for (size_t i = top + 1; i < rows && divides; ++i)
            for (size_t j = left + 1; j < cols && divides; ++j)
                if (m[i][j] % m[top][left] != 0) {
                    for (size_t c = left; c < cols; ++c) m[top][c] += m[i][c];
                    divides = false;
                }
        if (!divides) continue;
        Int d = m[top][left];
        if (d < 0) d = -d;
        inv.push_back(d);
        ++top;
        ++left;
    }
    return inv;
}

IntegerLattice::IntegerLattice(int ambient, IntMatrix generators)
    : ambient_(ambient), gens_(std::move(generators)) {
    if (ambient < 0) throw std::invalid_argument("IntegerLattice: negative ambient");
    for (const auto& g : gens_)
        if (static_cast<int>(g.size()) != ambient)
            throw std::invalid_argument("IntegerLattice: generator has wrong dimension");
}

const IntMatrix& IntegerLattice::hnf_basis() const {
    if (!hnf_) hnf_ = hnf(gens_);
    return *hnf_;
}

bool IntegerLattice::contains(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("contains: wrong dimension");
    std::vector<Int> r = v;
    for (const auto& row : hnf_basis()) {
        size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        if (p == row.size()) continue;
        if (r[p] % row[p] != 0) return false;
        row_axpy(r, row, r[p] / row[p]);
    }
    return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
}

namespace {

// Coordinates of v in the HNF basis rows; nullopt when v is outside the span.
std::optional<std::vector<Int>> coords_in_hnf(const IntMatrix& basis,
                                              const std::vector<Int>& v) {
    std::vector<Int> r = v, coords(basis.size(), 0);
    for (size_t k = 0; k < basis.size(); ++k) {
        const auto& row = basis[k];
        size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        if (p == row.size()) continue;
        if (r[p] % row[p] != 0) return std::nullopt;
        coords[k] = r[p] / row[p];
        row_axpy(r, row, coords[k]);
    }
    if (!std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; }))
        return std::nullopt;
    return coords;
}

} // namespace

std::optional<Int> sublattice_index(const IntegerLattice& a, const IntegerLattice& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("sublattice_index: ambient dimensions differ");
    IntMatrix coords;
    for (const auto& g : a.generators()) {
        auto c = coords_in_hnf(b.hnf_basis(), g);
        if (!c) throw std::invalid_argument("sublattice_index: A is not inside B");
        coords.push_back(*c);
    }
    if (a.rank() < b.rank()) return std::nullopt;  // infinite index
    Int idx = 1;
    auto inv = smith_invariants(std::move(coords));
    if (static_cast<int>(inv.size()) < b.rank()) return std::nullopt;
    for (const auto& d : inv) idx *= d;
    return idx;
}

IntegerLattice left_kernel(const IntMatrix& m, int rows, int cols) {
    IntMatrix mm = m;
    if (static_cast<int>(mm.size()) != rows)
        throw std::invalid_argument("left_kernel: row count mismatch");
    for (auto& r : mm)
        if (static_cast<int>(r.size()) != cols)
            throw std::invalid_argument("left_kernel: column count mismatch");
    IntMatrix u;
    IntMatrix h = hnf_with_transform(std::move(mm), &u);
    IntMatrix kernel;
    for (size_t i = 0; i < h.size(); ++i) {
        bool zero = std::all_of(h[i].begin(), h[i].end(),
                                [](const Int& x) { return x == 0; });
        if (zero) kernel.push_back(u[i]);
    }
    return IntegerLattice(rows, std::move(kernel));
}

} // namespace nsq
