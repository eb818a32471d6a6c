#include "nsq/primitives.hpp"

#include <mutex>
#include <stdexcept>

#include "nsq/isobaric.hpp"
#include "nsq/nsymm.hpp"

namespace nsq {

AlgebraElement curve_newton(const std::vector<AlgebraElement>& d, int k) {
    if (k < 1) throw std::invalid_argument("curve_newton: k must be >= 1");
    if (static_cast<int>(d.size()) <= k)
        throw std::invalid_argument("curve_newton: sequence too short");
    if (d[0] != AlgebraElement::one())
        throw std::invalid_argument("curve_newton: entry 0 must hold 1");
    std::vector<AlgebraElement> p(k + 1);
    for (int m = 1; m <= k; ++m) {
        AlgebraElement acc = scalar_multiply(Rat(m), d[m]);
        for (int j = 1; j < m; ++j) acc = sub(acc, concat_product(d[j], p[m - j]));
        p[m] = acc;
    }
    return p[k];
}

std::vector<AlgebraElement> build_dps(const Composition& w, int top) {
    if (!is_lyndon(w) || gcd_of_parts(w) != 1)
        throw std::invalid_argument("build_dps: want a reduced Lyndon word");
    static std::map<Composition, std::vector<AlgebraElement>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(w);
        if (it != cache.end() && static_cast<int>(it->second.size()) > top)
            return {it->second.begin(), it->second.begin() + top + 1};
    }
    std::vector<AlgebraElement> d(top + 1);
    d[0] = AlgebraElement::one();
    if (w.length() == 1) {
        for (int r = 1; r <= top; ++r) d[r] = z_monomial(Composition{r});
    } else {
        auto [left, right] = canonical_factorization(w);
        const int gl = gcd_of_parts(left), gr = gcd_of_parts(right);
        std::vector<AlgebraElement> dl = build_dps(reduce(left), top * gl);
        std::vector<AlgebraElement> dr = build_dps(reduce(right), top * gr);
        for (int r = 1; r <= top; ++r)
            d[r] = substitute_dps(commutator_entry(r * gl, r * gr), dl, dr);
    }
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(w);
    if (it == cache.end() || it->second.size() < d.size()) cache[w] = d;
    return d;
}

AlgebraElement build_P(const Composition& alpha) {
    if (!is_lyndon(alpha)) throw std::invalid_argument("build_P: word is not Lyndon");
    const int g = gcd_of_parts(alpha);
    return curve_newton(build_dps(reduce(alpha), g), g);
}

IntMatrix element_coords(const std::vector<AlgebraElement>& els, int n) {
    const std::vector<Composition> words = enumerate_compositions(n);
    IntMatrix rows;
    rows.reserve(els.size());
    for (const AlgebraElement& e : els) {
        int w = 0;
        if (!is_homogeneous(e, &w) || (!e.is_zero() && w != n))
            throw std::invalid_argument("element_coords: not homogeneous of the weight");
        if (!is_integral(e))
            throw std::invalid_argument("element_coords: non-integral coefficients");
        std::vector<Int> row;
        row.reserve(words.size());
        for (const Composition& a : words)
            row.push_back(coefficient(e, letter_word(Alphabet::Z, a)).get_num());
        rows.push_back(std::move(row));
    }
    return rows;
}

IntegerLattice prim_basis_span(int n) {
    std::vector<AlgebraElement> els;
    for (const Composition& a : enumerate_lyndon(n)) els.push_back(build_P(a));
    return IntegerLattice(1 << (n - 1), element_coords(els, n));
}

IntegerLattice frlie_span(int n) {
    std::vector<AlgebraElement> els;
    for (const Composition& a : enumerate_lyndon(n)) els.push_back(lyndon_bracket(a));
    return IntegerLattice(1 << (n - 1), element_coords(els, n));
}

IntegerLattice primitive_lattice(int n) {
    if (n < 1) throw std::invalid_argument("primitive_lattice: n must be >= 1");
    const std::vector<Composition> words = enumerate_compositions(n);
    const int rows = static_cast<int>(words.size());
    // columns: pairs (nonempty left, nonempty right) of total weight n
    std::vector<std::vector<Composition>> lists(n + 1);
    for (int i = 1; i < n; ++i) lists[i] = enumerate_compositions(i);
    int cols = 0;
    std::map<std::pair<Composition, Composition>, int> col_of;
    for (int i = 1; i < n; ++i)
        for (const Composition& b : lists[i])
            for (const Composition& c : lists[n - i]) col_of[{b, c}] = cols++;
    IntMatrix m(rows, std::vector<Int>(cols, 0));
    for (int r = 0; r < rows; ++r) {
        for (const auto& [k, c] : coproduct(z_monomial(words[r])).terms) {
            if (k.first.empty() || k.second.empty()) continue;
            int col = col_of.at({word_to_composition(k.first),
                                 word_to_composition(k.second)});
            m[r][col] = c.get_num();
        }
    }
    return left_kernel(m, rows, cols);
}

std::optional<Int> frlie_index(int n) {
    return sublattice_index(frlie_span(n), primitive_lattice(n));
}

} // namespace nsq
