#include "nsq/isobaric.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

#include "nsq/nsymm.hpp"

namespace nsq {

Series letter_curve(Alphabet a, int bound) {
    Series s(bound);
    s.coeff[0] = AlgebraElement::one();
    for (int d = 1; d <= bound; ++d)
        s.coeff[d] = AlgebraElement::monomial(letter_word(a, Composition{d}));
    return s;
}

Series standard_curve(int bound) { return letter_curve(Alphabet::Z, bound); }

BiSeries commutator_target(const Series& x, const Series& y) {
    if (x.bound != y.bound)
        throw std::invalid_argument("commutator_target: bounds differ");
    BiSeries a = biseries_in_s(x), b = biseries_in_t(y);
    return biseries_multiply(
        biseries_multiply(biseries_invert(a), biseries_invert(b)),
        biseries_multiply(a, b));
}

BiSeries additive_target(const Series& z) {
    BiSeries a = biseries_in_s(z), b = biseries_in_t(z);
    return biseries_multiply(
        biseries_multiply(biseries_invert(a), biseries_invert(b)),
        substitute_sum(z));
}

namespace {

// Coprime direction pairs with a + b <= bound, in degree-then-left order.
std::vector<std::pair<int, int>> ray_bases(int bound) {
    std::vector<std::pair<int, int>> bases;
    for (int d = 2; d <= bound; ++d)
        for (int a = 1; a < d; ++a)
            if (std::gcd(a, d - a) == 1) bases.emplace_back(a, d - a);
    return bases;
}

} // namespace

IsobaricTable decompose(const BiSeries& target) {
    const int bound = target.bound;
    if (target.at(0, 0) != AlgebraElement::one())
        throw std::invalid_argument("decompose: constant term is not 1");
    for (int d = 1; d <= bound; ++d)
        if (!target.at(d, 0).is_zero() || !target.at(0, d).is_zero())
            throw std::invalid_argument("decompose: target is not trivial on the axes");

    const std::vector<std::pair<int, int>> bases = ray_bases(bound);
    std::map<std::pair<int, int>, size_t> base_index;
    for (size_t i = 0; i < bases.size(); ++i) base_index[bases[i]] = i;

    std::vector<BiSeries> factors(bases.size(), biseries_one(bound));
    // prefix[i] = product of factors[0 .. i-1]
    std::vector<BiSeries> prefix(bases.size() + 1, biseries_one(bound));

    IsobaricTable table;
    table.bound = bound;
    for (int d = 2; d <= bound; ++d)
        for (int u = 1; u < d; ++u) {
            const int v = d - u, g = std::gcd(u, v);
            AlgebraElement entry = sub(target.at(u, v), prefix[bases.size()].at(u, v));
            table.entries[{u, v}] = entry;
            if (entry.is_zero()) continue;
            const size_t i = base_index.at({u / g, v / g});
            factors[i].set(u, v, std::move(entry));
            for (size_t j = i; j < bases.size(); ++j)
                prefix[j + 1] = biseries_multiply(prefix[j], factors[j]);
        }
    return table;
}

BiSeries reconstruct(const IsobaricTable& table) {
    BiSeries out = biseries_one(table.bound);
    for (const auto& [a, b] : ray_bases(table.bound)) {
        BiSeries factor = biseries_one(table.bound);
        for (int r = 1; r * (a + b) <= table.bound; ++r) {
            auto it = table.entries.find({r * a, r * b});
            if (it != table.entries.end() && !it->second.is_zero())
                factor.set(r * a, r * b, it->second);
        }
        out = biseries_multiply(out, factor);
    }
    return out;
}

namespace {

// Entries do not depend on the bound they were extracted at, so each cached
// table is simply regrown when a larger total degree is requested.
const AlgebraElement& cached_entry(int u, int v, IsobaricTable& table,
                                   BiSeries (*build_target)(int)) {
    if (u < 1 || v < 1) throw std::invalid_argument("table entry: need u, v >= 1");
    if (u + v > table.bound) table = decompose(build_target(u + v));
    return table.entries.at({u, v});
}

BiSeries generic_commutator_target(int bound) {
    return commutator_target(letter_curve(Alphabet::X, bound),
                             letter_curve(Alphabet::Y, bound));
}

BiSeries standard_additive_target(int bound) {
    return additive_target(standard_curve(bound));
}

} // namespace

AlgebraElement commutator_entry(int u, int v) {
    static IsobaricTable table;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return cached_entry(u, v, table, generic_commutator_target);
}

AlgebraElement additive_entry(int u, int v) {
    static IsobaricTable table;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return cached_entry(u, v, table, standard_additive_target);
}

bool verschiebung_compat(int n, const IsobaricTable& table) {
    if (n < 1) throw std::invalid_argument("verschiebung_compat: n must be >= 1");
    for (const auto& [uv, entry] : table.entries) {
        auto [u, v] = uv;
        bool divides = u % n == 0 && v % n == 0;
        AlgebraElement expected =
            divides ? table.entries.at({u / n, v / n}) : AlgebraElement::zero();
        if (!(verschiebung_N(n, entry) == expected)) return false;
    }
    return true;
}

AlgebraElement substitute_dps(const AlgebraElement& x,
                              const std::vector<AlgebraElement>& dx,
                              const std::vector<AlgebraElement>& dy) {
    for (const auto* d : {&dx, &dy})
        if (d->empty() || (*d)[0] != AlgebraElement::one())
            throw std::invalid_argument("substitute_dps: index 0 must hold 1");
    AlgebraElement out;
    for (const auto& [w, c] : x.terms) {
        AlgebraElement m = AlgebraElement::one();
        for (const Letter& l : w) {
            const std::vector<AlgebraElement>* d = nullptr;
            if (l.tag == Alphabet::X) d = &dx;
            else if (l.tag == Alphabet::Y) d = &dy;
            else throw std::invalid_argument("substitute_dps: input must use X/Y letters");
            if (l.index >= static_cast<int>(d->size()))
                throw std::invalid_argument("substitute_dps: sequence too short");
            m = concat_product(m, (*d)[l.index]);
        }
        out = add(out, scalar_multiply(c, m));
    }
    return out;
}

} // namespace nsq
