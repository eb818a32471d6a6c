#include "nsq/nsymm.hpp"

#include <mutex>
#include <stdexcept>

namespace nsq {

namespace {

TensorElement letter_coproduct(const Letter& l) {
    TensorElement t;
    if (l.tag == Alphabet::U) {
        LWord w{l};
        t.terms[{w, LWord{}}] = 1;
        t.terms[{LWord{}, w}] = 1;
        return t;
    }
    // Z, X, Y are all coefficient sequences of grouplike curves.
    for (int i = 0; i <= l.index; ++i) {
        LWord left, right;
        if (i > 0) left.push_back({l.tag, i});
        if (l.index - i > 0) right.push_back({l.tag, l.index - i});
        t.terms[{left, right}] = 1;
    }
    return t;
}

} // namespace

TensorElement coproduct(const AlgebraElement& x) {
    TensorElement out;
    for (const auto& [w, c] : x.terms) {
        TensorElement t = simple_tensor(AlgebraElement::one(), AlgebraElement::one());
        for (const Letter& l : w) t = tensor_multiply(t, letter_coproduct(l));
        out = tensor_add(out, tensor_scalar_multiply(c, t));
    }
    return out;
}

Rat counit(const AlgebraElement& x) { return coefficient(x, LWord{}); }

bool is_primitive(const AlgebraElement& x) {
    TensorElement expect = tensor_add(simple_tensor(x, AlgebraElement::one()),
                                      simple_tensor(AlgebraElement::one(), x));
    return coproduct(x) == expect;
}

bool is_dps(const std::vector<AlgebraElement>& d) {
    if (d.empty() || d[0] != AlgebraElement::one()) return false;
    for (size_t n = 1; n < d.size(); ++n) {
        TensorElement expect;
        for (size_t i = 0; i <= n; ++i)
            expect = tensor_add(expect, simple_tensor(d[i], d[n - i]));
        if (coproduct(d[n]) != expect) return false;
    }
    return true;
}

namespace {

AlgebraElement zn(int n) { return z_monomial(Composition{n}); }

// Right recursion: P_n = n Z_n - sum_{j=1}^{n-1} Z_j P_{n-j};
// left recursion mirrors it.
AlgebraElement newton_recursive(int n, bool left) {
    std::vector<AlgebraElement> p(n + 1);
    for (int m = 1; m <= n; ++m) {
        AlgebraElement acc = scalar_multiply(Rat(m), zn(m));
        for (int j = 1; j < m; ++j) {
            AlgebraElement prod = left ? concat_product(p[m - j], zn(j))
                                       : concat_product(zn(j), p[m - j]);
            acc = sub(acc, prod);
        }
        p[m] = acc;
    }
    return p[n];
}

// Series route: P_n is the t^{n-1} coefficient of Z(t)^{-1} Z'(t)
// (Z'(t) Z(t)^{-1} for the left family).
AlgebraElement newton_series(int n, bool left) {
    Series z(n);
    z.coeff[0] = AlgebraElement::one();
    for (int d = 1; d <= n; ++d) z.coeff[d] = zn(d);
    Series dz(n);
    for (int d = 0; d < n; ++d) dz.coeff[d] = scalar_multiply(Rat(d + 1), zn(d + 1));
    Series zi = series_invert(z);
    Series p = left ? series_multiply(dz, zi) : series_multiply(zi, dz);
    return p.coeff[n - 1];
}

AlgebraElement newton_checked(int n, bool left) {
    if (n < 1) throw std::invalid_argument("newton primitive: n must be >= 1");
    AlgebraElement rec = newton_recursive(n, left);
    AlgebraElement ser = newton_series(n, left);
    if (rec != ser)
        throw std::logic_error("newton primitive: recursion and series routes disagree");
    return rec;
}

} // namespace

AlgebraElement newton_P(int n) {
    static std::map<int, AlgebraElement> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, newton_checked(n, false)).first;
    return it->second;
}

AlgebraElement newton_P_prime(int n) {
    static std::map<int, AlgebraElement> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, newton_checked(n, true)).first;
    return it->second;
}

namespace {

PPolynomial pp_multiply(const PPolynomial& a, const PPolynomial& b) {
    PPolynomial r;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Rat c = ca * cb;
            auto [it, fresh] = r.emplace(concat(wa, wb), c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) r.erase(it);
            }
        }
    return r;
}

// Z_n in the P-monomial basis: Z_n = (1/n)(P_n + sum_{j=1}^{n-1} Z_j P_{n-j}).
PPolynomial z_in_P(int n) {
    static std::map<int, PPolynomial> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    for (int m = static_cast<int>(cache.size()) + 1; m <= n; ++m) {
        PPolynomial acc{{Composition{m}, Rat(1)}};
        for (int j = 1; j < m; ++j) {
            PPolynomial tail{{Composition{m - j}, Rat(1)}};
            for (const auto& [w, c] : pp_multiply(cache.at(j), tail)) acc[w] += c;
        }
        PPolynomial scaled;
        for (const auto& [w, c] : acc)
            if (c != 0) scaled[w] = c / m;
        cache.emplace(m, std::move(scaled));
    }
    return cache.at(n);
}

} // namespace

PPolynomial to_newton_basis(const AlgebraElement& x) {
    PPolynomial out;
    for (const auto& [w, c] : x.terms) {
        Composition idx = word_to_composition(w);
        PPolynomial p{{Composition{}, c}};
        for (int a : idx.parts) p = pp_multiply(p, z_in_P(a));
        for (const auto& [pw, pc] : p) {
            auto [it, fresh] = out.emplace(pw, pc);
            if (!fresh) {
                it->second += pc;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

AlgebraElement from_newton_basis(const PPolynomial& p) {
    AlgebraElement out;
    for (const auto& [w, c] : p) {
        AlgebraElement m = AlgebraElement::one();
        for (int a : w.parts) m = concat_product(m, newton_P(a));
        out = add(out, scalar_multiply(c, m));
    }
    return out;
}

AlgebraElement verschiebung_N(int n, const AlgebraElement& x) {
    if (n < 1) throw std::invalid_argument("verschiebung_N: n must be >= 1");
    AlgebraElement out;
    for (const auto& [w, c] : x.terms) {
        LWord divided;
        divided.reserve(w.size());
        bool alive = true;
        for (const Letter& l : w) {
            if (l.index % n != 0) { alive = false; break; }
            divided.push_back({l.tag, l.index / n});
        }
        if (alive) out = add(out, AlgebraElement::monomial(divided, c));
    }
    return out;
}

AlgebraElement frobenius_NQ(int n, const AlgebraElement& x) {
    if (n < 1) throw std::invalid_argument("frobenius_NQ: n must be >= 1");
    PPolynomial scaled;
    for (const auto& [w, c] : to_newton_basis(x)) scaled[scale(w, n)] += c;
    return from_newton_basis(scaled);
}

namespace {

QElement complete_h(int n) {
    static std::map<int, QElement> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        QElement h;
        for (const auto& a : enumerate_compositions(n)) h.terms[a] = 1;
        it = cache.emplace(n, std::move(h)).first;
    }
    return it->second;
}

} // namespace

QElement project_to_symm(const AlgebraElement& x) {
    QElement out;
    for (const auto& [w, c] : x.terms) {
        Composition idx = word_to_composition(w);
        QElement m = QElement::one();
        for (int a : idx.parts) m = osh_product(m, complete_h(a));
        out = q_add(out, q_scalar_multiply(c, m));
    }
    return out;
}

namespace {

AlgebraElement exp_letter(int n) {
    static std::map<int, AlgebraElement> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        AlgebraElement e;
        for (const auto& b : enumerate_compositions(n)) {
            Rat fact = 1;
            for (int k = 2; k <= b.length(); ++k) fact *= k;
            e = add(e, AlgebraElement::monomial(letter_word(Alphabet::U, b), 1 / fact));
        }
        it = cache.emplace(n, std::move(e)).first;
    }
    return it->second;
}

} // namespace

AlgebraElement exp_iso(const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& [w, c] : x.terms) {
        Composition idx = word_to_composition(w);
        AlgebraElement m = AlgebraElement::one();
        for (int a : idx.parts) m = concat_product(m, exp_letter(a));
        out = add(out, scalar_multiply(c, m));
    }
    return out;
}

AlgebraElement lyndon_bracket(const Composition& w) {
    if (!is_lyndon(w)) throw std::invalid_argument("lyndon_bracket: word is not Lyndon");
    if (w.length() == 1) return newton_P(w.parts[0]);
    auto [u, v] = canonical_factorization(w);
    return bracket(lyndon_bracket(u), lyndon_bracket(v));
}

} // namespace nsq
