#include "nsq/generators.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "nsq/primitives.hpp"

namespace nsq {

QElement adams_p(int n, const Composition& alpha) {
    if (n < 1) throw std::invalid_argument("adams_p: n must be >= 1");
    if (alpha.empty()) throw std::invalid_argument("adams_p: empty word");
    return QElement::word(scale(alpha, n));
}

QElement lambda_e(int n, const Composition& alpha) {
    if (n < 1) throw std::invalid_argument("lambda_e: n must be >= 1");
    if (alpha.empty()) throw std::invalid_argument("lambda_e: empty word");

    static std::map<std::pair<int, Composition>, QElement> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);

    auto key = std::make_pair(n, alpha);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    // e_0 = 1; k e_k = sum_{j=1..k} (-1)^{j-1} e_{k-j} p_j.
    std::vector<QElement> e{QElement::one()};
    for (int k = 1; k <= n; ++k) {
        QElement acc;
        for (int j = 1; j <= k; ++j) {
            QElement term = osh_product(e[k - j], adams_p(j, alpha));
            acc = (j % 2 == 1) ? q_add(acc, term) : q_sub(acc, term);
        }
        acc = q_scalar_multiply(Rat(1, k), acc);
        if (!q_is_integral(acc))
            throw std::logic_error("lambda_e: Newton recursion left a denominator");
        e.push_back(acc);
        cache[{k, alpha}] = acc;
    }
    return e[n];
}

QElement build_E(const Composition& alpha) {
    if (!is_lyndon(alpha)) throw std::invalid_argument("build_E: word is not Lyndon");
    return lambda_e(gcd_of_parts(alpha), reduce(alpha));
}

std::vector<Int> q_coords(const QElement& x, int n) {
    for (const auto& [w, c] : x.terms)
        if (w.weight() != n)
            throw std::invalid_argument("q_coords: element not homogeneous of the stated weight");
    std::vector<Int> row;
    auto comps = enumerate_compositions(n);
    row.reserve(comps.size());
    for (const auto& c : comps) {
        Rat v = q_coefficient(x, c);
        if (!is_integer(v)) throw std::invalid_argument("q_coords: non-integral coefficient");
        row.push_back(v.get_num());
    }
    return row;
}

// Lyndon words of weight 1..n; the by-weight enumeration is already wll.
static std::vector<Composition> lyndon_up_to(int n) {
    std::vector<Composition> gens;
    for (int w = 1; w <= n; ++w)
        for (const auto& a : enumerate_lyndon(w)) gens.push_back(a);
    return gens;
}

static void multisets_of_weight(const std::vector<Composition>& gens, size_t idx,
                                int remaining, std::vector<int>& cur,
                                std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    if (idx == gens.size()) return;
    multisets_of_weight(gens, idx + 1, remaining, cur, out);
    if (gens[idx].weight() <= remaining) {
        cur.push_back(static_cast<int>(idx));
        multisets_of_weight(gens, idx, remaining - gens[idx].weight(), cur, out);
        cur.pop_back();
    }
}

const EMonomialBasis& e_monomial_basis(int n) {
    if (n < 1) throw std::invalid_argument("e_monomial_basis: weight must be >= 1");

    static std::map<int, EMonomialBasis> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    auto gens = lyndon_up_to(n);
    std::vector<std::vector<int>> multisets;
    std::vector<int> cur;
    multisets_of_weight(gens, 0, n, cur, multisets);
    // Number of factors first, then lexicographic on the index lists (the
    // indices follow wll order of the generators).
    std::sort(multisets.begin(), multisets.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });

    EMonomialBasis b;
    b.weight = n;
    for (const auto& ms : multisets) {
        EMonomial mono;
        QElement prod = QElement::one();
        for (int idx : ms) {
            mono.push_back(gens[idx]);
            prod = osh_product(prod, build_E(gens[idx]));
        }
        b.monomials.push_back(std::move(mono));
        b.matrix.push_back(q_coords(prod, n));
        b.expanded.push_back(std::move(prod));
    }

    size_t dim = enumerate_compositions(n).size();
    if (b.monomials.size() != dim)
        throw std::logic_error("e_monomial_basis: monomial count differs from word count");
    IntegerLattice span(static_cast<int>(dim), b.matrix);
    const IntMatrix& h = span.hnf_basis();
    bool identity = h.size() == dim;
    for (size_t i = 0; identity && i < dim; ++i)
        for (size_t j = 0; identity && j < dim; ++j)
            if (h[i][j] != ((i == j) ? 1 : 0)) identity = false;
    if (!identity)
        throw std::logic_error("e_monomial_basis: coordinate matrix is not unimodular");

    return cache.emplace(n, std::move(b)).first->second;
}

// Inverse of the transposed basis matrix, cached per weight: coordinates of
// a weight-n element in generator monomials are (M^T)^{-1} applied to its
// word coordinates.
static const std::vector<std::vector<Rat>>& basis_inverse(int n) {
    static std::map<int, std::vector<std::vector<Rat>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const EMonomialBasis& b = e_monomial_basis(n);
    size_t N = b.monomials.size();
    std::vector<std::vector<Rat>> a(N, std::vector<Rat>(2 * N, Rat(0)));
    for (size_t i = 0; i < N; ++i) {
        for (size_t j = 0; j < N; ++j) a[i][j] = Rat(b.matrix[j][i]);
        a[i][N + i] = 1;
    }
    for (size_t col = 0; col < N; ++col) {
        size_t piv = col;
        while (piv < N && a[piv][col] == 0) ++piv;
        if (piv == N) throw std::logic_error("basis_inverse: singular matrix");
        std::swap(a[col], a[piv]);
        Rat d = a[col][col];
        for (size_t j = col; j < 2 * N; ++j) a[col][j] /= d;
        for (size_t i = 0; i < N; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = col; j < 2 * N; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<Rat>> inv(N, std::vector<Rat>(N));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) inv[i][j] = a[i][N + j];
    return cache.emplace(n, std::move(inv)).first->second;
}

EPolynomial express_in_E(const QElement& x) {
    EPolynomial out;
    if (x.is_zero()) return out;
    for (int w = 0; w <= q_max_weight(x); ++w) {
        QElement part = q_weight_part(x, w);
        if (part.is_zero()) continue;
        if (w == 0) {
            out[EMonomial{}] = q_coefficient(part, Composition{});
            continue;
        }
        const EMonomialBasis& b = e_monomial_basis(w);
        const auto& inv = basis_inverse(w);
        std::vector<Int> v = q_coords(part, w);
        size_t N = b.monomials.size();
        for (size_t i = 0; i < N; ++i) {
            Rat c(0);
            for (size_t j = 0; j < N; ++j)
                if (v[j] != 0) c += inv[i][j] * Rat(v[j]);
            if (c == 0) continue;
            if (!is_integer(c))
                throw std::logic_error("express_in_E: non-integral coordinate");
            out[b.monomials[i]] = c;
        }
    }
    return out;
}

QElement expand_E_polynomial(const EPolynomial& p) {
    QElement out;
    for (const auto& [mono, c] : p) {
        QElement prod = QElement::one();
        for (const auto& alpha : mono) prod = osh_product(prod, build_E(alpha));
        out = q_add(out, q_scalar_multiply(c, prod));
    }
    return out;
}

IntMatrix pairing_matrix(int n) {
    if (n < 1) throw std::invalid_argument("pairing_matrix: weight must be >= 1");
    auto lyn = enumerate_lyndon(n);
    IntMatrix m;
    for (const auto& alpha : lyn) {
        AlgebraElement p = build_P(alpha);
        std::vector<Int> row;
        for (const auto& beta : lyn) {
            Rat v = pairing(p, build_E(beta));
            if (!is_integer(v))
                throw std::logic_error("pairing_matrix: non-integral pairing value");
            row.push_back(v.get_num());
        }
        m.push_back(std::move(row));
    }
    return m;
}

IntegerLattice filtration_span(int i, int n, char kind) {
    if (i < 1) throw std::invalid_argument("filtration_span: level must be >= 1");
    if (n < 1) throw std::invalid_argument("filtration_span: weight must be >= 1");
    auto comps = enumerate_compositions(n);
    int ambient = static_cast<int>(comps.size());
    IntMatrix rows;
    if (kind == 'G') {
        for (size_t k = 0; k < comps.size(); ++k) {
            if (comps[k].length() > i) continue;
            std::vector<Int> row(comps.size(), Int(0));
            row[k] = 1;
            rows.push_back(std::move(row));
        }
    } else if (kind == 'F') {
        const EMonomialBasis& b = e_monomial_basis(n);
        for (size_t k = 0; k < b.monomials.size(); ++k) {
            bool shallow = true;
            for (const auto& alpha : b.monomials[k])
                if (alpha.length() > i) { shallow = false; break; }
            if (shallow) rows.push_back(b.matrix[k]);
        }
    } else {
        throw std::invalid_argument("filtration_span: kind must be 'G' or 'F'");
    }
    return IntegerLattice(ambient, std::move(rows));
}

Rat tau(int n, const QElement& x) {
    if (n < 1) throw std::invalid_argument("tau: n must be >= 1");
    Composition target({n});
    Rat total(0);
    for (const auto& [mono, c] : express_in_E(x)) {
        bool pure = true;
        for (const auto& f : mono)
            if (!(f == target)) { pure = false; break; }
        if (!pure) continue;
        bool flip = ((n - 1) % 2 == 1) && (mono.size() % 2 == 1);
        total += flip ? -c : c;
    }
    return total;
}

QElement v_phi(const Functional& phi, int n, const Composition& alpha) {
    if (n < 1) throw std::invalid_argument("v_phi: n must be >= 1");
    if (alpha.empty()) return QElement::one();
    int m = alpha.length();
    QElement out;
    for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
        // bit i set = cut after position i
        Rat coeff(1);
        Composition word;
        bool ok = true;
        int start = 0;
        for (int i = 0; i < m && ok; ++i) {
            if (i != m - 1 && !((mask >> i) & 1u)) continue;
            Composition block;
            int wt = 0;
            for (int j = start; j <= i; ++j) {
                block.parts.push_back(alpha.parts[j]);
                wt += alpha.parts[j];
            }
            start = i + 1;
            if (wt % n != 0) { ok = false; break; }
            Rat f = phi(QElement::word(block));
            if (f == 0) { ok = false; break; }
            coeff *= f;
            word.parts.push_back(wt / n);
        }
        if (ok) out = q_add(out, QElement::word(word, coeff));
    }
    return out;
}

QElement v_phi_element(const Functional& phi, int n, const QElement& x) {
    QElement out;
    for (const auto& [w, c] : x.terms)
        out = q_add(out, q_scalar_multiply(c, v_phi(phi, n, w)));
    return out;
}

QElement v_tau(int n, const QElement& x) {
    return v_phi_element([n](const QElement& q) { return tau(n, q); }, n, x);
}

SymmInP symm_multiply(const SymmInP& a, const SymmInP& b) {
    SymmInP out;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            std::vector<int> merged = pa;
            merged.insert(merged.end(), pb.begin(), pb.end());
            std::sort(merged.begin(), merged.end());
            Rat& slot = out[merged];
            slot += ca * cb;
            if (slot == 0) out.erase(merged);
        }
    return out;
}

static SymmInP symm_p(int k) { return {{{k}, Rat(1)}}; }

SymmInP symm_e(int k) {
    if (k < 0) throw std::invalid_argument("symm_e: negative index");
    static std::vector<SymmInP> cache{{{{}, Rat(1)}}};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    for (int m = static_cast<int>(cache.size()); m <= k; ++m) {
        SymmInP acc;
        for (int j = 1; j <= m; ++j) {
            SymmInP term = symm_multiply(cache[m - j], symm_p(j));
            for (const auto& [part, c] : term) {
                Rat& slot = acc[part];
                slot += (j % 2 == 1 ? c : -c) / m;
                if (slot == 0) acc.erase(part);
            }
        }
        cache.push_back(std::move(acc));
    }
    return cache[k];
}

SymmInP symm_h(int k) {
    if (k < 0) throw std::invalid_argument("symm_h: negative index");
    static std::vector<SymmInP> cache{{{{}, Rat(1)}}};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    for (int m = static_cast<int>(cache.size()); m <= k; ++m) {
        SymmInP acc;
        for (int j = 1; j <= m; ++j) {
            SymmInP term = symm_multiply(cache[m - j], symm_p(j));
            for (const auto& [part, c] : term) {
                Rat& slot = acc[part];
                slot += c / m;
                if (slot == 0) acc.erase(part);
            }
        }
        cache.push_back(std::move(acc));
    }
    return cache[k];
}

SymmInP symm_v(int n, const SymmInP& f) {
    if (n < 1) throw std::invalid_argument("symm_v: n must be >= 1");
    SymmInP out;
    for (const auto& [part, c] : f) {
        bool divisible = true;
        for (int p : part)
            if (p % n != 0) { divisible = false; break; }
        if (!divisible) continue;
        std::vector<int> scaled;
        scaled.reserve(part.size());
        for (int p : part) scaled.push_back(p / n);
        Rat factor(1);
        for (size_t i = 0; i < part.size(); ++i) factor *= n;
        Rat& slot = out[scaled];
        slot += c * factor;
        if (slot == 0) out.erase(scaled);
    }
    return out;
}

QElement symm_to_q(const SymmInP& f) {
    QElement out;
    for (const auto& [part, c] : f) {
        QElement prod = QElement::one();
        for (int p : part) prod = osh_product(prod, QElement::word(Composition({p})));
        out = q_add(out, q_scalar_multiply(c, prod));
    }
    return out;
}

QElement q_complete(int k) {
    if (k < 0) throw std::invalid_argument("q_complete: negative weight");
    if (k == 0) return QElement::one();
    QElement out;
    for (const auto& a : enumerate_compositions(k)) out = q_add(out, QElement::word(a));
    return out;
}

QElement q_elementary(int k) {
    if (k < 0) throw std::invalid_argument("q_elementary: negative weight");
    return QElement::word(Composition(std::vector<int>(k, 1)));
}

SuiteReport verschiebung_suite(int n, int maxweight) {
    if (n < 1 || maxweight < 1)
        throw std::invalid_argument("verschiebung_suite: n and maxweight must be >= 1");
    SuiteReport rep;
    rep.n = n;
    rep.maxweight = maxweight;
    auto add = [&rep](const std::string& name, bool pass, const std::string& witness) {
        rep.clauses.push_back({name, pass, witness});
    };

    // Leading term: v_n of a length-m word, minus n^m times the scaled-down
    // word when n divides every part, has only words of length < m.
    {
        bool ok = true;
        std::string wit;
        int count = 0;
        for (int w = 1; w <= maxweight && ok; ++w)
            for (const auto& a : enumerate_compositions(w)) {
                QElement rem = v_tau(n, QElement::word(a));
                if (auto down = scale_div(a, n)) {
                    Rat lead(1);
                    for (int i = 0; i < a.length(); ++i) lead *= n;
                    rem = q_sub(rem, QElement::word(*down, lead));
                }
                for (const auto& [word, c] : rem.terms)
                    if (word.length() >= a.length()) {
                        ok = false;
                        wit = "excess term " + to_string(word) + " in v(" + to_string(a) + ")";
                        break;
                    }
                ++count;
                if (!ok) break;
            }
        if (ok) wit = std::to_string(count) + " words checked";
        add("leading-term", ok, wit);
    }

    // Restriction to the symmetric subring: agree with the classical
    // Verschiebung (power-sum oracle) on elementary and complete elements.
    {
        bool ok = true;
        std::string wit;
        int count = 0;
        for (int k = 1; k <= maxweight && ok; ++k) {
            if (!(v_tau(n, q_elementary(k)) == symm_to_q(symm_v(n, symm_e(k))))) {
                ok = false;
                wit = "elementary mismatch at weight " + std::to_string(k);
            }
            if (ok && !(v_tau(n, q_complete(k)) == symm_to_q(symm_v(n, symm_h(k))))) {
                ok = false;
                wit = "complete mismatch at weight " + std::to_string(k);
            }
            count += 2;
        }
        if (ok) wit = std::to_string(count) + " elements checked";
        add("symm-restrict", ok, wit);
    }

    // Commutation with v_2 and v_3 on the spanning monomials of the second
    // filtration (generator index words of length <= 2).
    {
        bool ok = true;
        std::string wit;
        int count = 0;
        for (int w = 1; w <= maxweight && ok; ++w) {
            const EMonomialBasis& b = e_monomial_basis(w);
            for (size_t k = 0; k < b.monomials.size() && ok; ++k) {
                bool shallow = true;
                for (const auto& alpha : b.monomials[k])
                    if (alpha.length() > 2) { shallow = false; break; }
                if (!shallow) continue;
                for (int m : {2, 3}) {
                    QElement ab = v_tau(n, v_tau(m, b.expanded[k]));
                    QElement ba = v_tau(m, v_tau(n, b.expanded[k]));
                    if (!(ab == ba)) {
                        ok = false;
                        wit = "order mismatch with m=" + std::to_string(m) +
                              " at weight " + std::to_string(w);
                        break;
                    }
                    ++count;
                }
            }
        }
        if (ok) wit = std::to_string(count) + " compositions checked";
        add("commute-f2", ok, wit);
    }

    // Section modulo the filtration: v_n(f_n(alpha)) - n^len(alpha) alpha
    // lies in the span one filtration level down (is zero for length 1).
    {
        bool ok = true;
        std::string wit;
        int count = 0;
        for (int w = 1; n * w <= maxweight && ok; ++w)
            for (const auto& a : enumerate_compositions(w)) {
                QElement lhs = v_tau(n, frobenius_q(n, QElement::word(a)));
                Rat lead(1);
                for (int i = 0; i < a.length(); ++i) lead *= n;
                QElement diff = q_sub(lhs, QElement::word(a, lead));
                bool member;
                if (a.length() == 1) {
                    member = diff.is_zero();
                } else if (diff.is_zero()) {
                    member = true;
                } else {
                    member = filtration_span(a.length() - 1, w, 'F')
                                 .contains(q_coords(diff, w));
                }
                if (!member) {
                    ok = false;
                    wit = "remainder escapes the filtration at " + to_string(a);
                    break;
                }
                ++count;
            }
        if (ok) wit = std::to_string(count) + " words checked";
        add("section-mod-f", ok, wit);
    }

    rep.all_pass = true;
    for (const auto& c : rep.clauses) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

} // namespace nsq
