#include "nsq/qsymm.hpp"

#include <mutex>
#include <stdexcept>

namespace nsq {

QElement QElement::one() {
    QElement e;
    e.terms[Composition{}] = 1;
    return e;
}

QElement QElement::word(Composition a, Rat c) {
    QElement e;
    if (c != 0) e.terms[std::move(a)] = std::move(c);
    return e;
}

namespace {

void q_add_term(QElement& e, const Composition& w, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = e.terms.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) e.terms.erase(it);
    }
}

} // namespace

QElement q_add(const QElement& a, const QElement& b) {
    QElement r = a;
    for (const auto& [w, c] : b.terms) q_add_term(r, w, c);
    return r;
}

QElement q_sub(const QElement& a, const QElement& b) {
    QElement r = a;
    for (const auto& [w, c] : b.terms) q_add_term(r, w, -c);
    return r;
}

QElement q_negate(const QElement& a) {
    QElement r = a;
    for (auto& [w, c] : r.terms) c = -c;
    return r;
}

QElement q_scalar_multiply(const Rat& c, const QElement& a) {
    if (c == 0) return {};
    QElement r = a;
    for (auto& [w, x] : r.terms) x *= c;
    return r;
}

Rat q_coefficient(const QElement& a, const Composition& w) {
    auto it = a.terms.find(w);
    return it == a.terms.end() ? Rat(0) : it->second;
}

bool q_is_integral(const QElement& a) {
    for (const auto& [w, c] : a.terms)
        if (!is_integer(c)) return false;
    return true;
}

bool q_is_homogeneous(const QElement& a, int* weight) {
    int w = -1;
    for (const auto& [word, c] : a.terms) {
        int ww = word.weight();
        if (w == -1) w = ww;
        else if (w != ww) return false;
    }
    if (weight) *weight = w;
    return true;
}

int q_max_weight(const QElement& a) {
    int w = 0;
    for (const auto& [word, c] : a.terms) w = std::max(w, word.weight());
    return w;
}

QElement q_weight_part(const QElement& a, int w) {
    QElement r;
    for (const auto& [word, c] : a.terms)
        if (word.weight() == w) r.terms[word] = c;
    return r;
}

std::string to_string(const QElement& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : a.terms) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (w.empty()) out += mag.get_str();
        else if (mag == 1) out += to_string(w);
        else out += mag.get_str() + "*" + to_string(w);
    }
    return out;
}

namespace {

// Word-level products, memoized.  Both products are commutative, so cache
// keys are normalized with the smaller word first.
using WordPair = std::pair<Composition, Composition>;

QElement osh_words(const Composition& a, const Composition& b);
QElement shuffle_words(const Composition& a, const Composition& b);

QElement prepend(int head, const QElement& x) {
    QElement r;
    for (const auto& [w, c] : x.terms) {
        Composition p;
        p.parts.reserve(w.parts.size() + 1);
        p.parts.push_back(head);
        p.parts.insert(p.parts.end(), w.parts.begin(), w.parts.end());
        r.terms[p] = c;  // distinct heads never collide within one call
    }
    return r;
}

template <typename F>
QElement memo_word_product(const Composition& a, const Composition& b, F&& compute,
                           std::map<WordPair, QElement>& cache, std::mutex& mu) {
    const bool swapped = compare_wll(b, a) < 0;
    WordPair key = swapped ? WordPair{b, a} : WordPair{a, b};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    QElement r = compute(key.first, key.second);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::move(key), r);
    return r;
}

QElement osh_words_impl(const Composition& a, const Composition& b) {
    if (a.empty()) return QElement::word(b);
    if (b.empty()) return QElement::word(a);
    Composition ta(std::vector<int>(a.parts.begin() + 1, a.parts.end()));
    Composition tb(std::vector<int>(b.parts.begin() + 1, b.parts.end()));
    QElement r = prepend(a.parts[0], osh_words(ta, b));
    r = q_add(r, prepend(b.parts[0], osh_words(a, tb)));
    r = q_add(r, prepend(a.parts[0] + b.parts[0], osh_words(ta, tb)));
    return r;
}

QElement osh_words(const Composition& a, const Composition& b) {
    static std::map<WordPair, QElement> cache;
    static std::mutex mu;
    return memo_word_product(a, b, osh_words_impl, cache, mu);
}

QElement shuffle_words_impl(const Composition& a, const Composition& b) {
    if (a.empty()) return QElement::word(b);
    if (b.empty()) return QElement::word(a);
    Composition ta(std::vector<int>(a.parts.begin() + 1, a.parts.end()));
    Composition tb(std::vector<int>(b.parts.begin() + 1, b.parts.end()));
    QElement r = prepend(a.parts[0], shuffle_words(ta, b));
    r = q_add(r, prepend(b.parts[0], shuffle_words(a, tb)));
    return r;
}

QElement shuffle_words(const Composition& a, const Composition& b) {
    static std::map<WordPair, QElement> cache;
    static std::mutex mu;
    return memo_word_product(a, b, shuffle_words_impl, cache, mu);
}

} // namespace

QElement osh_product(const QElement& a, const QElement& b) {
    QElement r;
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            QElement p = osh_words(wa, wb);
            Rat c = ca * cb;
            for (const auto& [w, pc] : p.terms) q_add_term(r, w, c * pc);
        }
    return r;
}

QElement shuffle_product(const QElement& a, const QElement& b) {
    QElement r;
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            QElement p = shuffle_words(wa, wb);
            Rat c = ca * cb;
            for (const auto& [w, pc] : p.terms) q_add_term(r, w, c * pc);
        }
    return r;
}

namespace {

void qt_add_term(QTensor& t, const std::pair<Composition, Composition>& k, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = t.terms.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t.terms.erase(it);
    }
}

} // namespace

QTensor cut_coproduct(const QElement& a) {
    QTensor t;
    for (const auto& [w, c] : a.terms) {
        for (int i = 0; i <= w.length(); ++i) {
            Composition pre(std::vector<int>(w.parts.begin(), w.parts.begin() + i));
            Composition suf(std::vector<int>(w.parts.begin() + i, w.parts.end()));
            qt_add_term(t, {pre, suf}, c);
        }
    }
    return t;
}

QTensor q_simple_tensor(const QElement& a, const QElement& b) {
    QTensor t;
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) qt_add_term(t, {wa, wb}, ca * cb);
    return t;
}

QTensor q_tensor_add(const QTensor& a, const QTensor& b) {
    QTensor r = a;
    for (const auto& [k, c] : b.terms) qt_add_term(r, k, c);
    return r;
}

QTensor q_tensor_sub(const QTensor& a, const QTensor& b) {
    QTensor r = a;
    for (const auto& [k, c] : b.terms) qt_add_term(r, k, -c);
    return r;
}

QTensor q_tensor_map(const QTensor& t,
                     const std::function<QElement(const QElement&)>& f) {
    QTensor r;
    for (const auto& [k, c] : t.terms) {
        QElement left = f(QElement::word(k.first));
        QElement right = f(QElement::word(k.second));
        for (const auto& [wl, cl] : left.terms)
            for (const auto& [wr, cr] : right.terms)
                qt_add_term(r, {wl, wr}, c * cl * cr);
    }
    return r;
}

std::string to_string(const QTensor& t) {
    if (t.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : t.terms) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono = to_string(k.first) + " (x) " + to_string(k.second);
        if (mag == 1) out += mono;
        else out += mag.get_str() + "*" + mono;
    }
    return out;
}

Rat pairing(const AlgebraElement& x, const QElement& y) {
    Rat total = 0;
    for (const auto& [w, c] : x.terms) {
        Composition idx = word_to_composition(w);  // enforces Z alphabet
        auto it = y.terms.find(idx);
        if (it != y.terms.end()) total += c * it->second;
    }
    return total;
}

QElement frobenius_q(int n, const QElement& a) {
    if (n < 1) throw std::invalid_argument("frobenius_q: n must be >= 1");
    QElement r;
    for (const auto& [w, c] : a.terms) q_add_term(r, scale(w, n), c);
    return r;
}

RealizedPolynomial poly_add(const RealizedPolynomial& a, const RealizedPolynomial& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("poly_add: nvars mismatch");
    RealizedPolynomial r = a;
    for (const auto& [e, c] : b.terms) {
        auto [it, fresh] = r.terms.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

RealizedPolynomial poly_multiply(const RealizedPolynomial& a,
                                 const RealizedPolynomial& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("poly_multiply: nvars mismatch");
    RealizedPolynomial r;
    r.nvars = a.nvars;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e = ea;
            for (int i = 0; i < a.nvars; ++i) e[i] += eb[i];
            auto [it, fresh] = r.terms.emplace(std::move(e), ca * cb);
            if (!fresh) {
                it->second += ca * cb;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    return r;
}

std::string to_string(const RealizedPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono;
        for (int i = 0; i < p.nvars; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) mono = "1";
        if (mag == 1 && mono != "1") out += mono;
        else if (mono == "1") out += mag.get_str();
        else out += mag.get_str() + "*" + mono;
    }
    return out;
}

RealizedPolynomial realize(const Composition& a, int nvars) {
    if (nvars < 0) throw std::invalid_argument("realize: negative variable count");
    RealizedPolynomial p;
    p.nvars = nvars;
    const int m = a.length();
    if (m > nvars) return p;  // too few variables: zero
    // Walk all strictly increasing index tuples i_1 < ... < i_m.
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        std::vector<int> expo(nvars, 0);
        for (int i = 0; i < m; ++i) expo[idx[i]] = a.parts[i];
        p.terms[expo] = 1;
        int k = m - 1;
        while (k >= 0 && idx[k] == nvars - m + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int i = k + 1; i < m; ++i) idx[i] = idx[i - 1] + 1;
    }
    return p;
}

RealizedPolynomial realize_element(const QElement& a, int nvars) {
    RealizedPolynomial p;
    p.nvars = nvars;
    for (const auto& [w, c] : a.terms) {
        RealizedPolynomial m = realize(w, nvars);
        for (auto& [e, x] : m.terms) x *= c;
        p = poly_add(p, m);
    }
    return p;
}

} // namespace nsq
