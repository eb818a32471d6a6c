#include "nsq/algebra.hpp"

#include <stdexcept>

namespace nsq {

char alphabet_name(Alphabet a) {
    switch (a) {
        case Alphabet::Z: return 'Z';
        case Alphabet::X: return 'X';
        case Alphabet::Y: return 'Y';
        case Alphabet::U: return 'U';
    }
    throw std::logic_error("alphabet_name: bad tag");
}

int word_weight(const LWord& w) {
    int s = 0;
    for (const Letter& l : w) s += l.index;
    return s;
}

LetterFamily word_family(const LWord& w) {
    LetterFamily f = LetterFamily::neutral;
    for (const Letter& l : w) {
        LetterFamily g = (l.tag == Alphabet::Z)   ? LetterFamily::z
                         : (l.tag == Alphabet::U) ? LetterFamily::u
                                                  : LetterFamily::xy;
        if (f == LetterFamily::neutral) f = g;
        else if (f != g)
            throw std::invalid_argument("word mixes alphabet families");
    }
    return f;
}

LetterFamily element_family(const std::map<LWord, Rat, LWordLess>& terms) {
    LetterFamily f = LetterFamily::neutral;
    for (const auto& [w, c] : terms) {
        LetterFamily g = word_family(w);
        if (g == LetterFamily::neutral) continue;
        if (f == LetterFamily::neutral) f = g;
        else if (f != g)
            throw std::invalid_argument("element mixes alphabet families");
    }
    return f;
}

AlgebraElement AlgebraElement::one() {
    AlgebraElement e;
    e.terms[LWord{}] = 1;
    return e;
}

AlgebraElement AlgebraElement::monomial(LWord w, Rat c) {
    AlgebraElement e;
    if (c != 0) e.terms[std::move(w)] = std::move(c);
    return e;
}

LWord letter_word(Alphabet a, const Composition& idx) {
    LWord w;
    w.reserve(idx.parts.size());
    for (int i : idx.parts) w.push_back(Letter{a, i});
    return w;
}

AlgebraElement z_monomial(const Composition& idx, Rat c) {
    return AlgebraElement::monomial(letter_word(Alphabet::Z, idx), std::move(c));
}

Composition word_to_composition(const LWord& w) {
    std::vector<int> parts;
    parts.reserve(w.size());
    for (const Letter& l : w) {
        if (l.tag != Alphabet::Z)
            throw std::invalid_argument("word_to_composition: non-Z letter");
        parts.push_back(l.index);
    }
    return Composition(parts);
}

namespace {

void add_term(std::map<LWord, Rat, LWordLess>& m, const LWord& w, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = m.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

} // namespace

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r = a;
    for (const auto& [w, c] : b.terms) add_term(r.terms, w, c);
    return r;
}

AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r = a;
    for (const auto& [w, c] : b.terms) add_term(r.terms, w, -c);
    return r;
}

AlgebraElement negate(const AlgebraElement& a) {
    AlgebraElement r = a;
    for (auto& [w, c] : r.terms) c = -c;
    return r;
}

AlgebraElement scalar_multiply(const Rat& c, const AlgebraElement& a) {
    if (c == 0) return {};
    AlgebraElement r = a;
    for (auto& [w, x] : r.terms) x *= c;
    return r;
}

Rat coefficient(const AlgebraElement& a, const LWord& w) {
    auto it = a.terms.find(w);
    return it == a.terms.end() ? Rat(0) : it->second;
}

AlgebraElement concat_product(const AlgebraElement& a, const AlgebraElement& b) {
    LetterFamily fa = element_family(a.terms), fb = element_family(b.terms);
    if (fa != LetterFamily::neutral && fb != LetterFamily::neutral && fa != fb)
        throw std::invalid_argument("concat_product: operands in different alphabets");
    AlgebraElement r;
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            LWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            add_term(r.terms, w, ca * cb);
        }
    return r;
}

AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) {
    return sub(concat_product(a, b), concat_product(b, a));
}

bool is_integral(const AlgebraElement& a) {
    for (const auto& [w, c] : a.terms)
        if (!is_integer(c)) return false;
    return true;
}

bool is_homogeneous(const AlgebraElement& a, int* weight) {
    int w = -1;
    for (const auto& [word, c] : a.terms) {
        int ww = word_weight(word);
        if (w == -1) w = ww;
        else if (w != ww) return false;
    }
    if (weight) *weight = w;
    return true;
}

int max_weight(const AlgebraElement& a) {
    int w = 0;
    for (const auto& [word, c] : a.terms) w = std::max(w, word_weight(word));
    return w;
}

AlgebraElement weight_part(const AlgebraElement& a, int w) {
    AlgebraElement r;
    for (const auto& [word, c] : a.terms)
        if (word_weight(word) == w) r.terms[word] = c;
    return r;
}

AlgebraElement reverse_words(const AlgebraElement& a) {
    AlgebraElement r;
    for (const auto& [word, c] : a.terms) {
        LWord w(word.rbegin(), word.rend());
        r.terms[w] = c;
    }
    return r;
}

namespace {

std::string word_string(const LWord& w) {
    if (w.empty()) return "1";
    // Pure Z-words print compactly; anything else letter by letter.
    bool pure_z = true;
    for (const Letter& l : w) pure_z = pure_z && l.tag == Alphabet::Z;
    std::string s;
    if (pure_z) {
        s = "Z([";
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(w[i].index);
        }
        s += "])";
        return s;
    }
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += alphabet_name(w[i].tag);
        s += "n(" + std::to_string(w[i].index) + ")";
    }
    return s;
}

// Shared "sum of coefficient*monomial" printer.
std::string term_sum_string(const std::vector<std::pair<std::string, Rat>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : terms) {
        Rat a = c < 0 ? Rat(-c) : c;
        if (first) {
            out += (c < 0 ? "-" : "");
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mono == "1") {
            out += a.get_str();
        } else if (a == 1) {
            out += mono;
        } else {
            out += a.get_str() + "*" + mono;
        }
    }
    return out;
}

} // namespace

std::string to_string(const AlgebraElement& a) {
    std::vector<std::pair<std::string, Rat>> parts;
    for (const auto& [w, c] : a.terms) parts.emplace_back(word_string(w), c);
    return term_sum_string(parts);
}

TensorElement simple_tensor(const AlgebraElement& a, const AlgebraElement& b) {
    TensorElement t;
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            Rat c = ca * cb;
            if (c != 0) t.terms[{wa, wb}] = c;
        }
    return t;
}

namespace {

void tensor_add_term(TensorElement& t, const std::pair<LWord, LWord>& k, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = t.terms.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t.terms.erase(it);
    }
}

} // namespace

TensorElement tensor_add(const TensorElement& a, const TensorElement& b) {
    TensorElement r = a;
    for (const auto& [k, c] : b.terms) tensor_add_term(r, k, c);
    return r;
}

TensorElement tensor_sub(const TensorElement& a, const TensorElement& b) {
    TensorElement r = a;
    for (const auto& [k, c] : b.terms) tensor_add_term(r, k, -c);
    return r;
}

TensorElement tensor_scalar_multiply(const Rat& c, const TensorElement& a) {
    if (c == 0) return {};
    TensorElement r = a;
    for (auto& [k, x] : r.terms) x *= c;
    return r;
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) {
    TensorElement r;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            LWord left = ka.first;
            left.insert(left.end(), kb.first.begin(), kb.first.end());
            LWord right = ka.second;
            right.insert(right.end(), kb.second.begin(), kb.second.end());
            tensor_add_term(r, {std::move(left), std::move(right)}, ca * cb);
        }
    return r;
}

TensorElement tensor_map(const TensorElement& t,
                         const std::function<AlgebraElement(const AlgebraElement&)>& f) {
    TensorElement r;
    for (const auto& [k, c] : t.terms) {
        AlgebraElement left = f(AlgebraElement::monomial(k.first));
        AlgebraElement right = f(AlgebraElement::monomial(k.second));
        for (const auto& [wl, cl] : left.terms)
            for (const auto& [wr, cr] : right.terms)
                tensor_add_term(r, {wl, wr}, c * cl * cr);
    }
    return r;
}

std::string to_string(const TensorElement& t) {
    std::vector<std::pair<std::string, Rat>> parts;
    for (const auto& [k, c] : t.terms)
        parts.emplace_back(word_string(k.first) + " (x) " + word_string(k.second), c);
    return term_sum_string(parts);
}

Series series_one(int bound) {
    Series s(bound);
    s.coeff[0] = AlgebraElement::one();
    return s;
}

Series series_add(const Series& a, const Series& b) {
    if (a.bound != b.bound) throw std::invalid_argument("series_add: bound mismatch");
    Series r(a.bound);
    for (int d = 0; d <= a.bound; ++d) r.coeff[d] = add(a.coeff[d], b.coeff[d]);
    return r;
}

Series series_multiply(const Series& a, const Series& b) {
    if (a.bound != b.bound)
        throw std::invalid_argument("series_multiply: bound mismatch");
    Series r(a.bound);
    for (int i = 0; i <= a.bound; ++i) {
        if (a.coeff[i].is_zero()) continue;
        for (int j = 0; i + j <= a.bound; ++j) {
            if (b.coeff[j].is_zero()) continue;
            r.coeff[i + j] = add(r.coeff[i + j], concat_product(a.coeff[i], b.coeff[j]));
        }
    }
    return r;
}

Series series_invert(const Series& a) {
    if (!(a.coeff[0] == AlgebraElement::one()))
        throw std::invalid_argument("series_invert: constant term is not 1");
    // b_0 = 1, b_n = -sum_{j=1..n} a_j b_{n-j}; right inverse, and two-sided
    // because the constant term is 1.
    Series b(a.bound);
    b.coeff[0] = AlgebraElement::one();
    for (int n = 1; n <= a.bound; ++n) {
        AlgebraElement s;
        for (int j = 1; j <= n; ++j)
            s = add(s, concat_product(a.coeff[j], b.coeff[n - j]));
        b.coeff[n] = negate(s);
    }
    return b;
}

const AlgebraElement& BiSeries::at(int i, int j) const {
    static const AlgebraElement zero;
    auto it = coeff.find({i, j});
    return it == coeff.end() ? zero : it->second;
}

void BiSeries::set(int i, int j, AlgebraElement v) {
    if (i < 0 || j < 0 || i + j > bound)
        throw std::invalid_argument("BiSeries::set: exponent out of range");
    if (v.is_zero()) coeff.erase({i, j});
    else coeff[{i, j}] = std::move(v);
}

BiSeries biseries_one(int bound) {
    BiSeries s(bound);
    s.set(0, 0, AlgebraElement::one());
    return s;
}

BiSeries biseries_multiply(const BiSeries& a, const BiSeries& b) {
    if (a.bound != b.bound)
        throw std::invalid_argument("biseries_multiply: bound mismatch");
    BiSeries r(a.bound);
    std::map<std::pair<int, int>, AlgebraElement> acc;
    for (const auto& [ea, ca] : a.coeff)
        for (const auto& [eb, cb] : b.coeff) {
            int i = ea.first + eb.first, j = ea.second + eb.second;
            if (i + j > a.bound) continue;
            auto [it, fresh] = acc.emplace(std::pair<int, int>{i, j},
                                           concat_product(ca, cb));
            if (!fresh) it->second = add(it->second, concat_product(ca, cb));
        }
    for (auto& [e, c] : acc)
        if (!c.is_zero()) r.coeff[e] = std::move(c);
    return r;
}

BiSeries biseries_invert(const BiSeries& a) {
    if (!(a.at(0, 0) == AlgebraElement::one()))
        throw std::invalid_argument("biseries_invert: constant term is not 1");
    BiSeries b(a.bound);
    b.set(0, 0, AlgebraElement::one());
    // Total-degree induction: b_(u,v) = -sum a_(j,k) b_(u-j,v-k), (j,k) != (0,0).
    for (int d = 1; d <= a.bound; ++d)
        for (int u = 0; u <= d; ++u) {
            int v = d - u;
            AlgebraElement s;
            for (const auto& [e, c] : a.coeff) {
                if (e.first == 0 && e.second == 0) continue;
                if (e.first > u || e.second > v) continue;
                const AlgebraElement& prev = b.at(u - e.first, v - e.second);
                if (prev.is_zero()) continue;
                s = add(s, concat_product(c, prev));
            }
            if (!s.is_zero()) b.set(u, v, negate(s));
        }
    return b;
}

BiSeries biseries_in_s(const Series& a) {
    BiSeries r(a.bound);
    for (int d = 0; d <= a.bound; ++d)
        if (!a.coeff[d].is_zero()) r.set(d, 0, a.coeff[d]);
    return r;
}

BiSeries biseries_in_t(const Series& a) {
    BiSeries r(a.bound);
    for (int d = 0; d <= a.bound; ++d)
        if (!a.coeff[d].is_zero()) r.set(0, d, a.coeff[d]);
    return r;
}

BiSeries substitute_sum(const Series& a) {
    BiSeries r(a.bound);
    for (int i = 0; i <= a.bound; ++i)
        for (int j = 0; i + j <= a.bound; ++j) {
            const AlgebraElement& c = a.coeff[i + j];
            if (c.is_zero()) continue;
            r.set(i, j, scalar_multiply(Rat(binomial(i + j, i)), c));
        }
    return r;
}

} // namespace nsq
