#include "nsq/words.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace nsq {

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
        if (x < 1) throw std::invalid_argument("Composition: parts must be >= 1");
}

Composition::Composition(std::initializer_list<int> p)
    : Composition(std::vector<int>(p)) {}

int Composition::weight() const {
    int w = 0;
    for (int x : parts) w += x;
    return w;
}

int compare_lex(const Composition& a, const Composition& b) {
    const size_t n = std::min(a.parts.size(), b.parts.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.parts[i] != b.parts[i]) return a.parts[i] < b.parts[i] ? -1 : 1;
    }
    // Equal on the common prefix: the shorter word (a proper prefix) is smaller.
    if (a.parts.size() == b.parts.size()) return 0;
    return a.parts.size() < b.parts.size() ? -1 : 1;
}

int compare_wll(const Composition& a, const Composition& b) {
    const int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb ? -1 : 1;
    if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
    return compare_lex(a, b);
}

int compare_wl_pair(std::pair<int, int> a, std::pair<int, int> b) {
    const int sa = a.first + a.second, sb = b.first + b.second;
    if (sa != sb) return sa < sb ? -1 : 1;
    if (a.first != b.first) return a.first < b.first ? -1 : 1;
    return 0;
}

int compare(const Composition& a, const Composition& b, WordOrder order) {
    switch (order) {
        case WordOrder::lex: return compare_lex(a, b);
        case WordOrder::wll: return compare_wll(a, b);
        case WordOrder::wl_pair:
            if (a.length() != 2 || b.length() != 2)
                throw std::invalid_argument("compare: wl_pair needs length-2 words");
            return compare_wl_pair({a.parts[0], a.parts[1]}, {b.parts[0], b.parts[1]});
    }
    throw std::logic_error("compare: bad order");
}

int gcd_of_parts(const Composition& a) {
    if (a.empty())
        throw std::invalid_argument("gcd_of_parts: undefined on the empty word");
    int g = 0;
    for (int x : a.parts) g = std::gcd(g, x);
    return g;
}

Int product_of_parts(const Composition& a) {
    if (a.empty())
        throw std::invalid_argument("product_of_parts: undefined on the empty word");
    Int k = 1;
    for (int x : a.parts) k *= x;
    return k;
}

Composition reduce(const Composition& a) {
    const int g = gcd_of_parts(a);
    Composition r = a;
    for (int& x : r.parts) x /= g;
    return r;
}

Composition scale(const Composition& a, int n) {
    if (n < 1) throw std::invalid_argument("scale: factor must be >= 1");
    Composition r = a;
    for (int& x : r.parts) x *= n;
    return r;
}

std::optional<Composition> scale_div(const Composition& a, int n) {
    if (n < 1) throw std::invalid_argument("scale_div: divisor must be >= 1");
    Composition r = a;
    for (int& x : r.parts) {
        if (x % n != 0) return std::nullopt;
        x /= n;
    }
    return r;
}

Composition concat(const Composition& a, const Composition& b) {
    Composition r = a;
    r.parts.insert(r.parts.end(), b.parts.begin(), b.parts.end());
    return r;
}

bool is_lyndon(const Composition& a) {
    if (a.empty()) return false;
    for (size_t i = 1; i < a.parts.size(); ++i) {
        Composition tail(std::vector<int>(a.parts.begin() + i, a.parts.end()));
        if (compare_lex(a, tail) >= 0) return false;
    }
    return true;
}

std::pair<Composition, Composition> canonical_factorization(const Composition& a) {
    if (!is_lyndon(a) || a.length() < 2)
        throw std::invalid_argument(
            "canonical_factorization: needs a Lyndon word of length >= 2");
    // The split point is before the lexicographically least proper tail; the
    // minimum is unique because distinct tails never compare equal.
    size_t best = 1;
    Composition best_tail(std::vector<int>(a.parts.begin() + 1, a.parts.end()));
    for (size_t i = 2; i < a.parts.size(); ++i) {
        Composition tail(std::vector<int>(a.parts.begin() + i, a.parts.end()));
        if (compare_lex(tail, best_tail) < 0) {
            best = i;
            best_tail = tail;
        }
    }
    Composition head(std::vector<int>(a.parts.begin(), a.parts.begin() + best));
    return {head, best_tail};
}

namespace {

void gen_compositions(int n, std::vector<int>& cur, std::vector<Composition>& out) {
    if (n == 0) {
        out.push_back(Composition(cur));
        return;
    }
    for (int first = 1; first <= n; ++first) {
        cur.push_back(first);
        gen_compositions(n - first, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Composition> enumerate_compositions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_compositions: negative weight");
    if (n > 22)
        throw std::invalid_argument("enumerate_compositions: weight too large to list");
    std::vector<Composition> out;
    std::vector<int> cur;
    gen_compositions(n, cur, out);
    std::sort(out.begin(), out.end(),
              [](const Composition& a, const Composition& b) { return compare_wll(a, b) < 0; });
    return out;
}

std::vector<Composition> enumerate_lyndon(int n) {
    std::vector<Composition> out;
    for (const Composition& c : enumerate_compositions(n))
        if (is_lyndon(c)) out.push_back(c);
    return out;
}

long long beta(int n) {
    if (n < 1) throw std::invalid_argument("beta: weight must be >= 1");
    if (n > 60) throw std::invalid_argument("beta: weight too large");
    static std::map<int, long long> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // m * beta(m) = 2^m - 1 - sum over proper divisors d of m of d * beta(d),
    // solved bottom-up; the division is always exact.
    for (int m = 1; m <= n; ++m) {
        if (cache.count(m)) continue;
        long long rhs = (m < 63) ? ((1LL << m) - 1) : 0;
        for (int d = 1; d < m; ++d)
            if (m % d == 0) rhs -= static_cast<long long>(d) * cache.at(d);
        if (rhs % m != 0) throw std::logic_error("beta: divisor sum not divisible");
        cache[m] = rhs / m;
    }
    return cache.at(n);
}

std::string to_string(const Composition& a) {
    std::string s = "[";
    for (int i = 0; i < a.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.parts[i]);
    }
    s += "]";
    return s;
}

} // namespace nsq
