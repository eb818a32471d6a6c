#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nsq/algebra.hpp"

using namespace nsq;

namespace {

AlgebraElement z(std::initializer_list<int> parts) {
    return z_monomial(Composition(std::vector<int>(parts)));
}

AlgebraElement random_element(std::mt19937_64& rng, Alphabet a, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> len(0, 3), idx(1, 3), co(-3, 3);
    AlgebraElement e;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        LWord w;
        int m = len(rng);
        for (int i = 0; i < m; ++i) w.push_back(Letter{a, idx(rng)});
        e = add(e, AlgebraElement::monomial(w, Rat(co(rng))));
    }
    return e;
}

// The Z-curve 1 + Z_1 t + Z_2 t^2 + ... up to the bound.
Series z_curve(int bound) {
    Series s(bound);
    s.coeff[0] = AlgebraElement::one();
    for (int d = 1; d <= bound; ++d) s.coeff[d] = z_monomial(Composition{d});
    return s;
}

} // namespace

TEST_CASE("element arithmetic basics") {
    AlgebraElement a = add(z({1}), z({2}));
    CHECK(concat_product(a, z({1})) == add(z({1, 1}), z({2, 1})));
    CHECK(bracket(z({1}), z({2})) == sub(z({1, 2}), z({2, 1})));
    CHECK(sub(a, a).is_zero());
    CHECK(scalar_multiply(Rat(0), a).is_zero());
    CHECK(coefficient(a, letter_word(Alphabet::Z, Composition{2})) == 1);
    CHECK(coefficient(a, letter_word(Alphabet::Z, Composition{3})) == 0);
    CHECK(concat_product(AlgebraElement::one(), a) == a);
    CHECK(concat_product(a, AlgebraElement::one()) == a);
    CHECK(concat_product(AlgebraElement::zero(), a).is_zero());
}

TEST_CASE("canonical term order is deterministic") {
    // length first, then letterwise
    AlgebraElement e = add(add(z({1, 1, 1}), z({3})), z({1, 2}));
    std::vector<Composition> seen;
    for (const auto& [w, c] : e.terms) seen.push_back(word_to_composition(w));
    REQUIRE(seen.size() == 3);
    CHECK(seen[0] == Composition{3});
    CHECK(seen[1] == Composition{1, 2});
    CHECK(seen[2] == Composition{1, 1, 1});
    CHECK(to_string(e) == "Z([3]) + Z([1,2]) + Z([1,1,1])");
}

TEST_CASE("alphabet families") {
    AlgebraElement zu = z({1});
    AlgebraElement u = AlgebraElement::monomial(letter_word(Alphabet::U, Composition{1}));
    AlgebraElement x = AlgebraElement::monomial(letter_word(Alphabet::X, Composition{1}));
    AlgebraElement y = AlgebraElement::monomial(letter_word(Alphabet::Y, Composition{2}));
    CHECK_THROWS_AS(concat_product(zu, u), std::invalid_argument);
    CHECK_THROWS_AS(concat_product(u, x), std::invalid_argument);
    AlgebraElement xy = concat_product(x, y);  // {X, Y} is one family
    CHECK(xy.terms.size() == 1);
    CHECK(element_family(xy.terms) == LetterFamily::xy);
    // scalars are neutral
    CHECK(concat_product(AlgebraElement::one(), u) == u);
}

TEST_CASE("structure: associativity, Jacobi, anti-automorphism (randomized)") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        AlgebraElement a = random_element(rng, Alphabet::Z);
        AlgebraElement b = random_element(rng, Alphabet::Z);
        AlgebraElement c = random_element(rng, Alphabet::Z);
        CHECK(concat_product(concat_product(a, b), c) ==
              concat_product(a, concat_product(b, c)));
        CHECK(concat_product(add(a, b), c) ==
              add(concat_product(a, c), concat_product(b, c)));
        // Jacobi identity
        AlgebraElement j = add(add(bracket(a, bracket(b, c)), bracket(b, bracket(c, a))),
                               bracket(c, bracket(a, b)));
        CHECK(j.is_zero());
        CHECK(bracket(a, a).is_zero());
        CHECK(add(bracket(a, b), bracket(b, a)).is_zero());
        // reversal is an anti-automorphism and an involution
        CHECK(reverse_words(concat_product(a, b)) ==
              concat_product(reverse_words(b), reverse_words(a)));
        CHECK(reverse_words(reverse_words(a)) == a);
    }
}

TEST_CASE("homogeneity and integrality") {
    AlgebraElement h = add(z({1, 2}), z({3}));
    int w = 0;
    CHECK(is_homogeneous(h, &w));
    CHECK(w == 3);
    CHECK(!is_homogeneous(add(h, z({1}))));
    CHECK(max_weight(add(h, z({1}))) == 3);
    CHECK(weight_part(add(h, z({1})), 3) == h);
    CHECK(weight_part(add(h, z({1})), 1) == z({1}));
    CHECK(is_integral(h));
    CHECK(!is_integral(scalar_multiply(Rat(1, 2), h)));
}

TEST_CASE("tensor arithmetic") {
    TensorElement t = simple_tensor(z({1}), z({2}));
    TensorElement s = simple_tensor(z({2}), z({1}));
    CHECK(tensor_add(t, s) == tensor_add(s, t));
    CHECK(tensor_sub(t, t).is_zero());
    // (a (x) b)(c (x) d) = ac (x) bd
    CHECK(tensor_multiply(t, s) == simple_tensor(z({1, 2}), z({2, 1})));
    // bilinearity
    TensorElement lhs = tensor_multiply(tensor_add(t, s), t);
    TensorElement rhs = tensor_add(tensor_multiply(t, t), tensor_multiply(s, t));
    CHECK(lhs == rhs);
    // tensor_map applies a linear map to both legs
    TensorElement doubled = tensor_map(t, [](const AlgebraElement& e) {
        return scalar_multiply(Rat(2), e);
    });
    CHECK(doubled == tensor_scalar_multiply(Rat(4), t));
}

TEST_CASE("series inversion: frozen low degrees and two-sided identity") {
    Series zc = z_curve(6);
    Series inv = series_invert(zc);
    CHECK(inv.coeff[1] == negate(z({1})));
    CHECK(inv.coeff[2] == sub(z({1, 1}), z({2})));
    CHECK(inv.coeff[3] ==
          add(sub(add(z({1, 2}), z({2, 1})), z({3})), negate(z({1, 1, 1}))));
    CHECK(series_multiply(zc, inv) == series_one(6));
    CHECK(series_multiply(inv, zc) == series_one(6));

    Series bad(3);
    bad.coeff[0] = scalar_multiply(Rat(2), AlgebraElement::one());
    CHECK_THROWS_AS(series_invert(bad), std::invalid_argument);
}

TEST_CASE("biseries: embedding, product, inverse, bound checks") {
    Series zc = z_curve(4);
    BiSeries s = biseries_in_s(zc), t = biseries_in_t(zc);
    CHECK(s.at(2, 0) == z({2}));
    CHECK(s.at(0, 2).is_zero());
    CHECK(t.at(0, 3) == z({3}));

    BiSeries st = biseries_multiply(s, t);
    CHECK(st.at(1, 1) == z({1, 1}));
    BiSeries ts = biseries_multiply(t, s);
    CHECK(ts.at(1, 1) == z({1, 1}));  // same word: letters concatenate as Z_1 Z_1

    BiSeries inv = biseries_invert(st);
    CHECK(biseries_multiply(st, inv) == biseries_one(4));
    CHECK(biseries_multiply(inv, st) == biseries_one(4));

    BiSeries other(3);
    CHECK_THROWS_AS(biseries_multiply(s, other), std::invalid_argument);
    CHECK_THROWS_AS(biseries_invert(BiSeries(2)), std::invalid_argument);
}

TEST_CASE("substitute_sum gives binomial coefficients") {
    BiSeries zs = substitute_sum(z_curve(5));
    CHECK(zs.at(2, 1) == scalar_multiply(Rat(3), z({3})));
    CHECK(zs.at(1, 1) == scalar_multiply(Rat(2), z({2})));
    CHECK(zs.at(0, 4) == z({4}));
    CHECK(zs.at(0, 0) == AlgebraElement::one());
    // Specialising t = 0 recovers the original series.
    for (int d = 0; d <= 5; ++d) CHECK(zs.at(d, 0) == z_curve(5).coeff[d]);
}
