#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nsq/nsymm.hpp"

using namespace nsq;

namespace {

Composition cw(std::initializer_list<int> parts) {
    return Composition(std::vector<int>(parts));
}

AlgebraElement zsum(std::initializer_list<std::pair<Composition, Rat>> terms) {
    AlgebraElement e;
    for (const auto& [w, c] : terms) e = add(e, z_monomial(w, c));
    return e;
}

AlgebraElement random_z(std::mt19937_64& rng, int max_terms = 3, int max_len = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> len(0, max_len), part(1, 3), co(-3, 3);
    AlgebraElement e;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<int> w(len(rng));
        for (auto& x : w) x = part(rng);
        e = add(e, z_monomial(Composition(w), Rat(co(rng))));
    }
    return e;
}

} // namespace

TEST_CASE("coproduct of the grouplike generators") {
    TensorElement t = coproduct(z_monomial(cw({2})));
    CHECK(t.terms.size() == 3);
    AlgebraElement one = AlgebraElement::one(), z1 = z_monomial(cw({1})),
                   z2 = z_monomial(cw({2}));
    TensorElement expect = tensor_add(
        tensor_add(simple_tensor(one, z2), simple_tensor(z1, z1)),
        simple_tensor(z2, one));
    CHECK(t == expect);

    // multiplicative over the free product
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 15; ++trial) {
        AlgebraElement a = random_z(rng), b = random_z(rng);
        CHECK(coproduct(concat_product(a, b)) ==
              tensor_multiply(coproduct(a), coproduct(b)));
    }

    // counit axiom: contracting the left leg with the counit recovers x
    for (int trial = 0; trial < 15; ++trial) {
        AlgebraElement x = random_z(rng);
        AlgebraElement back;
        for (const auto& [k, c] : coproduct(x).terms)
            if (k.first.empty()) back = add(back, AlgebraElement::monomial(k.second, c));
        CHECK(back == x);
        CHECK(counit(x) == coefficient(x, LWord{}));
    }

    // generic curve letters are grouplike too
    std::vector<AlgebraElement> xcurve = {AlgebraElement::one()};
    for (int n = 1; n <= 4; ++n)
        xcurve.push_back(AlgebraElement::monomial(letter_word(Alphabet::X, Composition{n})));
    CHECK(is_dps(xcurve));
}

TEST_CASE("primitivity detector") {
    CHECK(is_primitive(z_monomial(cw({1}))));
    CHECK_FALSE(is_primitive(z_monomial(cw({2}))));
    CHECK_FALSE(is_primitive(z_monomial(cw({1, 1}))));
    AlgebraElement u2 = AlgebraElement::monomial(letter_word(Alphabet::U, cw({2})));
    CHECK(is_primitive(u2));
    AlgebraElement uu = AlgebraElement::monomial(letter_word(Alphabet::U, cw({1, 2})));
    CHECK_FALSE(is_primitive(uu));
    CHECK(is_primitive(AlgebraElement::zero()));
}

TEST_CASE("divided power sequences") {
    std::vector<AlgebraElement> z = {AlgebraElement::one()};
    for (int n = 1; n <= 5; ++n) z.push_back(z_monomial(Composition{n}));
    CHECK(is_dps(z));

    // the coefficients of the inverse curve form one as well
    Series s(5);
    s.coeff[0] = AlgebraElement::one();
    for (int d = 1; d <= 5; ++d) s.coeff[d] = z_monomial(Composition{d});
    Series inv = series_invert(s);
    CHECK(is_dps(inv.coeff));

    // perturbing one entry breaks it
    std::vector<AlgebraElement> bad = z;
    bad[2] = add(bad[2], concat_product(z[1], z[1]));
    CHECK_FALSE(is_dps(bad));
    CHECK_FALSE(is_dps({}));
    CHECK_FALSE(is_dps({z_monomial(cw({1}))}));
}

TEST_CASE("Newton primitives: frozen low-weight values") {
    CHECK(newton_P(1) == z_monomial(cw({1})));
    CHECK(newton_P(2) == zsum({{cw({2}), 2}, {cw({1, 1}), -1}}));
    CHECK(newton_P(3) ==
          zsum({{cw({3}), 3}, {cw({1, 2}), -2}, {cw({2, 1}), -1}, {cw({1, 1, 1}), 1}}));
    CHECK(newton_P_prime(3) ==
          zsum({{cw({3}), 3}, {cw({1, 2}), -1}, {cw({2, 1}), -2}, {cw({1, 1, 1}), 1}}));
    CHECK(newton_P(4) == zsum({{cw({4}), 4},
                               {cw({1, 3}), -3},
                               {cw({3, 1}), -1},
                               {cw({2, 2}), -2},
                               {cw({1, 1, 2}), 2},
                               {cw({1, 2, 1}), 1},
                               {cw({2, 1, 1}), 1},
                               {cw({1, 1, 1, 1}), -1}}));
}

TEST_CASE("Newton primitives are primitive and mirror each other") {
    for (int n = 1; n <= 8; ++n) {
        AlgebraElement p = newton_P(n);
        CHECK(is_primitive(p));
        CHECK(is_integral(p));
        int w = 0;
        CHECK(is_homogeneous(p, &w));
        CHECK(w == n);
        CHECK(reverse_words(p) == newton_P_prime(n));
        CHECK(is_primitive(newton_P_prime(n)));
    }
    CHECK_THROWS_AS((void)newton_P(0), std::invalid_argument);
}

TEST_CASE("P-basis coordinates round trip") {
    PPolynomial z2 = to_newton_basis(z_monomial(cw({2})));
    CHECK(z2.size() == 2);
    CHECK(z2.at(cw({2})) == Rat(1, 2));
    CHECK(z2.at(cw({1, 1})) == Rat(1, 2));

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        AlgebraElement x = random_z(rng);
        CHECK(from_newton_basis(to_newton_basis(x)) == x);
    }
    // and in the other direction
    std::uniform_int_distribution<int> len(0, 3), part(1, 3), co(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        PPolynomial p;
        for (int t = 0; t < 3; ++t) {
            std::vector<int> w(len(rng));
            for (auto& x : w) x = part(rng);
            int c = co(rng);
            if (c != 0) p[Composition(w)] += c;
        }
        std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
        CHECK(to_newton_basis(from_newton_basis(p)) == p);
    }
}

TEST_CASE("Verschiebung family") {
    CHECK(verschiebung_N(2, z_monomial(cw({2, 4}))) == z_monomial(cw({1, 2})));
    CHECK(verschiebung_N(2, z_monomial(cw({1, 2}))).is_zero());
    CHECK(verschiebung_N(1, z_monomial(cw({1, 2}))) == z_monomial(cw({1, 2})));
    CHECK_THROWS_AS((void)verschiebung_N(0, AlgebraElement::one()), std::invalid_argument);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        AlgebraElement x = random_z(rng), y = random_z(rng);
        // composition law and multiplicativity
        CHECK(verschiebung_N(2, verschiebung_N(3, x)) == verschiebung_N(6, x));
        CHECK(verschiebung_N(2, concat_product(x, y)) ==
              concat_product(verschiebung_N(2, x), verschiebung_N(2, y)));
        // coalgebra map
        auto v2 = [](const AlgebraElement& e) { return verschiebung_N(2, e); };
        CHECK(coproduct(verschiebung_N(2, x)) == tensor_map(coproduct(x), v2));
    }

    // V_n(P_{nm}) = n P_m
    for (int n : {2, 3})
        for (int m = 1; n * m <= 8; ++m)
            CHECK(verschiebung_N(n, newton_P(n * m)) ==
                  scalar_multiply(Rat(n), newton_P(m)));
}

TEST_CASE("Frobenius family over the rationals") {
    // frozen degree-4 value of f_2 on the weight-2 generator
    AlgebraElement f2z2 = frobenius_NQ(2, z_monomial(cw({2})));
    CHECK(f2z2 == zsum({{cw({4}), 2},
                        {cw({1, 3}), Rat(-3, 2)},
                        {cw({3, 1}), Rat(-1, 2)},
                        {cw({2, 2}), 1},
                        {cw({1, 2, 1}), Rat(1, 2)},
                        {cw({2, 1, 1}), Rat(-1, 2)}}));

    // f_n(P_m) = P_{nm}
    for (int n : {2, 3})
        for (int m = 1; n * m <= 8; ++m)
            CHECK(frobenius_NQ(n, newton_P(m)) == newton_P(n * m));

    // composition law on small fixed inputs (scaled letter indices grow as
    // n * m, so keep the letters tiny)
    for (const AlgebraElement& x :
         {z_monomial(cw({1})), z_monomial(cw({2})), z_monomial(cw({1, 1})),
          zsum({{cw({1, 2}), 1}, {cw({2}), -2}})}) {
        CHECK(frobenius_NQ(1, x) == x);
        CHECK(frobenius_NQ(2, frobenius_NQ(3, x)) == frobenius_NQ(6, x));
    }

    const std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs = {
        {z_monomial(cw({1, 2})), zsum({{cw({3}), 1}, {cw({1, 1}), -1}})},
        {z_monomial(cw({2})), z_monomial(cw({2, 1}))},
        {zsum({{cw({1}), 1}, {cw({2}), 3}}), z_monomial(cw({1}))},
    };
    for (const auto& [x, y] : pairs)
        for (int n : {2, 3})
            CHECK(frobenius_NQ(n, concat_product(x, y)) ==
                  concat_product(frobenius_NQ(n, x), frobenius_NQ(n, y)));
}

TEST_CASE("projection to symmetric functions") {
    // h_2 inside the quasisymmetric algebra
    QElement h2 = project_to_symm(z_monomial(cw({2})));
    CHECK(h2 == q_add(QElement::word(cw({2})), QElement::word(cw({1, 1}))));
    // Newton primitives project to power sums, which are single words
    for (int n = 1; n <= 6; ++n)
        CHECK(project_to_symm(newton_P(n)) == QElement::word(Composition{n}));
    // multiplicative
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        AlgebraElement x = random_z(rng, 2, 2), y = random_z(rng, 2, 2);
        CHECK(project_to_symm(concat_product(x, y)) ==
              osh_product(project_to_symm(x), project_to_symm(y)));
    }
}

TEST_CASE("Frobenius descends through the projection to the partwise one") {
    for (const AlgebraElement& x :
         {z_monomial(cw({1})), z_monomial(cw({2})), z_monomial(cw({1, 1})),
          zsum({{cw({1, 2}), 1}, {cw({2}), -2}, {cw({3}), 1}})})
        for (int n : {2, 3})
            CHECK(project_to_symm(frobenius_NQ(n, x)) ==
                  frobenius_q(n, project_to_symm(x)));
}

TEST_CASE("duality: product against coproduct, both directions") {
    // <V_n x, q> = <x, f_n q>
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> len(0, 3), part(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> w(len(rng));
        for (auto& v : w) v = part(rng);
        AlgebraElement x = z_monomial(Composition(w));
        std::vector<int> qv(len(rng));
        for (auto& v : qv) v = part(rng);
        QElement q = QElement::word(Composition(qv));
        for (int n : {2, 3})
            CHECK(pairing(verschiebung_N(n, x), q) == pairing(x, frobenius_q(n, q)));
    }

    // <Z_a, b osh c> equals the (b, c) coefficient of the coproduct of Z_a
    std::vector<Composition> words;
    words.push_back(Composition{});
    for (int n = 1; n <= 5; ++n)
        for (const auto& a : enumerate_compositions(n)) words.push_back(a);
    for (const auto& a : words) {
        TensorElement mu = coproduct(z_monomial(a));
        for (const auto& b : words)
            for (const auto& c : words) {
                if (b.weight() + c.weight() != a.weight()) continue;
                Rat lhs = pairing(z_monomial(a),
                                  osh_product(QElement::word(b), QElement::word(c)));
                Rat rhs = 0;
                auto it = mu.terms.find({letter_word(Alphabet::Z, b),
                                         letter_word(Alphabet::Z, c)});
                if (it != mu.terms.end()) rhs = it->second;
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("exponential change of generators") {
    AlgebraElement u1 = AlgebraElement::monomial(letter_word(Alphabet::U, cw({1})));
    AlgebraElement u2 = AlgebraElement::monomial(letter_word(Alphabet::U, cw({2})));
    AlgebraElement u3 = AlgebraElement::monomial(letter_word(Alphabet::U, cw({3})));
    CHECK(exp_iso(z_monomial(cw({1}))) == u1);
    CHECK(exp_iso(z_monomial(cw({2}))) ==
          add(u2, scalar_multiply(Rat(1, 2), concat_product(u1, u1))));
    AlgebraElement expect3 = add(
        add(u3, scalar_multiply(Rat(1, 2),
                                add(concat_product(u1, u2), concat_product(u2, u1)))),
        scalar_multiply(Rat(1, 6), concat_product(u1, concat_product(u1, u1))));
    CHECK(exp_iso(z_monomial(cw({3}))) == expect3);

    // algebra map
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        AlgebraElement x = random_z(rng, 2, 2), y = random_z(rng, 2, 2);
        CHECK(exp_iso(concat_product(x, y)) ==
              concat_product(exp_iso(x), exp_iso(y)));
    }

    // coalgebra map: the image of the generator sequence is again grouplike,
    // now with respect to primitive letters
    for (int n = 1; n <= 5; ++n) {
        TensorElement lhs = coproduct(exp_iso(z_monomial(Composition{n})));
        TensorElement rhs;
        for (int i = 0; i <= n; ++i) {
            AlgebraElement left = i == 0 ? AlgebraElement::one()
                                         : exp_iso(z_monomial(Composition{i}));
            AlgebraElement right = i == n ? AlgebraElement::one()
                                          : exp_iso(z_monomial(Composition{n - i}));
            rhs = tensor_add(rhs, simple_tensor(left, right));
        }
        CHECK(lhs == rhs);
    }

    // leading term: the single letter U_n appears with coefficient 1, so the
    // change of generators is triangular and invertible over the rationals
    for (int n = 1; n <= 6; ++n)
        CHECK(coefficient(exp_iso(z_monomial(Composition{n})),
                          letter_word(Alphabet::U, Composition{n})) == 1);
}

TEST_CASE("Lyndon bracketing of the Newton primitives") {
    CHECK(lyndon_bracket(cw({3})) == newton_P(3));
    CHECK(lyndon_bracket(cw({1, 2})) ==
          zsum({{cw({1, 2}), 2}, {cw({2, 1}), -2}}));
    CHECK(lyndon_bracket(cw({1, 2})) == bracket(newton_P(1), newton_P(2)));
    CHECK_THROWS_AS((void)lyndon_bracket(cw({2, 1})), std::invalid_argument);
    CHECK_THROWS_AS((void)lyndon_bracket(Composition{}), std::invalid_argument);

    // brackets of primitives stay primitive, integral, homogeneous
    for (int n = 1; n <= 6; ++n)
        for (const auto& a : enumerate_lyndon(n)) {
            AlgebraElement b = lyndon_bracket(a);
            CHECK(is_primitive(b));
            CHECK(is_integral(b));
            int w = 0;
            CHECK(is_homogeneous(b, &w));
            CHECK((b.is_zero() || w == n));
            CHECK_FALSE(b.is_zero());
        }
}
