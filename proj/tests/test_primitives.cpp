#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsq/nsymm.hpp"
#include "nsq/primitives.hpp"

using namespace nsq;

namespace {

Composition cw(std::initializer_list<int> parts) {
    return Composition(std::vector<int>(parts));
}

std::vector<AlgebraElement> standard_dps(int top) {
    std::vector<AlgebraElement> d = {AlgebraElement::one()};
    for (int n = 1; n <= top; ++n) d.push_back(z_monomial(Composition{n}));
    return d;
}

} // namespace

TEST_CASE("Newton primitives of arbitrary sequences") {
    std::vector<AlgebraElement> z = standard_dps(6);
    for (int k = 1; k <= 6; ++k) CHECK(curve_newton(z, k) == newton_P(k));
    CHECK_THROWS_AS((void)curve_newton(z, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)curve_newton(z, 7), std::invalid_argument);
    std::vector<AlgebraElement> bad = z;
    bad[0] = z_monomial(cw({1}));
    CHECK_THROWS_AS((void)curve_newton(bad, 1), std::invalid_argument);
}

TEST_CASE("attached sequences are divided power sequences") {
    std::vector<AlgebraElement> d1 = build_dps(cw({1}), 4);
    CHECK(d1 == standard_dps(4));
    for (const Composition& w : {cw({1, 2}), cw({1, 3}), cw({1, 1, 2})}) {
        std::vector<AlgebraElement> d = build_dps(w, 2);
        CHECK(d.size() == 3);
        CHECK(is_dps(d));
        int weight = 0;
        CHECK(is_homogeneous(d[1], &weight));
        CHECK(weight == w.weight());
        CHECK(is_homogeneous(d[2], &weight));
        CHECK(weight == 2 * w.weight());
        CHECK(is_integral(d[1]));
        CHECK(is_integral(d[2]));
    }
    CHECK_THROWS_AS((void)build_dps(cw({2, 4}), 1), std::invalid_argument);
    CHECK_THROWS_AS((void)build_dps(cw({2, 1}), 1), std::invalid_argument);
}

TEST_CASE("primitives of Lyndon words: frozen values") {
    for (int n = 1; n <= 6; ++n) CHECK(build_P(Composition{n}) == newton_P(n));
    CHECK(build_P(cw({1, 2})) ==
          sub(z_monomial(cw({1, 2})), z_monomial(cw({2, 1}))));
    // [1,1,2] factors as [1] * [1,2], so its primitive is the commutator of
    // Z_1 with the one above
    AlgebraElement expect = add(sub(z_monomial(cw({1, 1, 2})),
                                    z_monomial(cw({1, 2, 1}), 2)),
                                z_monomial(cw({2, 1, 1})));
    CHECK(build_P(cw({1, 1, 2})) == expect);
    CHECK_THROWS_AS((void)build_P(cw({2, 1})), std::invalid_argument);
}

TEST_CASE("every attached primitive is integral, homogeneous, primitive") {
    for (int n = 1; n <= 6; ++n)
        for (const Composition& a : enumerate_lyndon(n)) {
            AlgebraElement p = build_P(a);
            CHECK_FALSE(p.is_zero());
            CHECK(is_integral(p));
            int w = 0;
            CHECK(is_homogeneous(p, &w));
            CHECK(w == n);
            CHECK(is_primitive(p));
        }
}

TEST_CASE("Verschiebung acts on the attached primitives by decimation") {
    for (int m : {2, 3})
        for (int n = 1; m * n <= 6; ++n)
            for (const Composition& b : enumerate_lyndon(n))
                CHECK(verschiebung_N(m, build_P(scale(b, m))) ==
                      scalar_multiply(Rat(m), build_P(b)));
    // and kills primitives whose gcd it does not divide
    CHECK(verschiebung_N(2, build_P(cw({3}))).is_zero());
    CHECK(verschiebung_N(2, build_P(cw({1, 2}))).is_zero());
    CHECK(verschiebung_N(3, build_P(cw({2, 4}))).is_zero());
}

TEST_CASE("the attached primitives are a basis of all primitives") {
    for (int n = 1; n <= 6; ++n) {
        IntegerLattice basis = prim_basis_span(n);
        IntegerLattice all = primitive_lattice(n);
        CHECK(basis.rank() == beta(n));
        CHECK(all.rank() == beta(n));
        CHECK(basis.hnf_basis() == all.hnf_basis());
    }
}

TEST_CASE("free-Lie span sits inside with the predicted index") {
    // index = product over Lyndon words of (product of parts) / gcd
    auto predicted = [](int n) {
        Int idx = 1;
        for (const Composition& a : enumerate_lyndon(n))
            idx *= product_of_parts(a) / gcd_of_parts(a);
        return idx;
    };
    const std::vector<Int> frozen = {1, 1, 2, 6, 576};
    for (int n = 1; n <= 5; ++n) {
        CHECK(predicted(n) == frozen[n - 1]);
        std::optional<Int> idx = frlie_index(n);
        REQUIRE(idx.has_value());
        CHECK(*idx == frozen[n - 1]);
    }
    CHECK(predicted(6) == 69120);
    std::optional<Int> idx6 = frlie_index(6);
    REQUIRE(idx6.has_value());
    CHECK(*idx6 == 69120);

    // containment is strict exactly when the index exceeds 1
    IntegerLattice fr3 = frlie_span(3), pb3 = prim_basis_span(3);
    for (const auto& row : fr3.generators()) CHECK(pb3.contains(row));
    bool all_inside = true;
    for (const auto& row : pb3.generators())
        if (!fr3.contains(row)) all_inside = false;
    CHECK_FALSE(all_inside);
}

TEST_CASE("coordinate extraction guards") {
    CHECK_THROWS_AS((void)element_coords({z_monomial(cw({1}))}, 2), std::invalid_argument);
    CHECK_THROWS_AS(
        (void)element_coords({scalar_multiply(Rat(1, 2), z_monomial(cw({2})))}, 2),
        std::invalid_argument);
    IntMatrix m = element_coords({newton_P(2)}, 2);
    REQUIRE(m.size() == 1);
    CHECK(m[0] == std::vector<Int>{2, -1});
}
