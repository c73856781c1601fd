#include <catch2/catch_amalgamated.hpp>

#include "torspan/abelian_group.hpp"
#include "torspan/linking_form.hpp"

using namespace torspan;

namespace {

// Order by brute force: keep multiplying by the element until the identity
// comes back.  Only usable on torsion elements of small groups, which is
// exactly what the tests feed it.
Integer order_by_iteration(const AbelianGroup& G, const GroupElement& a) {
    GroupElement acc = a;
    Integer count = 1;
    while (!acc.is_identity()) {
        acc = G.mul(acc, a);
        ++count;
        REQUIRE(count <= 10'000); // safety net against a broken mul
    }
    return count;
}

LinkingForm cyclic_form(const AbelianGroup& G, const Rational& value) {
    return LinkingForm(G, {{QmodZ(value)}});
}

} // namespace

TEST_CASE("group construction and formatting") {
    CHECK(AbelianGroup::cyclic(5).format() == "Z/5");
    CHECK(AbelianGroup({6}, 1, {"t", "s"}).format() == "Z/6 + Z");
    CHECK(AbelianGroup({2, 4}, 0).format() == "Z/2 + Z/4");
    CHECK(AbelianGroup::trivial().format() == "0");
    CHECK(AbelianGroup({10}, 1, {"u1", "u2"}).format() == "Z/10 + Z");

    CHECK_THROWS_AS(AbelianGroup({1}, 0), invalid_parameter_error);
    CHECK_THROWS_AS(AbelianGroup({0}, 0), invalid_parameter_error);
    CHECK_THROWS_AS(AbelianGroup({5}, -1), invalid_parameter_error);
    CHECK_THROWS_AS(AbelianGroup({5}, 0, {"a", "b"}), invalid_parameter_error);
}

TEST_CASE("element formatting") {
    const auto G = AbelianGroup({10}, 1, {"u1", "u2"});
    CHECK(G.format_element(G.identity()) == "1");
    CHECK(G.format_element(G.element({3})) == "u1^3");
    CHECK(G.format_element(G.element({1})) == "u1");
    CHECK(G.format_element(G.element({2}, {-1})) == "u1^2*u2^-1");
    CHECK(G.format_element(G.element({0}, {4})) == "u2^4");

    const auto C5 = AbelianGroup::cyclic(5);
    CHECK(C5.format_element(C5.element({3})) == "t^3");
}

TEST_CASE("element arithmetic is modular") {
    const auto G = AbelianGroup({6}, 1, {"t", "s"});
    const auto t = G.generator(0);
    const auto s = G.generator(1);

    CHECK(G.mul(G.pow(t, 4), G.pow(t, 5)) == G.pow(t, 3));
    CHECK(G.element({-1}) == G.pow(t, 5));
    CHECK(G.inverse(G.pow(t, 2)) == G.pow(t, 4));
    CHECK(G.inverse(G.identity()) == G.identity());
    CHECK(G.inverse(s) == G.element({0}, {-1}));
    CHECK(G.pow(s, -3) == G.element({0}, {-3}));
    CHECK(G.mul(t, s) == G.element({1}, {1}));

    SECTION("elements of the wrong shape are rejected") {
        const auto C5 = AbelianGroup::cyclic(5);
        CHECK_THROWS_AS(G.mul(t, C5.element({1})), structural_error);
        CHECK_THROWS_AS(C5.format_element(t), structural_error);
    }
}

TEST_CASE("element order") {
    const auto C6 = AbelianGroup::cyclic(6);
    const auto C5 = AbelianGroup::cyclic(5);

    CHECK(C6.order(C6.identity()) == Integer(1));
    CHECK(C5.order(C5.element({2})) == Integer(5));
    CHECK(C6.order(C6.element({3})) == Integer(2));

    SECTION("infinite order on a free generator") {
        const auto G = AbelianGroup({6}, 1, {"t", "s"});
        CHECK(!G.order(G.generator(1)).has_value());
        CHECK(!G.order(G.element({2}, {-3})).has_value());
        CHECK(G.order(G.element({2}, {0})) == Integer(3));
        CHECK_THROWS_AS(G.order_checked(G.generator(1)), structural_error);
    }
    SECTION("lcm formula agrees with repeated multiplication") {
        for (const auto& G : {AbelianGroup({12}, 0), AbelianGroup({2, 4}, 0),
                              AbelianGroup({6, 10}, 0), AbelianGroup({2, 2}, 0)}) {
            for (const auto& a : G.enumerate_torsion())
                CHECK(G.order(a) == order_by_iteration(G, a));
        }
    }
    SECTION("direct modular arithmetic on cyclic groups") {
        const auto C12 = AbelianGroup::cyclic(12);
        for (std::int64_t k = 0; k < 12; ++k) {
            const Integer expected = 12 / gcd(Integer(12), Integer(k));
            CHECK(C12.order(C12.element({k})) == expected);
        }
    }
}

TEST_CASE("torsion enumeration") {
    CHECK(AbelianGroup::cyclic(5).enumerate_torsion().size() == 5);
    CHECK(AbelianGroup({6}, 1).enumerate_torsion().size() == 6);
    CHECK(AbelianGroup({2, 2}, 0).enumerate_torsion().size() == 4);
    CHECK(AbelianGroup::trivial().enumerate_torsion().size() == 1);

    SECTION("ascending lexicographic order on exponent vectors") {
        const auto G = AbelianGroup({2, 3}, 0);
        const auto all = G.enumerate_torsion();
        REQUIRE(all.size() == 6);
        CHECK(all[0] == G.element({0, 0}));
        CHECK(all[1] == G.element({0, 1}));
        CHECK(all[2] == G.element({0, 2}));
        CHECK(all[3] == G.element({1, 0}));
        CHECK(all[4] == G.element({1, 1}));
        CHECK(all[5] == G.element({1, 2}));
        CHECK(std::is_sorted(all.begin(), all.end()));
    }
    SECTION("free exponents stay zero") {
        const auto G = AbelianGroup({4}, 2);
        for (const auto& a : G.enumerate_torsion())
            CHECK(G.is_torsion(a));
    }
    SECTION("the cap is enforced and named in the error") {
        const auto G = AbelianGroup({1000, 1001}, 0);
        CHECK_THROWS_AS(G.enumerate_torsion(1'000'000), enumeration_limit_error);
        CHECK_THROWS_WITH(G.enumerate_torsion(1'000'000),
                          Catch::Matchers::ContainsSubstring("1000000"));
        CHECK_NOTHROW(G.enumerate_torsion(1'001'000));
    }
}

TEST_CASE("linking form construction") {
    const auto C5 = AbelianGroup::cyclic(5);
    CHECK_NOTHROW(cyclic_form(C5, Rational(1, 5)));

    SECTION("well-definedness: the generator order must kill the value") {
        CHECK_THROWS_AS(cyclic_form(C5, Rational(1, 2)), linking_form_error);
        CHECK_THROWS_AS(cyclic_form(C5, Rational(1, 10)), linking_form_error);
        CHECK_NOTHROW(cyclic_form(C5, Rational(2, 5)));
    }
    SECTION("symmetry of the value matrix") {
        const auto G = AbelianGroup({2, 2}, 0);
        const QmodZ h(Rational(1, 2));
        CHECK_NOTHROW(LinkingForm(G, {{h, h}, {h, QmodZ()}}));
        CHECK_THROWS_AS(LinkingForm(G, {{h, h}, {QmodZ(), h}}), linking_form_error);
    }
    SECTION("matrix shape must match the torsion rank") {
        CHECK_THROWS_AS(LinkingForm(C5, {}), linking_form_error);
        CHECK_THROWS_AS(LinkingForm(C5, {{QmodZ(), QmodZ()}}), linking_form_error);
    }
}

TEST_CASE("linking form evaluation") {
    const auto C5 = AbelianGroup::cyclic(5);
    const auto L = cyclic_form(C5, Rational(1, 5));

    // bilinear extension: L(t^a, t^b) = ab/5
    for (std::int64_t a = 0; a < 5; ++a)
        for (std::int64_t b = 0; b < 5; ++b)
            CHECK(L.eval(C5.element({a}), C5.element({b})) ==
                  QmodZ(Rational(a * b, 5)));

    SECTION("symmetric in its arguments") {
        const auto G = AbelianGroup({2, 4}, 0);
        const LinkingForm M(G, {{QmodZ(Rational(1, 2)), QmodZ(Rational(1, 2))},
                                {QmodZ(Rational(1, 2)), QmodZ(Rational(1, 4))}});
        for (const auto& a : G.enumerate_torsion())
            for (const auto& b : G.enumerate_torsion())
                CHECK(M.eval(a, b) == M.eval(b, a));
    }
    SECTION("free-part elements are rejected") {
        const auto G = AbelianGroup({6}, 1);
        const LinkingForm M(G, {{QmodZ(Rational(1, 6))}});
        CHECK_THROWS_AS(M.eval(G.generator(1), G.generator(0)), structural_error);
    }
}

TEST_CASE("nondegeneracy test") {
    CHECK(cyclic_form(AbelianGroup::cyclic(5), Rational(1, 5)).is_nondegenerate());
    CHECK(cyclic_form(AbelianGroup::cyclic(6), Rational(1, 6)).is_nondegenerate());
    // 4 * (1/2) kills t^2 against everything, so this one degenerates
    CHECK(!cyclic_form(AbelianGroup::cyclic(4), Rational(1, 2)).is_nondegenerate());
}

TEST_CASE("annihilator subgroup") {
    const auto C5 = AbelianGroup::cyclic(5);
    const auto L5 = cyclic_form(C5, Rational(1, 5));
    const auto C6 = AbelianGroup::cyclic(6);
    const auto L6 = cyclic_form(C6, Rational(1, 6));

    CHECK(annihilator_subgroup(L5, C5.element({2})) ==
          std::vector<GroupElement>{C5.identity()});
    CHECK(annihilator_subgroup(L6, C6.element({3})) ==
          std::vector<GroupElement>{C6.identity(), C6.element({2}), C6.element({4})});
    CHECK(annihilator_subgroup(L5, C5.identity()) == C5.enumerate_torsion());

    SECTION("index equals the element order for every torsion class") {
        for (const auto& L : {L5, L6, cyclic_form(AbelianGroup::cyclic(12), Rational(5, 12))}) {
            const auto& G = L.group();
            for (const auto& u : G.enumerate_torsion()) {
                const auto ann = annihilator_subgroup(L, u);
                CHECK(Integer(ann.size()) * G.order_checked(u) == G.torsion_size());
            }
        }
    }
    SECTION("direct modular arithmetic on a cyclic group") {
        const auto C12 = AbelianGroup::cyclic(12);
        const auto L12 = cyclic_form(C12, Rational(7, 12));
        for (std::int64_t a = 0; a < 12; ++a) {
            std::vector<GroupElement> expected;
            for (std::int64_t k = 0; k < 12; ++k)
                if ((7 * a * k) % 12 == 0)
                    expected.push_back(C12.element({k}));
            CHECK(annihilator_subgroup(L12, C12.element({a})) == expected);
        }
    }
    SECTION("degenerate form is reported") {
        const auto C4 = AbelianGroup::cyclic(4);
        const auto bad = cyclic_form(C4, Rational(1, 2));
        CHECK_THROWS_AS(annihilator_subgroup(bad, C4.element({1})), linking_form_error);
    }
}

TEST_CASE("dual element search") {
    const auto C5 = AbelianGroup::cyclic(5);
    const auto L5 = cyclic_form(C5, Rational(1, 5));
    const auto C6 = AbelianGroup::cyclic(6);
    const auto L6 = cyclic_form(C6, Rational(1, 6));

    // 2k = 1 mod 5 first at k = 3
    CHECK(find_dual_element(L5, C5.element({2})) == C5.element({3}));
    // 2k = 2 mod 12 first at k = 1
    CHECK(find_dual_element(L6, C6.element({2})) == C6.element({1}));
    CHECK(find_dual_element(L6, C6.element({3})) == C6.element({1}));
    CHECK(find_dual_element(L5, C5.identity()) == C5.identity());

    SECTION("the dual's order is a multiple of the element's order") {
        for (const auto& L : {L5, L6}) {
            const auto& G = L.group();
            for (const auto& u : G.enumerate_torsion()) {
                const auto v = find_dual_element(L, u);
                CHECK(G.order_checked(v) % G.order_checked(u) == 0);
            }
        }
    }
    SECTION("pairing value is checked against the first match rule") {
        const auto C12 = AbelianGroup::cyclic(12);
        const auto L12 = cyclic_form(C12, Rational(7, 12));
        for (std::int64_t a = 1; a < 12; ++a) {
            const auto u = C12.element({a});
            const Integer n = C12.order_checked(u);
            const auto v = find_dual_element(L12, u);
            CHECK(L12.eval(u, v) == QmodZ(make_rational(1, n)));
            // nothing earlier in enumeration order pairs to 1/n
            for (const auto& w : C12.enumerate_torsion()) {
                if (w == v)
                    break;
                CHECK(!(L12.eval(u, w) == QmodZ(make_rational(1, n))));
            }
        }
    }
    SECTION("degenerate form is reported") {
        const auto C4 = AbelianGroup::cyclic(4);
        const auto bad = cyclic_form(C4, Rational(1, 2));
        CHECK_THROWS_AS(find_dual_element(bad, C4.element({1})), linking_form_error);
    }
}
