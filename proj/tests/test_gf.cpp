#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "polarforge/gf.hpp"

using namespace polarforge;

TEST_CASE("prime field basics") {
    FieldCtx F(3, 1);
    REQUIRE(F.q() == 3);
    REQUIRE(F.add(2, 2) == 1);
    REQUIRE(F.mul(2, 2) == 1);
    REQUIRE(F.neg(1) == 2);
    REQUIRE(F.inv(2) == 2);
    REQUIRE_THROWS_AS(F.inv(0), DivisionByZero);
}

TEST_CASE("GF(9) with overridden modulus x^2+1") {
    FieldCtx F(3, 2, {1, 0, 1});
    // element x has digits (0,1), encoding 3; x*x = -1 = 2
    REQUIRE(F.mul(3, 3) == 2);
}

TEST_CASE("default moduli are accepted and irreducible") {
    for (auto [p, h] : {std::pair{3u, 2u}, {3u, 3u}, {3u, 4u}, {5u, 2u}, {7u, 2u}, {11u, 1u}, {13u, 1u}}) {
        FieldCtx F(p, h);
        REQUIRE(F.modulus().size() == h + 1);
        REQUIRE(F.modulus().back() == 1);
    }
    REQUIRE_THROWS_AS(FieldCtx(3, 2, std::vector<unsigned>{0, 0, 1}), InvalidArgument); // x^2 reducible
    REQUIRE_THROWS_AS(FieldCtx(2, 1), InvalidArgument);                                 // even characteristic
}

TEST_CASE("inverses over GF(27), exhaustive") {
    FieldCtx F(3, 3);
    for (Elem a = 1; a < F.q(); ++a) REQUIRE(F.mul(a, F.inv(a)) == 1);
}

TEST_CASE("field axioms on small fields, exhaustive") {
    for (auto [p, h] : {std::pair{3u, 1u}, {3u, 2u}, {5u, 1u}, {7u, 1u}}) {
        FieldCtx F(p, h);
        const unsigned q = F.q();
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b) {
                REQUIRE(F.add(a, b) == F.add(b, a));
                REQUIRE(F.mul(a, b) == F.mul(b, a));
                for (Elem c = 0; c < q; ++c) {
                    REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                    REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                }
            }
    }
}

TEST_CASE("associativity on random triples in bigger fields") {
    std::mt19937 rng(20240901);
    for (auto [p, h] : {std::pair{3u, 3u}, {3u, 4u}, {5u, 2u}, {7u, 2u}}) {
        FieldCtx F(p, h);
        std::uniform_int_distribution<unsigned> d(0, F.q() - 1);
        for (int t = 0; t < 500; ++t) {
            const Elem a = static_cast<Elem>(d(rng)), b = static_cast<Elem>(d(rng)),
                       c = static_cast<Elem>(d(rng));
            REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        }
    }
}

TEST_CASE("square counting: exactly (q-1)/2 nonzero squares") {
    for (auto [p, h] : {std::pair{3u, 1u}, {5u, 1u}, {7u, 1u}, {3u, 2u}, {11u, 1u},
                        {13u, 1u}, {5u, 2u}, {3u, 3u}, {7u, 2u}, {3u, 4u}}) {
        FieldCtx F(p, h);
        unsigned squares = 0;
        for (Elem a = 1; a < F.q(); ++a)
            if (F.is_square(a)) ++squares;
        REQUIRE(squares == (F.q() - 1) / 2);
    }
}

TEST_CASE("both quadratic-character routes agree") {
    for (auto [p, h] : {std::pair{3u, 1u}, {3u, 2u}, {3u, 3u}, {5u, 1u}, {5u, 2u}, {7u, 1u}}) {
        FieldCtx F(p, h);
        for (Elem a = 0; a < F.q(); ++a) REQUIRE(F.is_square(a) == F.is_square_by_log(a));
    }
}

TEST_CASE("is_square(-1) iff q = 1 mod 4") {
    for (auto [p, h] : {std::pair{3u, 1u}, {5u, 1u}, {7u, 1u}, {3u, 2u}, {11u, 1u},
                        {13u, 1u}, {3u, 3u}}) {
        FieldCtx F(p, h);
        REQUIRE(F.is_square(F.neg(1)) == (F.q() % 4 == 1));
    }
}

TEST_CASE("sqrt examples and round trips") {
    FieldCtx F3(3, 1);
    REQUIRE_FALSE(F3.is_square(2)); // -1 is a non-square in GF(3)
    REQUIRE_FALSE(F3.sqrt(2).has_value());

    FieldCtx F5(5, 1);
    REQUIRE(F5.is_square(4));
    REQUIRE(F5.sqrt(4) == Elem{2});

    FieldCtx F9(3, 2);
    REQUIRE(F9.is_square(F9.neg(1))); // 9 = 1 mod 4

    for (auto [p, h] : {std::pair{3u, 2u}, {5u, 1u}, {7u, 1u}, {3u, 3u}}) {
        FieldCtx F(p, h);
        REQUIRE(F.sqrt(0) == Elem{0});
        for (Elem a = 1; a < F.q(); ++a) {
            const auto r = F.sqrt(a);
            REQUIRE(r.has_value() == F.is_square(a));
            if (r) {
                REQUIRE(F.mul(*r, *r) == a);
                REQUIRE(*r == std::min(*r, F.neg(*r)));
            }
        }
    }
}

TEST_CASE("nonsquare is the smallest non-square encoding") {
    FieldCtx F3(3, 1);
    REQUIRE(F3.nonsquare() == 2);
    FieldCtx F5(5, 1);
    REQUIRE(F5.nonsquare() == 2);
    FieldCtx F13(13, 1);
    REQUIRE(F13.nonsquare() == 2);
    FieldCtx F9(3, 2);
    for (Elem a = 0; a < F9.nonsquare(); ++a) REQUIRE(F9.is_square(a));
    REQUIRE_FALSE(F9.is_square(F9.nonsquare()));
}

TEST_CASE("exp/log consistency") {
    FieldCtx F(3, 4); // GF(81)
    REQUIRE(F.q() == 81);
    Elem x = 1;
    const Elem g = F.primitive_element();
    unsigned order = 0;
    do {
        x = F.mul(x, g);
        ++order;
    } while (x != 1);
    REQUIRE(order == F.q() - 1);
}
