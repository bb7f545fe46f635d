#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "maxarc/gf2.hpp"

using namespace maxarc;

namespace {

// Schoolbook polynomial multiply-then-reduce, independent of the table paths.
uint32_t naive_mul(uint32_t a, uint32_t b, uint32_t irreducible, int degree) {
    uint64_t prod = 0;
    for (int i = 0; i < degree; ++i)
        if (b & (1u << i)) prod ^= static_cast<uint64_t>(a) << i;
    for (int d = 2 * degree - 2; d >= degree; --d)
        if (prod & (1ull << d)) prod ^= static_cast<uint64_t>(irreducible) << (d - degree);
    return static_cast<uint32_t>(prod);
}

}  // namespace

TEST_CASE("built-in irreducibles are irreducible for every degree") {
    for (int h = 1; h <= 24; ++h) {
        Field F(h);
        CHECK(gf2_poly_irreducible(F.irreducible(), h));
    }
}

TEST_CASE("characteristic-2 addition") {
    Field F(5);
    for (uint32_t x = 0; x < 32; ++x) {
        CHECK(F.add(Elem{x}, Elem{x}) == F.zero());
        CHECK(F.add(Elem{x}, F.zero()) == Elem{x});
    }
}

TEST_CASE("distinguished generator of GF(32) satisfies w^18 + w = 1") {
    Field F(5);
    Elem w = F.generator();
    CHECK(F.add(F.pow(w, 18), w) == F.one());
    CHECK(F.multiplicative_order(w) == 31);
}

TEST_CASE("multiplication matches the schoolbook oracle") {
    std::mt19937 rng(7);
    for (int h : {3, 5, 7}) {
        Field F(h);
        for (int i = 0; i < 2000; ++i) {
            uint32_t a = rng() % F.order(), b = rng() % F.order();
            CHECK(F.mul(Elem{a}, Elem{b}).bits == naive_mul(a, b, F.irreducible(), h));
        }
    }
}

TEST_CASE("multiplicative identities") {
    Field F(5);
    for (uint32_t x = 0; x < 32; ++x) {
        CHECK(F.mul(Elem{x}, F.one()) == Elem{x});
        CHECK(F.mul(Elem{x}, F.zero()) == F.zero());
    }
    CHECK(F.inv(F.one()) == F.one());
    CHECK_THROWS(F.inv(F.zero()));
}

TEST_CASE("inverse agrees with pow(x, q-2) and Lagrange") {
    for (int h : {2, 3, 4, 5, 6, 7, 8}) {
        Field F(h);
        for (uint32_t x = 1; x < F.order(); ++x) {
            CHECK(F.inv(Elem{x}) == F.pow(Elem{x}, F.order() - 2));
            CHECK(F.pow(Elem{x}, F.order() - 1) == F.one());
        }
    }
}

TEST_CASE("square roots are exact inverses of squaring") {
    Field F(5);
    CHECK(F.sqrt(F.zero()) == F.zero());
    CHECK(F.sqrt(F.one()) == F.one());
    for (uint32_t x = 0; x < 32; ++x) {
        CHECK(F.sqrt(F.square(Elem{x})) == Elem{x});
        CHECK(F.square(F.sqrt(Elem{x})) == Elem{x});
    }
}

TEST_CASE("trace facts") {
    Field F(5);
    CHECK(F.trace(F.zero()) == 0);
    CHECK(F.trace(F.one()) == 1);  // odd degree
    Field F7(7);
    CHECK(F7.trace(F7.one()) == 1);
    int zeros = 0;
    for (uint32_t x = 0; x < 32; ++x) {
        zeros += F.trace(Elem{x}) == 0;
        CHECK(F.trace(F.square(Elem{x})) == F.trace(Elem{x}));
        for (uint32_t y = 0; y < 32; ++y)
            CHECK(F.trace(F.add(Elem{x}, Elem{y})) == (F.trace(Elem{x}) ^ F.trace(Elem{y})));
    }
    CHECK(zeros == 16);
    Field F4(4);
    CHECK(F4.trace(F4.one()) == 0);  // trace of 1 is h mod 2
}

TEST_CASE("frobenius is a trace-preserving automorphism") {
    Field F(5);
    for (uint32_t x = 0; x < 32; ++x) {
        CHECK(F.frobenius(Elem{x}, 0) == Elem{x});
        CHECK(F.frobenius(Elem{x}, 5) == Elem{x});
        for (int l = 0; l < 5; ++l) {
            CHECK(F.trace(F.frobenius(Elem{x}, l)) == F.trace(Elem{x}));
            for (uint32_t y = 0; y < 32; ++y) {
                CHECK(F.frobenius(F.add(Elem{x}, Elem{y}), l) ==
                      F.add(F.frobenius(Elem{x}, l), F.frobenius(Elem{y}, l)));
                CHECK(F.frobenius(F.mul(Elem{x}, Elem{y}), l) ==
                      F.mul(F.frobenius(Elem{x}, l), F.frobenius(Elem{y}, l)));
            }
        }
    }
}

TEST_CASE("field axioms hold exhaustively for small degrees") {
    for (int h : {1, 2, 3, 4, 5}) {
        Field F(h);
        const uint32_t q = F.order();
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b < q; ++b)
                for (uint32_t c = 0; c < q; ++c) {
                    Elem x{a}, y{b}, z{c};
                    REQUIRE(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
                    REQUIRE(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
                }
    }
}

TEST_CASE("generator relation search") {
    Field F(5);
    Elem g = F.find_generator_with_relation(
        [](const Field& f, Elem c) { return f.add(f.pow(c, 18), c) == f.one(); });
    CHECK(F.add(F.pow(g, 18), g) == F.one());
    CHECK(F.is_primitive(g));

    Field F1(1);
    CHECK(F1.find_generator_with_relation([](const Field& f, Elem c) { return c == f.one(); }) ==
          F1.one());

    CHECK_THROWS(F.find_generator_with_relation(
        [](const Field& f, Elem c) { return c == f.zero(); }));
}

TEST_CASE("discrete logs") {
    Field F(5);
    CHECK(F.dlog(F.one()) == 0);
    CHECK(F.dlog(F.generator()) == 1);
    CHECK(F.dlog(F.pow(F.generator(), 18)) == 18);
    for (int k = 0; k < 31; ++k) CHECK(F.dlog(F.exp(k)) == k);
    CHECK_THROWS(F.dlog(F.zero()));
}

TEST_CASE("element text round trip") {
    Field F(5);
    CHECK(F.to_string(F.zero()) == "0");
    CHECK(F.to_string(F.one()) == "1");
    CHECK(F.to_string(F.generator()) == "w");
    CHECK(F.to_string(F.exp(18)) == "w^18");
    for (uint32_t x = 0; x < 32; ++x) CHECK(F.parse(F.to_string(Elem{x})) == Elem{x});
    CHECK(F.parse("w+1") == F.add(F.generator(), F.one()));
    CHECK(F.parse("0x1f") == Elem{0x1f});
    CHECK_THROWS(F.parse("nope"));
    CHECK_THROWS(F.parse(""));
}

TEST_CASE("custom representation still finds the distinguished generator") {
    // x^5 + x^3 + 1 is another irreducible; w^18 + w = 1 must be solvable there too.
    Field F(5, 0x29);
    Elem w = F.generator();
    CHECK(F.add(F.pow(w, 18), w) == F.one());
    CHECK(F.is_primitive(w));
}
