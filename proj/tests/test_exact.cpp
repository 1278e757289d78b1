#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "genfib/exact.hpp"
#include "test_oracles.hpp"

using namespace genfib;

namespace {

Rational rnd_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 50);
    const int sign = (rng() & 1) ? 1 : -1;
    return Rational(BigInt(num(rng)), BigInt(sign * den(rng)));
}

QuadElem rnd_quad(std::mt19937& rng, const BigInt& delta) {
    return QuadElem(rnd_rational(rng), rnd_rational(rng), delta);
}

}  // namespace

TEST_CASE("decimal round trip") {
    for (const char* text : {"0", "1", "-1", "123456789012345678901234567890",
                             "-99999999999999999999999999999999999999"}) {
        CHECK(to_decimal(parse_bigint(text)) == text);
    }
}

TEST_CASE("strict integer parse rejects junk") {
    CHECK_THROWS_AS(parse_bigint(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_bigint("-"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bigint("1 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bigint("12a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bigint("+3"), std::invalid_argument);
}

TEST_CASE("int_pow and binomial") {
    CHECK(int_pow(BigInt(0), 0) == 1);
    CHECK(int_pow(BigInt(-2), 5) == -32);
    CHECK(int_pow(BigInt(10), 20) == parse_bigint("100000000000000000000"));
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 7) == 0);
    for (std::uint64_t n = 0; n <= 12; ++n) {
        for (std::uint64_t k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == oracle::binomial(n, k));
        }
    }
}

TEST_CASE("rational_from_pair normalizes") {
    CHECK(rational_from_pair(BigInt(4), BigInt(-6)) == Rational(BigInt(-2), BigInt(3)));
    CHECK(rational_from_pair(BigInt(4), BigInt(-6)).str() == "-2/3");
    CHECK(rational_from_pair(BigInt(0), BigInt(7)).str() == "0/1");
    CHECK(rational_from_pair(BigInt(6), BigInt(3)).str() == "2/1");
    CHECK(rational_from_pair(BigInt(6), BigInt(3)).is_integer());
    CHECK_THROWS_WITH_AS(rational_from_pair(BigInt(1), BigInt(0)), "division by zero",
                         std::domain_error);
}

TEST_CASE("rational field axioms on random operands") {
    std::mt19937 rng(20240811);
    const Rational zero;
    const Rational one(BigInt(1));
    for (int i = 0; i < 300; ++i) {
        const Rational a = rnd_rational(rng);
        const Rational b = rnd_rational(rng);
        const Rational c = rnd_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == zero);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == one);
            CHECK(a / a == one);
        }
    }
    CHECK_THROWS_AS(one / zero, std::domain_error);
    CHECK_THROWS_AS(zero.inverse(), std::domain_error);
}

TEST_CASE("rational_pow handles signed exponents") {
    const Rational half(BigInt(1), BigInt(2));
    CHECK(rational_pow(half, 0) == Rational(BigInt(1)));
    CHECK(rational_pow(half, 3) == Rational(BigInt(1), BigInt(8)));
    CHECK(rational_pow(half, -3) == Rational(BigInt(8)));
    CHECK(rational_pow(Rational(BigInt(-2), BigInt(3)), -2) == Rational(BigInt(9), BigInt(4)));
    CHECK_THROWS_AS(rational_pow(Rational(), -1), std::domain_error);
}

TEST_CASE("quad_pow basics") {
    const BigInt five(5);
    const QuadElem alpha(Rational(BigInt(1), BigInt(2)), Rational(BigInt(1), BigInt(2)), five);

    const QuadElem sq = quad_pow(alpha, 2);
    CHECK(sq == QuadElem(Rational(BigInt(3), BigInt(2)), Rational(BigInt(1), BigInt(2)), five));

    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        const QuadElem z = rnd_quad(rng, five);
        CHECK(quad_pow(z, 0) == QuadElem::integer(BigInt(1), five));
        const std::uint64_t e = rng() % 9;
        CHECK(quad_pow(z, e) == oracle::quad_pow(z, e));
    }
}

TEST_CASE("quad_pow exponent law") {
    const BigInt five(5);
    const QuadElem alpha(Rational(BigInt(1), BigInt(2)), Rational(BigInt(1), BigInt(2)), five);
    std::mt19937 rng(11);
    for (int i = 0; i < 30; ++i) {
        const std::uint64_t n = rng() % 21;
        const std::uint64_t m = rng() % 21;
        CHECK(quad_pow(alpha, n) * quad_pow(alpha, m) == quad_pow(alpha, n + m));
    }
}

TEST_CASE("norm is multiplicative") {
    std::mt19937 rng(99);
    for (const long d : {5L, 8L, 9L, 1L, -3L, 12L}) {
        const BigInt delta(d);
        for (int i = 0; i < 40; ++i) {
            const QuadElem z = rnd_quad(rng, delta);
            const QuadElem w = rnd_quad(rng, delta);
            CHECK((z * w).norm() == z.norm() * w.norm());
        }
    }
}

TEST_CASE("root pair multiplies to q and sums to p") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> coeff(-20, 20);
    for (int i = 0; i < 100; ++i) {
        const BigInt p(coeff(rng));
        const BigInt q(coeff(rng));
        const BigInt delta = p * p - 4 * q;
        if (delta == 0) continue;
        const Rational half(BigInt(1), BigInt(2));
        const QuadElem alpha(Rational(p) * half, half, delta);
        const QuadElem beta(Rational(p) * half, -half, delta);
        CHECK(alpha * beta == QuadElem::integer(q, delta));
        CHECK(alpha + beta == QuadElem::integer(p, delta));
    }
}

TEST_CASE("division undoes multiplication") {
    std::mt19937 rng(4321);
    const BigInt delta(8);
    for (int i = 0; i < 50; ++i) {
        const QuadElem z = rnd_quad(rng, delta);
        const QuadElem w = rnd_quad(rng, delta);
        if (w.norm().is_zero()) continue;
        CHECK((z * w) / w == z);
    }
    CHECK_THROWS_AS(QuadElem::integer(BigInt(1), delta) / QuadElem::integer(BigInt(0), delta),
                    std::domain_error);
}

TEST_CASE("mixed discriminants are rejected") {
    const QuadElem a = QuadElem::integer(BigInt(1), BigInt(5));
    const QuadElem b = QuadElem::integer(BigInt(1), BigInt(8));
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("as_integer certifies the result") {
    const BigInt five(5);
    CHECK(as_integer(QuadElem::integer(BigInt(42), five)) == 42);
    CHECK_THROWS_AS(as_integer(QuadElem::sqrt_delta(five)), consistency_error);
    CHECK_THROWS_AS(as_integer(QuadElem(Rational(BigInt(1), BigInt(2)), Rational(), five)),
                    consistency_error);
}
