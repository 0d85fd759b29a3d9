#include "doctest.h"

#include <random>

#include "thaforge/rational.hpp"

using namespace thaforge;

TEST_CASE("BigInt small arithmetic agrees with long long")
{
    std::mt19937_64 rng(12345);
    auto draw = [&]() {
        long long v = static_cast<long long>(rng() % 2000001) - 1000000;
        return v;
    };
    for (int iter = 0; iter < 2000; ++iter) {
        long long a = draw(), b = draw();
        BigInt A(a), B(b);
        CHECK((A + B).to_longlong() == a + b);
        CHECK((A - B).to_longlong() == a - b);
        CHECK((A * B).to_longlong() == a * b);
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(A, B, q, r);
            CHECK(q.to_longlong() == a / b);
            CHECK(r.to_longlong() == a % b);
        }
        CHECK((A < B) == (a < b));
        CHECK((A == B) == (a == b));
    }
}

TEST_CASE("BigInt multi-limb division reconstructs the dividend")
{
    std::mt19937_64 rng(67890);
    auto draw_big = [&](int limbs) {
        BigInt v(0);
        for (int i = 0; i < limbs; ++i)
            v = v * BigInt(1LL << 32) + BigInt(static_cast<long long>(rng() & 0xffffffffULL));
        return rng() % 2 ? v : -v;
    };
    for (int iter = 0; iter < 300; ++iter) {
        BigInt a = draw_big(1 + static_cast<int>(rng() % 5));
        BigInt b = draw_big(1 + static_cast<int>(rng() % 3));
        if (b.is_zero())
            continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero())
            CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("BigInt string round trip")
{
    const char *cases[] = {"0", "1", "-1", "4294967295", "4294967296",
                           "-18446744073709551616",
                           "340282366920938463463374607431768211456",
                           "123456789012345678901234567890"};
    for (const char *s : cases)
        CHECK(BigInt::from_string(s).to_string() == s);
    CHECK(BigInt::from_string("-0").to_string() == "0");
    CHECK(BigInt::from_string("007").to_string() == "7");
    CHECK_THROWS_AS(BigInt::from_string("12x"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string(""), std::invalid_argument);
}

TEST_CASE("BigInt gcd")
{
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    BigInt big = BigInt::from_string("123456789012345678901234567890");
    CHECK(BigInt::gcd(big * BigInt(7), big * BigInt(5)) == big);
}

TEST_CASE("Rational canonical form")
{
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(2, -4).den() == BigInt(2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).den() == BigInt(1));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("Rational arithmetic")
{
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK(a.inverse() == Rational(2));
    CHECK(a < Rational(2, 3));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("Rational string forms")
{
    CHECK(Rational(3, 2).to_string() == "3/2");
    CHECK(Rational(-3, 2).to_string() == "-3/2");
    CHECK(Rational(7).to_string() == "7");
    CHECK(Rational::from_string("3/2") == Rational(3, 2));
    CHECK(Rational::from_string("-3/2") == Rational(-3, 2));
    CHECK(Rational::from_string("42") == Rational(42));
    CHECK(Rational::from_string("6/4") == Rational(3, 2));
}

TEST_CASE("Rational exactness on a telescoping sum")
{
    // sum 1/(k(k+1)) = 1 - 1/(n+1), no rounding anywhere
    Rational s(0);
    for (long long k = 1; k <= 200; ++k)
        s += Rational(1, k * (k + 1));
    CHECK(s == Rational(200, 201));
}
