#include <doctest.h>

#include "operadic/rational.hpp"
#include "test_util.hpp"

using namespace operadic;

TEST_SUITE("bigint") {
    TEST_CASE("small arithmetic and comparisons") {
        CHECK(BigInt(2) + BigInt(3) == BigInt(5));
        CHECK(BigInt(-2) + BigInt(3) == BigInt(1));
        CHECK(BigInt(2) - BigInt(3) == BigInt(-1));
        CHECK(BigInt(-4) * BigInt(-5) == BigInt(20));
        CHECK(BigInt(7) / BigInt(2) == BigInt(3));
        CHECK(BigInt(7) % BigInt(2) == BigInt(1));
        CHECK(BigInt(-7) / BigInt(2) == BigInt(-3));
        CHECK(BigInt(-7) % BigInt(2) == BigInt(-1));
        CHECK(BigInt(-5) < BigInt(3));
        CHECK(BigInt(0).is_zero());
        CHECK(BigInt(std::numeric_limits<std::int64_t>::min()).to_string() ==
              "-9223372036854775808");
    }

    TEST_CASE("crossing the word boundary") {
        BigInt big = BigInt::from_string("18446744073709551615");  // 2^64 - 1
        CHECK((big + BigInt(1)).to_string() == "18446744073709551616");
        CHECK((big + BigInt(1)) - BigInt(1) == big);
        BigInt sq = big * big;
        CHECK(sq.to_string() == "340282366920938463426481119284349108225");
        CHECK(sq / big == big);
        CHECK((sq % big).is_zero());
        CHECK(isqrt(sq) == big);
        CHECK(isqrt(sq - BigInt(1)) == big - BigInt(1));
    }

    TEST_CASE("factorial round trip") {
        BigInt f(1);
        for (int i = 2; i <= 40; ++i) f = f * BigInt(i);
        CHECK(f.to_string() == "815915283247897734345611269596115894272000000000");
        CHECK(BigInt::from_string(f.to_string()) == f);
        for (int i = 40; i >= 2; --i) {
            CHECK((f % BigInt(i)).is_zero());
            f = f / BigInt(i);
        }
        CHECK(f == BigInt(1));
    }

    TEST_CASE("multi-limb division") {
        BigInt a = BigInt::from_string("10000000000000000000000000000000000000007");
        BigInt b = BigInt::from_string("100000000000000000003");
        CHECK((a / b).to_string() == "99999999999999999997");
        CHECK((a % b).to_string() == "16");
        CHECK((a / b) * b + (a % b) == a);

        BigInt c = BigInt::from_string("147808829414345923316083210206383297601");  // 3^80
        BigInt d = BigInt::from_string("1267650600228229401496703205385");          // 2^100+9
        BigInt q = (c * d) / (c - BigInt(1));
        BigInt r = (c * d) % (c - BigInt(1));
        CHECK(q == d);
        CHECK(r == d);
        // gcd(2^80·3, 2^40·9) = 2^40·3
        CHECK(gcd(BigInt::from_string("3626777458843887524118528"),
                  BigInt::from_string("9895604649984"))
                  .to_string() == "3298534883328");
    }

    TEST_CASE("gcd") {
        CHECK(gcd(BigInt(12), BigInt(18)) == BigInt(6));
        CHECK(gcd(BigInt(-12), BigInt(18)) == BigInt(6));
        CHECK(gcd(BigInt(0), BigInt(-7)) == BigInt(7));
        BigInt p = BigInt::from_string("1000000000000000003");
        CHECK(gcd(p * BigInt(6), p * BigInt(4)) == p * BigInt(2));
    }

    TEST_CASE("random consistency against int64 arithmetic") {
        testutil::Rng rng(42);
        for (int i = 0; i < 2000; ++i) {
            std::int64_t a = static_cast<std::int64_t>(rng.next() % 2000001) - 1000000;
            std::int64_t b = static_cast<std::int64_t>(rng.next() % 2000001) - 1000000;
            CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
            CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
            if (b != 0) {
                CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
                CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
            }
        }
    }
}

TEST_SUITE("rational") {
    TEST_CASE("lowest terms, positive denominator") {
        CHECK(Rational(2, 4).to_string() == "1/2");
        CHECK(Rational(-2, 4).to_string() == "-1/2");
        CHECK(Rational(2, -4).to_string() == "-1/2");
        CHECK(Rational(0, -5).to_string() == "0");
        CHECK(Rational(6, 3).to_string() == "2");
    }

    TEST_CASE("parsing") {
        CHECK(Rational::from_string("-3/2") == Rational(-3, 2));
        CHECK(Rational::from_string("7") == Rational(7));
        CHECK(Rational::from_string("4/6") == Rational(2, 3));
        CHECK_THROWS(Rational::from_string("1.5"));
        CHECK_THROWS(Rational::from_string("1e3"));
        CHECK_THROWS(Rational::from_string(""));
        CHECK_THROWS(Rational::from_string("1/0"));
    }

    TEST_CASE("field axioms on seeded values") {
        testutil::Rng rng(7);
        for (int i = 0; i < 500; ++i) {
            Rational a = rng.small_scalar(), b = rng.small_scalar(), c = rng.small_scalar();
            CHECK(a + b - b == a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!b.is_zero()) CHECK((a * b) / b == a);
        }
    }

    TEST_CASE("exact square roots") {
        CHECK(*sqrt_exact(Rational(9, 4)) == Rational(3, 2));
        CHECK(*sqrt_exact(Rational(0)) == Rational(0));
        CHECK(!sqrt_exact(Rational(2)).has_value());
        CHECK(!sqrt_exact(Rational(-1)).has_value());
        CHECK(!sqrt_exact(Rational(9, 5)).has_value());
    }
}
