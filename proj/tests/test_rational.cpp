#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <sstream>

#include "cdc/errors.hpp"
#include "cdc/rational.hpp"

using cdc::Rational;
using big = boost::multiprecision::cpp_rational;

namespace {

big to_big(const Rational& r) { return big(r.num(), r.den()); }

}  // namespace

TEST_CASE("rational normalizes sign and common factors") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).den() == 2);
    CHECK(Rational(0, -7) == Rational(0));
    CHECK(Rational(0, -7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parse accepts integers, fractions and exact decimals") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("0.05") == Rational(1, 20));
    CHECK(Rational::parse("-0.05") == Rational(-1, 20));
    CHECK(Rational::parse("-.5") == Rational(-1, 2));
    CHECK(Rational::parse("1.25") == Rational(5, 4));
    CHECK(Rational::parse(" 2 ") == Rational(2));
    CHECK(Rational::parse("+4") == Rational(4));
    for (const char* bad : {"", "abc", "1/", "/2", "1/0", "1.", "1.2.3", "0x10", "1e3", "--1"})
        CHECK_THROWS_AS(Rational::parse(bad), cdc::ParseError);
}

TEST_CASE("rational formatting round-trips") {
    CHECK(Rational(17, 20).decimal_str() == "0.85");
    CHECK(Rational(-1, 20).decimal_str() == "-0.05");
    CHECK(Rational(1, 3).decimal_str() == "1/3");
    CHECK(Rational(-7).decimal_str() == "-7");
    CHECK(Rational(3, 8).str() == "3/8");
    std::ostringstream os;
    os << Rational(-5, 10);
    CHECK(os.str() == "-1/2");

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> num(-100000, 100000), den(1, 4000);
    for (int i = 0; i < 2000; ++i) {
        const Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.str()) == r);
        CHECK(Rational::parse(r.decimal_str()) == r);
    }
}

TEST_CASE("rational arithmetic matches arbitrary precision oracle") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> num(-1'000'000, 1'000'000), den(1, 100'000);
    for (int i = 0; i < 10000; ++i) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        CHECK(to_big(a + b) == to_big(a) + to_big(b));
        CHECK(to_big(a - b) == to_big(a) - to_big(b));
        CHECK(to_big(a * b) == to_big(a) * to_big(b));
        if (b != Rational(0)) CHECK(to_big(a / b) == to_big(a) / to_big(b));
        CHECK((a < b) == (to_big(a) < to_big(b)));
        CHECK((a == b) == (to_big(a) == to_big(b)));
    }
}

TEST_CASE("rational overflow is reported, never wrapped") {
    const Rational huge(INT64_MAX / 2 + 1);
    CHECK_THROWS_AS(huge + huge, std::overflow_error);
    CHECK_THROWS_AS(huge * Rational(3), std::overflow_error);
    CHECK_THROWS_AS(Rational(1, INT64_MAX) + Rational(1, INT64_MAX - 1), std::overflow_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    // Comparison of large values must not overflow.
    CHECK(Rational(INT64_MAX - 1, INT64_MAX) < Rational(INT64_MAX, INT64_MAX - 1));
}

TEST_CASE("min and max") {
    CHECK(cdc::min(Rational(1, 3), Rational(1, 4)) == Rational(1, 4));
    CHECK(cdc::max(Rational(-1), Rational(-2)) == Rational(-1));
}
