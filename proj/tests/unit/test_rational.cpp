#include <doctest.h>

#include <cmath>

#include "kdelete/rational.hpp"

using namespace kdelete;

TEST_CASE("e enclosure") {
    CHECK(e_lower() < e_upper());
    CHECK(to_double(e_lower()) <= std::exp(1.0));
    CHECK(to_double(e_upper()) >= std::exp(1.0));
    CHECK(e_upper() - e_lower() == Rational(1, 1000000000000));
}

TEST_CASE("integer roots") {
    CHECK(iroot_floor(0, 3) == 0);
    CHECK(iroot_floor(26, 3) == 2);
    CHECK(iroot_floor(27, 3) == 3);
    CHECK(iroot_floor(BigInt(1) << 100, 4) == BigInt(1) << 25);
    CHECK(iroot_floor((BigInt(1) << 100) - 1, 4) == (BigInt(1) << 25) - 1);
    for (unsigned q = 1; q <= 5; ++q)
        for (int x = 0; x < 300; ++x) {
            const BigInt r = iroot_floor(x, q);
            CHECK(ipow(r, q) <= x);
            CHECK(ipow(r + 1, q) > x);
        }
}

TEST_CASE("rational roots enclose") {
    for (unsigned q = 1; q <= 6; ++q)
        for (const Rational& x : {Rational(0), Rational(2), Rational(1, 3), Rational(1000000), Rational(81, 16)}) {
            const Rational lo = root_lower(x, q), hi = root_upper(x, q);
            CHECK(rpow(lo, q) <= x);
            CHECK(rpow(hi, q) >= x);
            CHECK(hi - lo <= Rational(2, 1000000000000));
        }
    CHECK(root_lower(Rational(81, 16), 4) == Rational(3, 2));
    CHECK(root_upper(Rational(81, 16), 4) == Rational(3, 2));
}

TEST_CASE("fraction strings") {
    CHECK(to_fraction_string(Rational(6, 4)) == "3/2");
    CHECK(to_fraction_string(Rational(5)) == "5/1");
    CHECK(to_fraction_string(Rational(-1, 3)) == "-1/3");
}

TEST_CASE("round_up_12 never rounds down") {
    for (double x : {0.0, 0.1, 1.0 / 3.0, 12345.678901234567, 2.5e-13}) {
        const Rational r = round_up_12(x);
        CHECK(r >= Rational(x));
        CHECK(r - Rational(x) <= Rational(3, 1000000000000));
    }
}
