/// @file test_scalar.cpp
/// @brief Oracle tests for the exact scalar field Q(i)(s).
///
/// The expected strings and values below were computed by hand from the
/// definitions and frozen before the implementation was finished: the
/// q-number examples, the canonical-form strings, the evaluation spot values
/// and the algebraic identities act as independent oracles.

#include <complex>
#include <random>

#include "doctest.h"
#include "qso4/scalar.hpp"

using namespace qso4;

namespace {

Scalar q() { return q_pow(HalfInt(1)); }

/// Random small Laurent fraction for property tests.
Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> expo(-3, 3);
    auto poly = [&](bool nonzero) {
        LaurentPoly p;
        for (int t = 0; t < 3; ++t)
            p = p + LaurentPoly(GaussRat(mpq_class(coeff(rng)), mpq_class(coeff(rng))), expo(rng));
        if (nonzero && p.is_zero()) p = LaurentPoly(GaussRat(1), 0);
        return p;
    };
    return Scalar(poly(false), poly(true));
}

}  // namespace

TEST_SUITE("halfint") {
    TEST_CASE("arithmetic and parity") {
        CHECK(kHalf + kHalf == HalfInt(1));
        CHECK((3 * kHalf).str() == "3/2");
        CHECK(HalfInt(2).str() == "2");
        CHECK((-kHalf).str() == "-1/2");
        CHECK(kHalf.is_integer() == false);
        CHECK(HalfInt(-3).is_integer());
        CHECK(HalfInt::parse("3/2") == 3 * kHalf);
        CHECK(HalfInt::parse("-1/2") == -kHalf);
        CHECK(HalfInt::parse("2") == HalfInt(2));
        CHECK_THROWS_AS(HalfInt::parse("1/3"), ParseError);
        CHECK_THROWS_AS(HalfInt::parse("x"), ParseError);
        CHECK(HalfInt(1) > kHalf);
        CHECK((-kHalf).abs() == kHalf);
    }
}

TEST_SUITE("gaussrat") {
    TEST_CASE("field operations") {
        const GaussRat a(mpq_class(1, 2), mpq_class(3));
        const GaussRat b(mpq_class(-2), mpq_class(1, 4));
        CHECK((a + b) - b == a);
        CHECK((a * b) / b == a);
        CHECK(a * GaussRat(1) == a);
        CHECK((GaussRat::i() * GaussRat::i()) == GaussRat(-1));
        CHECK_THROWS_AS(a / GaussRat(0), DivisionByZero);
        CHECK(a.conj().conj() == a);
    }

    TEST_CASE("printing") {
        CHECK(GaussRat(3).str() == "3");
        CHECK(GaussRat(mpq_class(-2, 5)).str() == "-2/5");
        CHECK(GaussRat::i().str() == "i");
        CHECK((-GaussRat::i()).str() == "-i");
        CHECK(GaussRat(mpq_class(0), mpq_class(3, 2)).str() == "3/2*i");
        CHECK(GaussRat(mpq_class(1), mpq_class(2)).str() == "(1+2*i)");
        CHECK(GaussRat(mpq_class(1, 2), mpq_class(-3)).str() == "(1/2-3*i)");
    }
}

TEST_SUITE("scalar") {
    TEST_CASE("canonical strings of the basic q-numbers") {
        // [2] = q + q^(-1) = s^2 + s^(-2)
        CHECK(qint(HalfInt(2)).str() == "(1*s^2 + 1*s^-2)/(1)");
        // [1/2] = 1/(s + s^(-1)) = s/(s^2 + 1)
        CHECK(qint(kHalf).str() == "(1*s^1)/(1*s^2 + 1)");
        // [1/2]+ = 1/(s - s^(-1)) = s/(s^2 - 1)
        CHECK(qplus(kHalf).str() == "(1*s^1)/(1*s^2 + -1)");
        // [0]+ = 2/(q - q^(-1)) = 2 s^2/(s^4 - 1)
        CHECK(qplus(HalfInt(0)).str() == "(2*s^2)/(1*s^4 + -1)");
        CHECK(qint(HalfInt(0)).is_zero());
        CHECK(qint(HalfInt(1)) == Scalar(1));
    }

    TEST_CASE("q-number identities") {
        // [a]^2 - [a+1][a-1] = 1 for integer a.
        for (int a = 1; a <= 6; ++a) {
            const Scalar lhs =
                qint(HalfInt(a)) * qint(HalfInt(a)) - qint(HalfInt(a + 1)) * qint(HalfInt(a - 1));
            CHECK(lhs == Scalar(1));
        }
        // [2a] = [a] (q^a + q^(-a)).
        for (HalfInt a : {kHalf, HalfInt(1), 3 * kHalf, HalfInt(2)}) {
            CHECK(qint(a + a) == qint(a) * (q_pow(a) + q_pow(-a)));
        }
        // Parity: [-a] = -[a], [-a]+ = [a]+.
        for (HalfInt a : {kHalf, HalfInt(1), 5 * kHalf}) {
            CHECK(qint(-a) == -qint(a));
            CHECK(qplus(-a) == qplus(a));
        }
        // [a]+ [a] = [2a] / (q - q^(-1)).
        for (HalfInt a : {kHalf, HalfInt(1), HalfInt(2)}) {
            CHECK(qplus(a) * qint(a) == qint(a + a) / q_diff());
        }
    }

    TEST_CASE("canonical form is unique and arithmetic is a field") {
        std::mt19937 rng(12345);
        for (int t = 0; t < 200; ++t) {
            const Scalar a = random_scalar(rng);
            const Scalar b = random_scalar(rng);
            CHECK((a + b) - b == a);
            if (!b.is_zero()) CHECK((a * b) / b == a);
            CHECK(a * (Scalar(1) / Scalar(1)) == a);
            // Canonical form: re-normalizing the parts changes nothing.
            const Scalar again(a.num(), a.den());
            CHECK(again == a);
            // Round-trip through text.
            CHECK(Scalar::parse(a.str()) == a);
        }
        CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
        CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
    }

    TEST_CASE("denominator canonicalization") {
        // (s^3 - s) / (2 s^2 - 2) = s / 2: gcd strips, leading unit scales.
        const Scalar x(LaurentPoly(1, {GaussRat(-1), GaussRat(0), GaussRat(1)}),
                       LaurentPoly(0, {GaussRat(-2), GaussRat(0), GaussRat(2)}));
        CHECK(x.str() == "(1/2*s^1)/(1)");
        // Laurent shifts live in the numerator; denominators keep a nonzero
        // constant term and unit leading coefficient.
        const Scalar y = Scalar(1) / (Scalar::s_pow(2) + Scalar::s_pow(-2));
        CHECK(y.den().lo() == 0);
        CHECK(!y.den().at(0).is_zero());
        CHECK(y.den().at(y.den().hi()).is_one());
        CHECK(y.str() == "(1*s^2)/(1*s^4 + 1)");
    }

    TEST_CASE("parse accepts the documented grammar") {
        CHECK(Scalar::parse("(1*s^2 + 1*s^-2)/(1)") == qint(HalfInt(2)));
        CHECK(Scalar::parse("s^2+s^-2") == qint(HalfInt(2)));
        CHECK(Scalar::parse("i") == Scalar::i());
        CHECK(Scalar::parse("-i*s^3") == -(Scalar::i() * Scalar::s_pow(3)));
        CHECK(Scalar::parse("(1+2*i)*s^-1") ==
              Scalar(GaussRat(mpq_class(1), mpq_class(2))) * Scalar::s_pow(-1));
        CHECK(Scalar::parse("3/2*i") == Scalar(GaussRat(mpq_class(0), mpq_class(3, 2))));
        CHECK(Scalar::parse("0") == Scalar(0));
        CHECK(Scalar::parse(" ( 2*s^1 ) / ( s^2 + -1 ) ") == qplus(kHalf) * Scalar(2));
        CHECK_THROWS_AS(Scalar::parse(""), ParseError);
        CHECK_THROWS_AS(Scalar::parse("s^"), ParseError);
        CHECK_THROWS_AS(Scalar::parse("1/"), ParseError);
        CHECK_THROWS_AS(Scalar::parse("(1)/(0)"), DivisionByZero);
    }

    TEST_CASE("numeric evaluation") {
        // [2] at q = 2 is 2 + 1/2.
        CHECK(qint(HalfInt(2)).evaluate({2.0, 0.0}).real() == doctest::Approx(2.5).epsilon(1e-12));
        // [1/2] at q = 4: (2 - 1/2)/(4 - 1/4) = 0.4.
        CHECK(qint(kHalf).evaluate({4.0, 0.0}).real() == doctest::Approx(0.4).epsilon(1e-12));
        CHECK_THROWS_AS(qint(kHalf).evaluate({1.0, 0.0}), RootOfUnity);
        CHECK_THROWS_AS(qint(kHalf).evaluate({0.0, 1.0}), RootOfUnity);  // i: fourth root
        CHECK_THROWS_AS(qint(kHalf).evaluate({0.0, 0.0}), DivisionByZero);
        // q = -1 is a square root of unity.
        CHECK_THROWS_AS(qint(kHalf).evaluate({-1.0, 0.0}), RootOfUnity);
    }

    TEST_CASE("evaluation is a field homomorphism") {
        std::mt19937 rng(99);
        const std::complex<double> q0(1.7, 0.3);
        int checked = 0;
        for (int t = 0; t < 1000; ++t) {
            const Scalar a = random_scalar(rng);
            const Scalar b = random_scalar(rng);
            std::complex<double> ea, eb, es, ep;
            try {
                ea = a.evaluate(q0);
                eb = b.evaluate(q0);
                es = (a + b).evaluate(q0);
                ep = (a * b).evaluate(q0);
            } catch (const DivisionByZero&) {
                continue;  // a random denominator may vanish at q0
            }
            CHECK(std::abs(es - (ea + eb)) < 1e-12 * (1.0 + std::abs(es)));
            CHECK(std::abs(ep - ea * eb) < 1e-12 * (1.0 + std::abs(ep)));
            ++checked;
        }
        CHECK(checked > 900);
    }

    TEST_CASE("exact rational evaluation") {
        // s = 2 means q = 4: [2] = 4 + 1/4.
        CHECK(qint(HalfInt(2)).evaluate_rational(2) == GaussRat(mpq_class(17, 4)));
        CHECK(qint(kHalf).evaluate_rational(2) == GaussRat(mpq_class(2, 5)));
        CHECK((Scalar::i() * qint(HalfInt(1))).evaluate_rational(2) == GaussRat::i());
        CHECK_THROWS_AS((Scalar(1) / (Scalar::s_pow(1) - Scalar(2))).evaluate_rational(2),
                        DivisionByZero);
    }

    TEST_CASE("constants are recognized") {
        CHECK(Scalar(7).is_constant());
        CHECK(Scalar::i().constant() == GaussRat::i());
        CHECK(!q().is_constant());
        CHECK(qint(HalfInt(1)).is_constant());  // [1] = 1
    }
}
