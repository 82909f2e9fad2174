/// @file test_sl2.cpp
/// @brief Module oracle for the deformed-sl2 irreducibles: defining relations,
///        Casimir values, and the companion-element identities, all exact.

#include "doctest.h"
#include "qso4/sl2.hpp"

using namespace qso4;

namespace {

const std::vector<HalfInt> kSpins = {HalfInt(0), kHalf, HalfInt(1), 3 * kHalf, HalfInt(2)};
const std::vector<Sl2Phase> kPhases = {Sl2Phase::PlusOne, Sl2Phase::MinusOne, Sl2Phase::PlusI,
                                       Sl2Phase::MinusI};

Scalar q() { return q_pow(HalfInt(1)); }
Scalar qi() { return q_pow(HalfInt(-1)); }

}  // namespace

TEST_SUITE("sl2") {
    TEST_CASE("defining relations hold exactly for all spins and phases") {
        for (HalfInt l : kSpins) {
            for (Sl2Phase eps : kPhases) {
                const Sl2Rep rep = build_sl2_irrep(l, eps);
                CHECK(rep.dim == static_cast<std::size_t>(l.twice()) + 1);
                CHECK(rep.qH * rep.qH_inv == Matrix<Scalar>::identity(rep.dim));
                // qH e = q e qH and qH f = q^(-1) f qH.
                CHECK(rep.qH * rep.e == q() * (rep.e * rep.qH));
                CHECK(rep.qH * rep.f == qi() * (rep.f * rep.qH));
                // [e, f] = (qH^2 - qH^(-2)) / (q - q^(-1)).
                const Matrix<Scalar> lhs = rep.e * rep.f - rep.f * rep.e;
                const Matrix<Scalar> rhs =
                    (Scalar(1) / q_diff()) * (rep.qH * rep.qH - rep.qH_inv * rep.qH_inv);
                CHECK(lhs == rhs);
            }
        }
        CHECK_THROWS_AS(build_sl2_irrep(-kHalf, Sl2Phase::PlusOne), InvalidSpin);
    }

    TEST_CASE("weight diagonal") {
        const Sl2Rep rep = build_sl2_irrep(HalfInt(1), Sl2Phase::MinusI);
        // qH = -i * diag(q, 1, q^(-1)).
        CHECK(rep.qH(0, 0) == -(Scalar::i() * q()));
        CHECK(rep.qH(1, 1) == -Scalar::i());
        CHECK(rep.qH(2, 2) == -(Scalar::i() * qi()));
        // e is one-step raising with [l - m]: e |0> = [1] |1>.
        CHECK(rep.e(0, 1) == Scalar(1));
        CHECK(rep.e(1, 2) == qint(HalfInt(2)));
        // f carries the extra sign for imaginary phases.
        CHECK(rep.f(1, 0) == -qint(HalfInt(2)));
    }

    TEST_CASE("Casimir is scalar and matches the closed form") {
        for (HalfInt l : kSpins) {
            for (Sl2Phase eps : kPhases) {
                const Sl2Rep rep = build_sl2_irrep(l, eps);
                const Scalar c = casimir_sl2_scalar(rep);
                CHECK(c == casimir_sl2_value(l, eps));
            }
        }
        // Frozen examples: spin 0 real, spin 1 real, spin 1/2 imaginary.
        const Scalar d2 = q_diff() * q_diff();
        CHECK(casimir_sl2_value(HalfInt(0), Sl2Phase::PlusOne) == (q() + qi()) / d2);
        CHECK(casimir_sl2_value(HalfInt(1), Sl2Phase::MinusOne) ==
              (q_pow(HalfInt(3)) + q_pow(HalfInt(-3))) / d2);
        CHECK(casimir_sl2_value(kHalf, Sl2Phase::PlusI) ==
              -((q_pow(HalfInt(2)) + q_pow(HalfInt(-2))) / d2));
        // Real and imaginary phase classes are separated by the Casimir.
        for (HalfInt l : kSpins)
            CHECK(casimir_sl2_value(l, Sl2Phase::PlusOne) !=
                  casimir_sl2_value(l, Sl2Phase::PlusI));
    }

    TEST_CASE("companion element") {
        for (HalfInt l : kSpins) {
            for (Sl2Phase eps : kPhases) {
                const Sl2Rep rep = build_sl2_irrep(l, eps);
                // Direct inverse matches the cubic-identity reconstruction.
                CHECK(x_inverse(rep) == rep.x_inv);
                CHECK(rep.x * rep.x_inv == Matrix<Scalar>::identity(rep.dim));
                // The Casimir identity that pins the phase branch of x:
                // c = (x^2 q^(-1) + x^(-2) q) / (q - q^(-1))^2.
                const Matrix<Scalar> c = casimir_sl2(rep);
                const Matrix<Scalar> rhs = (Scalar(1) / (q_diff() * q_diff())) *
                                           (qi() * (rep.x * rep.x) + q() * (rep.x_inv * rep.x_inv));
                CHECK(c == rhs);
                // Quartic: x^4 = q c (q - q^(-1))^2 x^2 - q^2.
                const Matrix<Scalar> x2 = rep.x * rep.x;
                const Matrix<Scalar> lhs = x2 * x2;
                const Matrix<Scalar> quartic_rhs =
                    (q() * q_diff() * q_diff()) * (c * x2) -
                    (q() * q()) * Matrix<Scalar>::identity(rep.dim);
                CHECK(lhs == quartic_rhs);
                // Value: q^(-l) for real phases, i q^(-l) for imaginary ones.
                const Scalar expected =
                    phase_is_real(eps) ? q_pow(-l) : Scalar::i() * q_pow(-l);
                CHECK(rep.x(0, 0) == expected);
            }
        }
    }

    TEST_CASE("phase helpers") {
        CHECK(parse_phase("+1") == Sl2Phase::PlusOne);
        CHECK(parse_phase("-i") == Sl2Phase::MinusI);
        CHECK(phase_str(Sl2Phase::PlusI) == "+i");
        CHECK_THROWS_AS(parse_phase("2"), ParseError);
        CHECK(phase_value(Sl2Phase::MinusI) == -GaussRat::i());
    }
}
