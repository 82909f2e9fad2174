/// @file sl2.hpp
/// @brief Finite-dimensional irreducibles of the deformed sl2 algebra over
///        Q(i)(s), in all four phase classes, plus the companion element x
///        that the two-copy construction needs.
///
/// Generators qH, e, f satisfy qH e = q e qH, qH f = q^(-1) f qH and
/// [e, f] = (qH^2 - qH^(-2)) / (q - q^(-1)). The basis is the weight basis
/// m = l, l-1, ..., -l (descending). The phase eps multiplies the qH
/// eigenvalues; imaginary phases flip the sign of f and force the companion
/// element to x = i q^(-l) Id (so the Casimir identity linking c and x holds
/// exactly — see the unit tests for the identity checks).
#pragma once

#include <cstddef>
#include <string>

#include "qso4/matrix.hpp"
#include "qso4/scalar.hpp"

namespace qso4 {

enum class Sl2Phase { PlusOne, MinusOne, PlusI, MinusI };

/// The multiplicative phase value: +1, -1, +i, -i.
GaussRat phase_value(Sl2Phase eps);
bool phase_is_real(Sl2Phase eps);
/// "+1", "-1", "+i", "-i".
std::string phase_str(Sl2Phase eps);
Sl2Phase parse_phase(const std::string& text);

struct Sl2Rep {
    HalfInt l;
    Sl2Phase eps = Sl2Phase::PlusOne;
    std::size_t dim = 0;
    Matrix<Scalar> qH, qH_inv;  ///< diagonal: eps * q^(+-m)
    Matrix<Scalar> e, f;        ///< one-step raising / lowering in m
    Matrix<Scalar> x, x_inv;    ///< companion scalar matrices
};

/// Build the spin-l irreducible with the given phase. Throws InvalidSpin for
/// negative l.
Sl2Rep build_sl2_irrep(HalfInt l, Sl2Phase eps);

/// The Casimir matrix c = e f + (q^(-1) qH^2 + q qH^(-2)) / (q - q^(-1))^2.
Matrix<Scalar> casimir_sl2(const Sl2Rep& rep);

/// The Casimir as a scalar; throws NotScalar if the matrix is not a multiple
/// of the identity.
Scalar casimir_sl2_scalar(const Sl2Rep& rep);

/// Closed form of the Casimir eigenvalue: +-(q^(2l+1) + q^(-2l-1))/(q-q^(-1))^2,
/// with the minus sign for the imaginary phases.
Scalar casimir_sl2_value(HalfInt l, Sl2Phase eps);

/// Recover x^(-1) from x and the Casimir via the cubic identity
/// x^(-1) = (-x^3 q^(-1) + c (q - q^(-1))^2 x) q^(-1); verified against the
/// directly built inverse in the tests.
Matrix<Scalar> x_inverse(const Sl2Rep& rep);

}  // namespace qso4
