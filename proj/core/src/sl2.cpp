/// @file sl2.cpp
/// @brief Implementation of the deformed-sl2 irreducible builders.

#include "qso4/sl2.hpp"

#include "qso4/errors.hpp"

namespace qso4 {

GaussRat phase_value(Sl2Phase eps) {
    switch (eps) {
        case Sl2Phase::PlusOne:
            return GaussRat(1);
        case Sl2Phase::MinusOne:
            return GaussRat(-1);
        case Sl2Phase::PlusI:
            return GaussRat::i();
        case Sl2Phase::MinusI:
            return -GaussRat::i();
    }
    throw Error("unreachable phase");
}

bool phase_is_real(Sl2Phase eps) {
    return eps == Sl2Phase::PlusOne || eps == Sl2Phase::MinusOne;
}

std::string phase_str(Sl2Phase eps) {
    switch (eps) {
        case Sl2Phase::PlusOne:
            return "+1";
        case Sl2Phase::MinusOne:
            return "-1";
        case Sl2Phase::PlusI:
            return "+i";
        case Sl2Phase::MinusI:
            return "-i";
    }
    throw Error("unreachable phase");
}

Sl2Phase parse_phase(const std::string& text) {
    if (text == "+1" || text == "1") return Sl2Phase::PlusOne;
    if (text == "-1") return Sl2Phase::MinusOne;
    if (text == "+i" || text == "i") return Sl2Phase::PlusI;
    if (text == "-i") return Sl2Phase::MinusI;
    throw ParseError("unknown phase literal: " + text + " (expected +1, -1, +i, -i)");
}

Sl2Rep build_sl2_irrep(HalfInt l, Sl2Phase eps) {
    if (l < HalfInt(0)) throw InvalidSpin("spin must be a non-negative half-integer, got " + l.str());
    Sl2Rep rep;
    rep.l = l;
    rep.eps = eps;
    const std::size_t n = static_cast<std::size_t>(l.twice()) + 1;
    rep.dim = n;
    rep.qH = Matrix<Scalar>(n, n);
    rep.qH_inv = Matrix<Scalar>(n, n);
    rep.e = Matrix<Scalar>(n, n);
    rep.f = Matrix<Scalar>(n, n);

    const Scalar phase = Scalar(phase_value(eps));
    const Scalar phase_inv = Scalar(1) / phase;
    for (std::size_t r = 0; r < n; ++r) {
        const HalfInt m = l - HalfInt(static_cast<int>(r));  // m = l - r
        rep.qH(r, r) = phase * q_pow(m);
        rep.qH_inv(r, r) = phase_inv * q_pow(-m);
    }
    // e raises m by one step: the image of column r lands in row r-1 with
    // coefficient [l - m] = [r]; f lowers with [l + m] = [2l - r], negated for
    // the imaginary phases.
    const bool flip_f = !phase_is_real(eps);
    for (std::size_t r = 0; r + 1 < n; ++r) {
        rep.e(r, r + 1) = qint(HalfInt(static_cast<int>(r) + 1));
        const Scalar low = qint(l + l - HalfInt(static_cast<int>(r)));
        rep.f(r + 1, r) = flip_f ? -low : low;
    }

    // Companion element: q^(-l) Id for real phases, i q^(-l) Id otherwise.
    const Scalar xval =
        phase_is_real(eps) ? q_pow(-l) : Scalar::i() * q_pow(-l);
    rep.x = Matrix<Scalar>(n, n);
    rep.x_inv = Matrix<Scalar>(n, n);
    const Scalar xinv = Scalar(1) / xval;
    for (std::size_t r = 0; r < n; ++r) {
        rep.x(r, r) = xval;
        rep.x_inv(r, r) = xinv;
    }
    return rep;
}

Matrix<Scalar> casimir_sl2(const Sl2Rep& rep) {
    const Scalar d = q_diff();
    const Scalar d2 = d * d;
    const Matrix<Scalar> qh2 = rep.qH * rep.qH;
    const Matrix<Scalar> qh2i = rep.qH_inv * rep.qH_inv;
    const Scalar qi = q_pow(HalfInt(-1));
    const Scalar q1 = q_pow(HalfInt(1));
    Matrix<Scalar> out = rep.e * rep.f;
    out = out + (qi / d2) * qh2 + (q1 / d2) * qh2i;
    return out;
}

Scalar casimir_sl2_scalar(const Sl2Rep& rep) {
    Scalar value;
    if (!casimir_sl2(rep).is_scalar(&value))
        throw NotScalar("Casimir of the sl2 irreducible is not scalar");
    return value;
}

Scalar casimir_sl2_value(HalfInt l, Sl2Phase eps) {
    const Scalar d = q_diff();
    const Scalar val = (q_pow(2 * l + 1) + q_pow(-(2 * l + 1))) / (d * d);
    return phase_is_real(eps) ? val : -val;
}

Matrix<Scalar> x_inverse(const Sl2Rep& rep) {
    const Scalar d = q_diff();
    const Matrix<Scalar> c = casimir_sl2(rep);
    const Matrix<Scalar> x3 = rep.x * rep.x * rep.x;
    const Scalar qi = q_pow(HalfInt(-1));
    Matrix<Scalar> out = (-(qi)) * x3 + (d * d) * (c * rep.x);
    out = qi * out;
    if (!(out * rep.x == Matrix<Scalar>::identity(rep.dim)))
        throw Error("companion-element inverse identity failed");
    return out;
}

}  // namespace qso4
