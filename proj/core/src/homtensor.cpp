/// @file homtensor.cpp
/// @brief Two-copy realization, homomorphism assembly, tensor products.

#include "qso4/homtensor.hpp"

#include <algorithm>
#include <utility>

#include "qso4/errors.hpp"

namespace qso4 {

namespace {

/// Inverse of a diagonal matrix; the invertibility of these factors is
/// exactly what the denominator certificates guarantee.
Matrix<Scalar> diag_inverse(const Matrix<Scalar>& m, const char* what) {
    if (m.rows() != m.cols()) throw ShapeMismatch("diag_inverse: not square");
    Matrix<Scalar> out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (r == c) continue;
            if (!is_zero(m(r, c)))
                throw ShapeMismatch(std::string("diag_inverse: ") + what +
                                    " is not diagonal");
        }
        if (is_zero(m(r, r)))
            throw NonInvertibleDenominator(
                std::string(what) + " has a zero diagonal entry at index " +
                std::to_string(r));
        out(r, r) = m(r, r).inverse();
    }
    return out;
}

bool diagonal_all_nonzero(const Matrix<Scalar>& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (is_zero(m(r, r))) return false;
    return true;
}

Matrix<Scalar> kron4(const Matrix<Scalar>& a, const Matrix<Scalar>& b,
                     const Matrix<Scalar>& c, const Matrix<Scalar>& d) {
    return kron(kron(kron(a, b), c), d);
}

/// Scalar multiple s * M, skipping zero entries.
Matrix<Scalar> scale(const Scalar& s, const Matrix<Scalar>& m) {
    Matrix<Scalar> out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!is_zero(m(r, c))) out(r, c) = s * m(r, c);
    return out;
}

/// The real-family Casimir eigenvalue (q^(2k+1)+q^(-2k-1))/(q-q^(-1))^2.
Scalar casimir_value_for_spin(HalfInt k) {
    const Scalar d2_inv = (q_diff() * q_diff()).inverse();
    return (q_pow(2 * k + HalfInt(1)) + q_pow(-(2 * k + HalfInt(1)))) * d2_inv;
}

struct SpinBlock {
    HalfInt k;
    bool imaginary = false;  ///< eigenvalue negated; x branch i q^(-k)
    Scalar lambda;           ///< Casimir eigenvalue on the block
};

/// Lagrange interpolation of (x, x^(-1)) on the verified spectrum of c:
/// x = sum_b x_b L_b(c), with branch values q^(-k) / q^(+k) on real-family
/// blocks and i q^(-k) / -i q^(+k) on imaginary-family blocks. The
/// annihilation identity prod_b (c - lambda_b) = 0 is checked exactly first.
std::pair<Matrix<Scalar>, Matrix<Scalar>> interpolate_x(
    const Matrix<Scalar>& casimir, const std::vector<SpinBlock>& blocks) {
    const std::size_t n = casimir.rows();
    Matrix<Scalar> ann = Matrix<Scalar>::identity(n);
    for (const SpinBlock& b : blocks) {
        Matrix<Scalar> factor = casimir;
        for (std::size_t r = 0; r < n; ++r)
            factor(r, r) = factor(r, r) - b.lambda;
        ann = ann * factor;
    }
    if (!ann.is_zero())
        throw UnrecognizedEigenvalue(
            "solve_x_quartic: Casimir is not annihilated by the candidate "
            "spectrum polynomial");

    Matrix<Scalar> x(n, n), xi(n, n);
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        Matrix<Scalar> lk = Matrix<Scalar>::identity(n);
        Scalar denom(1);
        for (std::size_t bj = 0; bj < blocks.size(); ++bj) {
            if (bj == bi) continue;
            Matrix<Scalar> factor = casimir;
            for (std::size_t r = 0; r < n; ++r)
                factor(r, r) = factor(r, r) - blocks[bj].lambda;
            lk = lk * factor;
            denom = denom * (blocks[bi].lambda - blocks[bj].lambda);
        }
        Scalar xk = q_pow(-blocks[bi].k);
        Scalar xki = q_pow(blocks[bi].k);
        if (blocks[bi].imaginary) {
            xk = Scalar(GaussRat::i()) * xk;
            xki = Scalar(GaussRat(0) - GaussRat::i()) * xki;
        }
        const Scalar denom_inv = denom.inverse();
        x = x + scale(xk * denom_inv, lk);
        xi = xi + scale(xki * denom_inv, lk);
    }
    return {std::move(x), std::move(xi)};
}

/// Discover which candidate eigenvalues occur, by exact rank tests at the
/// rational sample point s = 2 (distinct candidates stay distinct there).
/// Accumulated eigenspace dimensions stop the scan once they cover the
/// space.
std::vector<SpinBlock> discover_blocks(const Matrix<Scalar>& casimir) {
    const std::size_t n = casimir.rows();
    const mpq_class s0(2);
    Matrix<GaussRat> c2 = casimir.map<GaussRat>(
        [&](const Scalar& v) { return v.evaluate_rational(s0); });
    std::vector<SpinBlock> blocks;
    std::size_t covered = 0;
    const HalfInt kmax = HalfInt::from_twice(static_cast<int>(n) - 1);
    for (HalfInt k(0); k <= kmax && covered < n; k = k + HalfInt::kHalf) {
        const Scalar lam = casimir_value_for_spin(k);
        for (bool imaginary : {false, true}) {
            const Scalar lam_signed = imaginary ? Scalar(-1) * lam : lam;
            Matrix<GaussRat> shifted = c2;
            const GaussRat lam2 = lam_signed.evaluate_rational(s0);
            for (std::size_t r = 0; r < n; ++r)
                shifted(r, r) = shifted(r, r) - lam2;
            const std::size_t rk = shifted.rank();
            if (rk < n) {
                blocks.push_back({k, imaginary, lam_signed});
                covered += n - rk;
            }
        }
    }
    if (blocks.empty())
        throw UnrecognizedEigenvalue(
            "solve_x_quartic: no candidate Casimir eigenvalue matches");
    if (covered < n)
        throw UnrecognizedEigenvalue(
            "solve_x_quartic: candidate eigenvalues cover only " +
            std::to_string(covered) + " of " + std::to_string(n) +
            " dimensions");
    return blocks;
}

std::vector<SpinBlock> blocks_for_range(HalfInt lo, HalfInt hi,
                                        bool imaginary) {
    std::vector<SpinBlock> blocks;
    for (HalfInt k = lo; k <= hi; k = k + HalfInt(1)) {
        const Scalar lam = casimir_value_for_spin(k);
        blocks.push_back(
            {k, imaginary, imaginary ? Scalar(-1) * lam : lam});
    }
    return blocks;
}

}  // namespace

Matrix<Scalar> weight_sum_denominator(const TwoCopyOperators& ops, int j) {
    const Scalar qj = q_pow(HalfInt(j));
    const Scalar qmj = q_pow(HalfInt(-j));
    return scale(qj, ops.qH1 * ops.qH2) + scale(qmj, ops.qH1i * ops.qH2i);
}

Matrix<Scalar> weight_diff_denominator(const TwoCopyOperators& ops, int j) {
    const Scalar qj = q_pow(HalfInt(j));
    const Scalar qmj = q_pow(HalfInt(-j));
    return scale(qj, ops.qH1 * ops.qH2i) + scale(qmj, ops.qH1i * ops.qH2);
}

ExtRep ext_rep(HalfInt l, HalfInt lp, Sl2Phase eps, Sl2Phase epsp) {
    ExtRep ext;
    ext.left = build_sl2_irrep(l, eps);
    ext.right = build_sl2_irrep(lp, epsp);
    const std::size_t dl = ext.left.dim, dr = ext.right.dim;
    const Matrix<Scalar> il = Matrix<Scalar>::identity(dl);
    const Matrix<Scalar> ir = Matrix<Scalar>::identity(dr);

    TwoCopyOperators& o = ext.ops;
    o.dim = dl * dr;
    o.qH1 = kron(ext.left.qH, ir);
    o.qH1i = kron(ext.left.qH_inv, ir);
    o.qH2 = kron(il, ext.right.qH);
    o.qH2i = kron(il, ext.right.qH_inv);
    o.e1 = kron(ext.left.e, ir);
    o.f1 = kron(ext.left.f, ir);
    o.e2 = kron(il, ext.right.e);
    o.f2 = kron(il, ext.right.f);
    o.x1 = kron(ext.left.x, ir);
    o.x1i = kron(ext.left.x_inv, ir);
    o.x2 = kron(il, ext.right.x);
    o.x2i = kron(il, ext.right.x_inv);

    ext.provenance = "ext(l=" + l.str() + ", l'=" + lp.str() +
                     ", eps=" + phase_str(eps) + ", eps'=" + phase_str(epsp) +
                     ")";

    for (int j = -1; j <= 1; ++j) {
        ext.certificates.sum_ok[j + 1] =
            diagonal_all_nonzero(weight_sum_denominator(o, j));
        ext.certificates.diff_ok[j + 1] =
            diagonal_all_nonzero(weight_diff_denominator(o, j));
        if (!ext.certificates.sum_ok[j + 1])
            throw NonInvertibleDenominator(
                "weight-sum denominator at shift " + std::to_string(j) +
                " has a zero eigenvalue for " + ext.provenance);
        if (!ext.certificates.diff_ok[j + 1])
            throw NonInvertibleDenominator(
                "weight-difference denominator at shift " + std::to_string(j) +
                " has a zero eigenvalue for " + ext.provenance);
    }
    return ext;
}

So4Rep assemble_from_two_copies(const TwoCopyOperators& ops,
                                const std::string& provenance) {
    const Scalar q1 = q_pow(HalfInt(1));
    const Scalar qm1 = q_pow(HalfInt(-1));
    const Scalar d_inv = q_diff().inverse();
    const Scalar i_over_d = Scalar(GaussRat::i()) * d_inv;

    So4Rep rep;
    rep.dim = ops.dim;
    rep.provenance = provenance;
    rep.I21 = scale(i_over_d, ops.qH1 * ops.qH2 - ops.qH1i * ops.qH2i);
    rep.I43 = scale(i_over_d, ops.qH1 * ops.qH2i - ops.qH1i * ops.qH2);

    const Matrix<Scalar> dp_plus_inv =
        diag_inverse(weight_sum_denominator(ops, +1), "weight-sum (+1)");
    const Matrix<Scalar> dp_minus_inv =
        diag_inverse(weight_sum_denominator(ops, -1), "weight-sum (-1)");
    const Matrix<Scalar> dm_plus_inv =
        diag_inverse(weight_diff_denominator(ops, +1), "weight-difference (+1)");
    const Matrix<Scalar> dm_minus_inv =
        diag_inverse(weight_diff_denominator(ops, -1), "weight-difference (-1)");

    const Matrix<Scalar> n1 =
        scale(q1, ops.x1i * ops.qH2i) + scale(qm1, ops.x1 * ops.qH2);
    const Matrix<Scalar> n2 =
        scale(q1, ops.x1i * ops.qH2) + scale(qm1, ops.x1 * ops.qH2i);
    const Matrix<Scalar> n3 =
        scale(q1, ops.x2i * ops.qH1i) + scale(qm1, ops.x2 * ops.qH1);
    const Matrix<Scalar> n4 =
        scale(q1, ops.x2i * ops.qH1) + scale(qm1, ops.x2 * ops.qH1i);

    rep.I32 = scale(Scalar(-1), n1 * dp_minus_inv * dm_plus_inv * ops.e2) +
              n2 * dp_plus_inv * dm_minus_inv * ops.f2 +
              n3 * dp_minus_inv * dm_minus_inv * ops.e1 +
              scale(Scalar(-1), n4 * dp_plus_inv * dm_plus_inv * ops.f1);
    return rep;
}

So4Rep phi(const ExtRep& ext) {
    So4Rep rep = assemble_from_two_copies(ext.ops, "phi(" + ext.provenance + ")");
    std::vector<std::array<HalfInt, 2>> basis;
    basis.reserve(ext.ops.dim);
    for (HalfInt m = ext.left.l; m >= -ext.left.l; m = m - HalfInt(1))
        for (HalfInt mp = ext.right.l; mp >= -ext.right.l; mp = mp - HalfInt(1))
            basis.push_back({m, mp});
    rep.basis = std::move(basis);
    return rep;
}

Matrix<Scalar> solve_x_quartic(const Matrix<Scalar>& casimir) {
    if (casimir.rows() != casimir.cols())
        throw ShapeMismatch("solve_x_quartic: not square");
    return interpolate_x(casimir, discover_blocks(casimir)).first;
}

namespace {

/// Coproduct coupling of two sl2 irreps on their 2-factor product space:
/// e -> e (x) qH + qH^(-1) (x) e, and likewise for f; qH multiplies.
struct CoupledCopy {
    Matrix<Scalar> qH, qHi, e, f, x, xi;
    std::size_t dim = 0;
};

CoupledCopy couple(const Sl2Rep& a, const Sl2Rep& b, bool imaginary_family) {
    const Matrix<Scalar> ia = Matrix<Scalar>::identity(a.dim);
    const Matrix<Scalar> ib = Matrix<Scalar>::identity(b.dim);
    CoupledCopy c;
    c.dim = a.dim * b.dim;
    c.qH = kron(a.qH, b.qH);
    c.qHi = kron(a.qH_inv, b.qH_inv);
    c.e = kron(a.e, b.qH) + kron(a.qH_inv, b.e);
    c.f = kron(a.f, b.qH) + kron(a.qH_inv, b.f);

    const Scalar d2_inv = (q_diff() * q_diff()).inverse();
    const Scalar q1 = q_pow(HalfInt(1));
    const Scalar qm1 = q_pow(HalfInt(-1));
    const Matrix<Scalar> cas = c.e * c.f + scale(qm1 * d2_inv, c.qH * c.qH) +
                               scale(q1 * d2_inv, c.qHi * c.qHi);
    auto [x, xi] = interpolate_x(
        cas, blocks_for_range((a.l - b.l).abs(), a.l + b.l, imaginary_family));
    c.x = std::move(x);
    c.xi = std::move(xi);
    return c;
}

/// Embed an operator acting on the (1st, 3rd) factors of a 4-factor space,
/// identity on the (2nd, 4th): indices nest as (i1, i2, i3, i4).
Matrix<Scalar> embed_13(const Matrix<Scalar>& m, std::size_t d1,
                        std::size_t d2, std::size_t d3, std::size_t d4) {
    Matrix<Scalar> out(d1 * d2 * d3 * d4, d1 * d2 * d3 * d4);
    for (std::size_t i1 = 0; i1 < d1; ++i1)
        for (std::size_t j1 = 0; j1 < d1; ++j1)
            for (std::size_t i3 = 0; i3 < d3; ++i3)
                for (std::size_t j3 = 0; j3 < d3; ++j3) {
                    const Scalar& v = m(i1 * d3 + i3, j1 * d3 + j3);
                    if (is_zero(v)) continue;
                    for (std::size_t i2 = 0; i2 < d2; ++i2)
                        for (std::size_t i4 = 0; i4 < d4; ++i4) {
                            const std::size_t row =
                                ((i1 * d2 + i2) * d3 + i3) * d4 + i4;
                            const std::size_t col =
                                ((j1 * d2 + i2) * d3 + j3) * d4 + i4;
                            out(row, col) = v;
                        }
                }
    return out;
}

/// Embed an operator acting on the (2nd, 4th) factors, identity on (1st, 3rd).
Matrix<Scalar> embed_24(const Matrix<Scalar>& m, std::size_t d1,
                        std::size_t d2, std::size_t d3, std::size_t d4) {
    Matrix<Scalar> out(d1 * d2 * d3 * d4, d1 * d2 * d3 * d4);
    for (std::size_t i2 = 0; i2 < d2; ++i2)
        for (std::size_t j2 = 0; j2 < d2; ++j2)
            for (std::size_t i4 = 0; i4 < d4; ++i4)
                for (std::size_t j4 = 0; j4 < d4; ++j4) {
                    const Scalar& v = m(i2 * d4 + i4, j2 * d4 + j4);
                    if (is_zero(v)) continue;
                    for (std::size_t i1 = 0; i1 < d1; ++i1)
                        for (std::size_t i3 = 0; i3 < d3; ++i3) {
                            const std::size_t row =
                                ((i1 * d2 + i2) * d3 + i3) * d4 + i4;
                            const std::size_t col =
                                ((i1 * d2 + j2) * d3 + i3) * d4 + j4;
                            out(row, col) = v;
                        }
                }
    return out;
}

/// Shared pipeline for tensor() and the experimental variant: build the two
/// coupled copies on the small spaces, embed into the 4-factor space, and
/// assemble the three-generator representation.
struct FourFactorBuild {
    TwoCopyOperators ops;
    Matrix<Scalar> x1_small, x2_small;
};

FourFactorBuild four_factor_build(const Sl2Rep& r1, const Sl2Rep& r2,
                                  const Sl2Rep& r3, const Sl2Rep& r4,
                                  bool copy1_imaginary, bool copy2_imaginary) {
    const CoupledCopy c1 = couple(r1, r3, copy1_imaginary);
    const CoupledCopy c2 = couple(r2, r4, copy2_imaginary);
    const std::size_t d1 = r1.dim, d2 = r2.dim, d3 = r3.dim, d4 = r4.dim;

    FourFactorBuild b;
    b.ops.dim = d1 * d2 * d3 * d4;
    b.ops.qH1 = embed_13(c1.qH, d1, d2, d3, d4);
    b.ops.qH1i = embed_13(c1.qHi, d1, d2, d3, d4);
    b.ops.e1 = embed_13(c1.e, d1, d2, d3, d4);
    b.ops.f1 = embed_13(c1.f, d1, d2, d3, d4);
    b.ops.x1 = embed_13(c1.x, d1, d2, d3, d4);
    b.ops.x1i = embed_13(c1.xi, d1, d2, d3, d4);
    b.ops.qH2 = embed_24(c2.qH, d1, d2, d3, d4);
    b.ops.qH2i = embed_24(c2.qHi, d1, d2, d3, d4);
    b.ops.e2 = embed_24(c2.e, d1, d2, d3, d4);
    b.ops.f2 = embed_24(c2.f, d1, d2, d3, d4);
    b.ops.x2 = embed_24(c2.x, d1, d2, d3, d4);
    b.ops.x2i = embed_24(c2.xi, d1, d2, d3, d4);
    b.x1_small = c1.x;
    b.x2_small = c2.x;
    return b;
}

}  // namespace

TensorRep tensor(const IrrepLabel& a, const IrrepLabel& b) {
    if (a.kind != IrrepKind::Classical || b.kind != IrrepKind::Classical)
        throw InvalidLabel("tensor: both labels must be classical");
    a.validate();
    b.validate();

    const Sl2Rep r1 = build_sl2_irrep(a.j, Sl2Phase::PlusOne);
    const Sl2Rep r2 = build_sl2_irrep(a.jp, Sl2Phase::PlusOne);
    const Sl2Rep r3 = build_sl2_irrep(b.j, Sl2Phase::PlusOne);
    const Sl2Rep r4 = build_sl2_irrep(b.jp, Sl2Phase::PlusOne);

    FourFactorBuild built = four_factor_build(r1, r2, r3, r4, false, false);

    TensorRep t;
    t.left = a;
    t.right = b;
    t.x1 = built.ops.x1;
    t.x2 = built.ops.x2;

    So4Rep rep = assemble_from_two_copies(
        built.ops, "tensor(" + a.str() + ", " + b.str() + ")");

    // Weight labels (k, l) = (copy-1 weight, copy-2 weight) per product
    // basis vector, with the four factor weights nested (a.j outer ... b.jp
    // inner).
    std::vector<std::array<HalfInt, 2>> basis;
    basis.reserve(rep.dim);
    for (HalfInt m1 = a.j; m1 >= -a.j; m1 = m1 - HalfInt(1))
        for (HalfInt m2 = a.jp; m2 >= -a.jp; m2 = m2 - HalfInt(1))
            for (HalfInt m3 = b.j; m3 >= -b.j; m3 = m3 - HalfInt(1))
                for (HalfInt m4 = b.jp; m4 >= -b.jp; m4 = m4 - HalfInt(1))
                    basis.push_back({m1 + m3, m2 + m4});
    rep.basis = std::move(basis);
    t.rep = std::move(rep);
    return t;
}

std::vector<IrrepLabel> tensor_formula(const IrrepLabel& a,
                                       const IrrepLabel& b) {
    if (a.kind != IrrepKind::Classical || b.kind != IrrepKind::Classical)
        throw InvalidLabel("tensor_formula: both labels must be classical");
    std::vector<IrrepLabel> out;
    for (HalfInt k = (a.j - b.j).abs(); k <= a.j + b.j; k = k + HalfInt(1))
        for (HalfInt kp = (a.jp - b.jp).abs(); kp <= a.jp + b.jp;
             kp = kp + HalfInt(1)) {
            IrrepLabel lab;
            lab.kind = IrrepKind::Classical;
            lab.j = k;
            lab.jp = kp;
            out.push_back(lab);
        }
    std::sort(out.begin(), out.end());
    return out;
}

So4Rep tensor_pullback_experimental(const IrrepLabel& a, const IrrepLabel& b) {
    a.validate();
    b.validate();
    const bool a_nc = a.kind == IrrepKind::Nonclassical;
    const bool b_nc = b.kind == IrrepKind::Nonclassical;

    // A nonclassical label is realized by its reducible two-block parent
    // with the mixed phase pair (-i, +1); a classical label by (+1, +1).
    const Sl2Rep r1 =
        build_sl2_irrep(a.j, a_nc ? Sl2Phase::MinusI : Sl2Phase::PlusOne);
    const Sl2Rep r2 = build_sl2_irrep(a.jp, Sl2Phase::PlusOne);
    const Sl2Rep r3 =
        build_sl2_irrep(b.j, b_nc ? Sl2Phase::MinusI : Sl2Phase::PlusOne);
    const Sl2Rep r4 = build_sl2_irrep(b.jp, Sl2Phase::PlusOne);

    // Coupled copy-1 phase is the product of the factor phases: imaginary
    // exactly when one factor is a mixed-phase pullback.
    FourFactorBuild built = four_factor_build(r1, r2, r3, r4, a_nc != b_nc,
                                              /*copy2_imaginary=*/false);

    // Certificate probe before assembly: the j = 0 denominators are not
    // inverted by the assembly but expose the excluded-family zero first.
    for (int j = -1; j <= 1; ++j) {
        if (!diagonal_all_nonzero(weight_sum_denominator(built.ops, j)))
            throw NonInvertibleDenominator(
                "experimental tensor: weight-sum denominator at shift " +
                std::to_string(j) + " vanishes for " + a.str() + " (x) " +
                b.str());
        if (!diagonal_all_nonzero(weight_diff_denominator(built.ops, j)))
            throw NonInvertibleDenominator(
                "experimental tensor: weight-difference denominator at shift " +
                std::to_string(j) + " vanishes for " + a.str() + " (x) " +
                b.str());
    }
    return assemble_from_two_copies(
        built.ops,
        "experimental pullback tensor(" + a.str() + ", " + b.str() + ")");
}

}  // namespace qso4
