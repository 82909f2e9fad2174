/// @file homtensor.hpp
/// @brief The two-copy realization: pairs of quadratically extended
///        U_q(sl2) representations on a product basis, the homomorphism that
///        assembles a three-generator representation from them, and tensor
///        products of classical irreducibles with their decomposition.
#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "qso4/irreps.hpp"
#include "qso4/matrix.hpp"
#include "qso4/scalar.hpp"
#include "qso4/sl2.hpp"
#include "qso4/so4.hpp"

namespace qso4 {

/// The cached operator set of two commuting extended-U_q(sl2) copies acting
/// on one space: copy 1 carries qH1, e1, f1, x1; copy 2 carries qH2, e2,
/// f2, x2; every listed matrix commutes with every matrix of the other copy.
struct TwoCopyOperators {
    std::size_t dim = 0;
    Matrix<Scalar> qH1, qH1i, qH2, qH2i;
    Matrix<Scalar> e1, f1, e2, f2;
    Matrix<Scalar> x1, x1i, x2, x2i;
};

/// Invertibility certificates for the diagonal denominators
///   q^j qH1 qH2 + q^(-j) (qH1 qH2)^(-1)   (weight-sum form) and
///   q^j qH1 qH2^(-1) + q^(-j) qH1^(-1) qH2 (weight-difference form),
/// checked for j in {-1, 0, +1}: true means every diagonal entry is nonzero.
/// The j = +-1 factors are the ones the homomorphism actually inverts; the
/// j = 0 factor is the detector for the excluded mixed-phase family (its
/// zero eigenvalue appears exactly when the spin sum is integral).
struct DenominatorCertificates {
    std::array<bool, 3> sum_ok{};   ///< j = -1, 0, +1
    std::array<bool, 3> diff_ok{};  ///< j = -1, 0, +1
    bool all_ok() const {
        for (bool b : sum_ok)
            if (!b) return false;
        for (bool b : diff_ok)
            if (!b) return false;
        return true;
    }
};

/// A tensor pair of extended-U_q(sl2) irreducibles on the product basis
/// |l,m> (x) |l',m'> with m descending (outer), m' descending (inner).
struct ExtRep {
    Sl2Rep left, right;
    TwoCopyOperators ops;
    DenominatorCertificates certificates;
    std::string provenance;
};

/// Build the tensor pair of the two extended irreducibles. Valid phase
/// combinations: both real (+1/-1), both imaginary (+i/-i) unconditionally;
/// a mixed real/imaginary pair requires l + lp half-integral (not integral),
/// otherwise the weight-sum denominator at j = 0 acquires a zero diagonal
/// entry and NonInvertibleDenominator is thrown. Throws InvalidSpin for
/// negative spins.
ExtRep ext_rep(HalfInt l, HalfInt lp, Sl2Phase eps, Sl2Phase epsp);

/// The weight-sum denominator q^j qH1 qH2 + q^(-j) (qH1 qH2)^(-1) (diagonal).
Matrix<Scalar> weight_sum_denominator(const TwoCopyOperators& ops, int j);
/// The weight-difference denominator q^j qH1 qH2^(-1) + q^(-j) qH1^(-1) qH2.
Matrix<Scalar> weight_diff_denominator(const TwoCopyOperators& ops, int j);

/// Assemble the three-generator representation carried by a two-copy
/// operator set:
///   I21 = i (qH1 qH2 - (qH1 qH2)^(-1)) / (q - q^(-1)),
///   I43 = i (qH1 qH2^(-1) - qH1^(-1) qH2) / (q - q^(-1)),
/// and I32 as the four-term combination of e1, f1, e2, f2 with diagonal
/// prefactors built from x1, x2, qH1, qH2 and the inverted denominator
/// factors at j = +-1. Throws NonInvertibleDenominator if an inverted factor
/// has a zero diagonal entry. The result satisfies the defining relations
/// exactly for every admissible input (the executable content of the
/// homomorphism theorem; asserted by the test suite, not re-checked here).
So4Rep assemble_from_two_copies(const TwoCopyOperators& ops,
                                const std::string& provenance);

/// assemble_from_two_copies on an ExtRep, with (m, m') basis labels attached.
So4Rep phi(const ExtRep& ext);

/// A tensor product of two classical irreducibles, carried by the four-factor
/// space (H_j (x) H_jp) (x) (H_s (x) H_sp) with basis ordered by the factor
/// nesting (j outer ... sp inner). Copy 1 of the two-copy structure acts on
/// factors 1 and 3 through the standard coproduct, copy 2 on factors 2 and 4.
struct TensorRep {
    So4Rep rep;
    IrrepLabel left, right;
    Matrix<Scalar> x1, x2;  ///< block solutions of the quartic, value q^(-k)
                            ///< on each coupled spin-k Casimir eigenblock
};

/// Build the tensor product representation of two classical labels.
/// Both labels must be classical (InvalidLabel otherwise).
TensorRep tensor(const IrrepLabel& a, const IrrepLabel& b);

/// Solve the quartic x^4 q^(-1) - c (q-q^(-1))^2 x^2 + q = 0 for a diagonal
/// Casimir matrix c: on each eigenblock with eigenvalue
///   +(q^(2k+1)+q^(-2k-1))/(q-q^(-1))^2 the solution branch q^(-k) is taken;
/// on each eigenblock with the negated eigenvalue (imaginary-phase family)
/// the branch i q^(-k) is taken. The matrix must be diagonal; eigenvalues
/// matching neither form throw UnrecognizedEigenvalue. The bound on k is
/// the matrix dimension.
Matrix<Scalar> solve_x_quartic(const Matrix<Scalar>& casimir);

/// Decompose tensor(a, b) into irreducible labels via the generic
/// decomposition engine, then compare against the closed double-range
/// formula; a disagreement throws MismatchAgainstFormula. Returns the sorted
/// label multiset.
std::vector<IrrepLabel> decompose_tensor(const IrrepLabel& a,
                                         const IrrepLabel& b);

/// Closed-form tensor decomposition for classical labels: the double range
/// k = |j-s|..j+s, k' = |jp-sp|..jp+sp. Returns the sorted label multiset.
std::vector<IrrepLabel> tensor_formula(const IrrepLabel& a,
                                       const IrrepLabel& b);

/// EXPERIMENTAL: the same pipeline applied to mixed-phase pullbacks. For a
/// nonclassical label the factor pair realizes the reducible two-block
/// parent representation (phases -i, +1), so the result is the tensor
/// product of parents, not of single nonclassical blocks. Only
/// relation-validity is guaranteed (checked by the caller/tests); no
/// decomposition formula is claimed for the output.
So4Rep tensor_pullback_experimental(const IrrepLabel& a, const IrrepLabel& b);

}  // namespace qso4
