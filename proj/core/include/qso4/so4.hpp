/// @file so4.hpp
/// @brief The three-generator algebra core: representation container,
///        q-commutators, derived generators, defining/consequence relation
///        checks, and the two Casimir elements.
///
/// A representation is a triple of square matrices (I21, I32, I43) over
/// Q(i)(s). The deformed commutators
///   [A,B]_q      = q^(1/2) A B - q^(-1/2) B A,
///   [A,B]_(q^-1) = q^(-1/2) A B - q^(1/2) B A
/// generate the remaining elements I31, I42, I41 and their minus-variant
/// partners.
#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qso4/matrix.hpp"
#include "qso4/scalar.hpp"

namespace qso4 {

struct So4Rep {
    std::size_t dim = 0;
    Matrix<Scalar> I21, I32, I43;
    /// Weight labels (k, l) per basis vector, when the construction knows them.
    std::optional<std::vector<std::array<HalfInt, 2>>> basis;
    /// Free-form origin tag ("classical builder", "two-copy image", ...).
    std::string provenance;
    /// Canonical label string when the rep is a catalog irreducible.
    std::optional<std::string> label;
};

enum class CommVariant { Q, QInv };

/// Deformed commutator of square matrices of equal size.
Matrix<Scalar> q_comm(const Matrix<Scalar>& a, const Matrix<Scalar>& b,
                      CommVariant variant = CommVariant::Q);

struct DerivedGenerators {
    Matrix<Scalar> I31, I42, I41;     ///< plus-variant: nested q-commutators
    Matrix<Scalar> I31m, I42m, I41m;  ///< minus-variant partners; I41m pairs
                                      ///< the plus-variant I31 with the
                                      ///< inverse-deformed commutator
    /// The alternative route to I41 (through I42 instead of I31) must agree.
    bool i41_routes_agree = false;
};

/// Compute all six derived generators from a representation.
/// Throws ShapeMismatch on inconsistent matrix sizes.
DerivedGenerators derived_generators(const So4Rep& rep);

struct RelationReport {
    struct Entry {
        bool passes = false;
        std::size_t residual_nonzeros = 0;  ///< entries of LHS - RHS that are nonzero
    };
    /// Keyed "(6)" ... "(15)": five defining relations and five groups of
    /// consequence relations (external interface keys).
    std::map<std::string, Entry> entries;
    bool i41_routes_agree = false;
    bool checked_long = false;

    bool all_pass() const {
        if (!i41_routes_agree && checked_long) return false;
        for (const auto& [key, e] : entries)
            if (!e.passes) return false;
        return true;
    }
};

/// Check the defining relations, and optionally the consequence relations for
/// the derived generators, with exact zero residuals.
RelationReport verify_relations(const So4Rep& rep, bool include_long = true);

/// Weight-family sniff from a diagonal matrix: which eigenvalue family do the
/// diagonal entries belong to?
enum class WeightFamily { Classical, Nonclassical, Mixed, Unknown };

/// Match a scalar against the candidate weight eigenvalues:
///   classical family    i*[m]     (purely imaginary; signed m recoverable),
///   nonclassical family +-[m]_+   (real, never zero; |m| recoverable).
/// Returns (family, m, sign) with sign meaningful only for the nonclassical
/// family. The search is bounded by |m| <= bound.
struct WeightEigenvalue {
    WeightFamily family = WeightFamily::Unknown;
    HalfInt m;     ///< classical: signed m; nonclassical: |m| >= 0
    int sign = 0;  ///< nonclassical: the +- in +-[m]_+
};
WeightEigenvalue match_weight_eigenvalue(const Scalar& value, HalfInt bound);

/// Family of the diagonal of a (diagonal) matrix; Unknown if some entry
/// matches neither family or the matrix is not diagonal.
WeightFamily sniff_weight_family(const Matrix<Scalar>& m, HalfInt bound);

struct CasimirPair {
    Matrix<Scalar> c4;
    Matrix<Scalar> c4p;          ///< authoritative expanded (ordered-product) form
    Matrix<Scalar> c4p_compact;  ///< compact printed form; deviates on the
                                 ///< nonclassical family (see tests/ledger)
    bool forms_agree = false;
};

/// Compute both Casimirs. The two printed forms of the second Casimir are
/// both evaluated; they coincide on classical-family representations, and a
/// disagreement there throws FormMismatch (it would mean a transcription
/// defect). On nonclassical-family representations the compact form is known
/// to deviate; the expanded form is the one consistent with the ladder
/// product identities and is used everywhere downstream.
CasimirPair casimirs(const So4Rep& rep);

/// The scalar of a scalar matrix; throws NotScalar otherwise.
Scalar scalar_of(const Matrix<Scalar>& m);

}  // namespace qso4
