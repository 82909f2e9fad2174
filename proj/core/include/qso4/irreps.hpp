/// @file irreps.hpp
/// @brief Builders for the two irreducible families (classical and
///        nonclassical), weight-spectrum extraction, and catalog enumeration.
///
/// Classical irreducibles R_{j,j'} have purely imaginary generator spectra
/// i[m] and carry a (2j+1)(2j'+1)-dimensional weight basis |k,l>. The
/// nonclassical family R^(e1,e2,e3)_{j,j'} exists when exactly one of j, j'
/// is half-integral; its spectra are the real values +-[m]_+, its dimension
/// is (2j+1)(2j'+1)/2, and each (j,j') supports 8 sign triples.
#pragma once

#include <string>
#include <vector>

#include "qso4/halfint.hpp"
#include "qso4/so4.hpp"

namespace qso4 {

enum class IrrepKind { Classical, Nonclassical };

/// Canonical name of an irreducible representation.
///
/// Nonclassical labels are kept in canonical form j >= jp; the swap
/// equivalence (realized by the basis permutation |k,l> -> |l,k>) preserves
/// all three signs, because the diagonal spectra [k+l]_+ and [k-l]_+ are
/// symmetric under the swap ([a]_+ is an even function of a).
struct IrrepLabel {
    IrrepKind kind = IrrepKind::Classical;
    HalfInt j, jp;
    int eps1 = +1, eps2 = +1, eps3 = +1;  ///< Nonclassical only; values +-1

    /// Throws InvalidLabel unless the label satisfies its family invariant:
    /// spins >= 0; nonclassical additionally requires exactly one of j, jp
    /// half-integral and eps values in {+1,-1}.
    void validate() const;

    /// Returns the label with j >= jp enforced via the sign-preserving swap
    /// equivalence. Classical labels are returned unchanged (R_{j,jp} and
    /// R_{jp,j} are genuinely inequivalent).
    IrrepLabel canonical() const;

    /// Representation dimension: (2j+1)(2jp+1) classical, half that
    /// nonclassical.
    std::size_t dim() const;

    /// Render as "classical:j=1/2,jp=3/2" or
    /// "nonclassical:j=1/2,jp=1,eps=+,+,-".
    std::string str() const;

    /// Parse the str() syntax. Throws ParseError on malformed input and
    /// InvalidLabel on well-formed but invalid labels. Nonclassical labels
    /// are canonicalized.
    static IrrepLabel parse(const std::string& text);

    bool operator==(const IrrepLabel& o) const;
    bool operator<(const IrrepLabel& o) const;  ///< lexicographic, for multisets
};

/// Classical-family irreducible on the weight basis |k,l>,
/// k = j..-j descending (outer), l = jp..-jp descending (inner):
///   I21 |k,l> = i[k+l] |k,l>,   I43 |k,l> = i[k-l] |k,l>,
/// and I32 the four-term neighbor ladder. Throws InvalidSpin.
So4Rep classical_irrep(HalfInt j, HalfInt jp);

/// Nonclassical-family irreducible, built by pulling the two-copy image back
/// along the mixed-phase factor pair and projecting onto one eigenspace of
/// the parity involution; the sign eps3 is read intrinsically from the trace
/// of I32, and eps1, eps2 are applied as diagonal sign twists. The basis is
/// the positive half of the weight lattice: k = j..1/2 (outer) when jp is
/// integral, l = jp..1/2 (outer) when j is integral, full range on the other
/// axis (inner), all descending. Throws InvalidLabel.
So4Rep nonclassical_irrep(const IrrepLabel& label);

/// Direct transcription of the nonclassical action (diagonal spectra, the
/// interior four-term ladder, and the real reflection term at the boundary
/// weight). Used as an independent cross-check oracle against
/// nonclassical_irrep; the two must agree entrywise.
So4Rep nonclassical_irrep_direct(const IrrepLabel& label);

/// One row of a weight table: a simultaneous (I21, I43) eigenvalue pair
/// described by its recovered (k, l) and the family it belongs to.
struct WeightEntry {
    HalfInt k, l;          ///< classical: signed; nonclassical: k+l, k-l >= 0 data
    int sign1 = 0, sign2 = 0;  ///< nonclassical: signs in +-[k+l]_+, +-[k-l]_+
    std::size_t index = 0;     ///< basis position
};

struct WeightTable {
    WeightFamily family = WeightFamily::Unknown;
    std::vector<WeightEntry> entries;  ///< one per basis vector, basis order
};

/// Simultaneous spectrum of the diagonal pair (I21, I43).
///
/// Requires the two matrices to be diagonal in the given basis and to
/// commute; throws NotCommuting otherwise (a non-diagonal pair must be first
/// brought to diagonal form by the caller, e.g. via decompose). Eigenvalues
/// are matched exactly against the two candidate families; a representation
/// mixing both families throws MixedTypes, and an eigenvalue matching
/// neither throws UnrecognizedEigenvalue.
WeightTable weight_spectrum(const So4Rep& rep);

/// Recover (k, l) from a matched eigenvalue pair. For the classical family
/// the signed eigenvalue arguments a = k+l, b = k-l give k = (a+b)/2,
/// l = (a-b)/2 uniquely. For the nonclassical family only |k+l| and |k-l|
/// are observable; the convention k+l > 0 (case a) or with k-l's sign chosen
/// so the pair lies in the builder's half-lattice is applied by the caller.
struct WeightPair {
    HalfInt k, l;
};

/// All classical labels with j, jp <= max_spin (both spins range over all
/// half-integers 0, 1/2, ..., max_spin independently).
std::vector<IrrepLabel> classical_catalog(HalfInt max_spin);

/// All canonical nonclassical labels (j >= jp, exactly one half-integral)
/// with dimension (2j+1)(2jp+1)/2 <= max_dim. When all_triples is true the
/// 8 sign triples are emitted per spin pair; otherwise only (+,+,+).
std::vector<IrrepLabel> nonclassical_catalog(std::size_t max_dim,
                                             bool all_triples = true);

}  // namespace qso4
