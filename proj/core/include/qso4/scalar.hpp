/// @file scalar.hpp
/// @brief Exact arithmetic in Q(i)(s): rational functions in s = q^(1/2) with
///        Gaussian-rational coefficients.
///
/// A Scalar is a reduced fraction num/den of Laurent polynomials in s.
/// Canonical form (unique, so equality is structural):
///   * den is an ordinary polynomial (no negative powers), monic, with
///     nonzero constant term — i.e. the whole Laurent shift lives in num;
///   * gcd(num's polynomial part, den) = 1.
/// Working in s rather than q keeps every half-integer power of q — which the
/// representation formulas use pervasively — polynomial.
#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qso4/gaussrat.hpp"
#include "qso4/halfint.hpp"

namespace qso4 {

/// Dense Laurent polynomial: value = sum_t coeff[t] * s^(lo + t).
/// Invariant: coeff is empty (the zero polynomial, lo = 0) or has nonzero
/// first and last entries.
class LaurentPoly {
   public:
    LaurentPoly() = default;
    /// Single term c * s^e (drops to zero if c == 0).
    LaurentPoly(GaussRat c, int e);
    /// From raw data; trims leading/trailing zeros.
    LaurentPoly(int lo, std::vector<GaussRat> coeff);

    bool is_zero() const { return coeff_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(coeff_.size()) - 1; }
    const std::vector<GaussRat>& coeff() const { return coeff_; }
    /// Coefficient of s^e (zero outside the stored window).
    GaussRat at(int e) const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.lo_ == b.lo_ && a.coeff_ == b.coeff_;
    }

    /// Multiply by s^e.
    LaurentPoly shifted(int e) const;

    std::complex<double> evaluate(std::complex<double> s0) const;
    /// Exact evaluation at a nonzero rational point.
    GaussRat evaluate_rational(const mpq_class& s0) const;

   private:
    void trim();
    int lo_ = 0;
    std::vector<GaussRat> coeff_;
};

class Scalar {
   public:
    /// Zero.
    Scalar();
    Scalar(int n);              // NOLINT(google-explicit-constructor)
    Scalar(const GaussRat& g);  // NOLINT(google-explicit-constructor)
    /// num/den, normalized to canonical form. Throws DivisionByZero if den == 0.
    Scalar(LaurentPoly num, LaurentPoly den);

    /// The monomial s^e.
    static Scalar s_pow(int e);
    /// The imaginary unit.
    static Scalar i();

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    /// True if the value is a Gaussian-rational constant (den == 1, num degree 0).
    bool is_constant() const;
    /// The constant value if is_constant(), otherwise nullopt.
    std::optional<GaussRat> constant() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;

    /// Canonical text form "(num)/(den)", terms in descending powers of s,
    /// e.g. "(1*s^2 + 1*s^-2)/(1)". parse() round-trips this exactly.
    std::string str() const;
    static Scalar parse(const std::string& text);

    /// Numeric evaluation at q = q0 on the principal branch s0 = sqrt(q0).
    /// Screens q0 against roots of unity up to unity_bound (throws RootOfUnity)
    /// and vanishing denominators (throws DivisionByZero).
    std::complex<double> evaluate(std::complex<double> q0, int unity_bound = 64) const;

    /// Exact evaluation at the rational point s = s0 (s0 != 0).
    /// Throws DivisionByZero if the denominator vanishes there.
    GaussRat evaluate_rational(const mpq_class& s0) const;

    friend std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

   private:
    void normalize(LaurentPoly num, LaurentPoly den);
    LaurentPoly num_, den_;
};

inline bool is_zero(const Scalar& x) { return x.is_zero(); }

/// q^a as an element of Q(i)(s), for any half-integer a (q = s^2).
Scalar q_pow(HalfInt a);

/// The symmetric q-number [a] = (q^a - q^(-a)) / (q - q^(-1)).
/// Odd in a; vanishes exactly at a = 0; i*[m] over half-integers m is injective.
Scalar qint(HalfInt a);

/// The companion even q-number [a]+ = (q^a + q^(-a)) / (q - q^(-1)).
/// Even in a and never zero; injective on a >= 0.
Scalar qplus(HalfInt a);

/// q - q^(-1), the ubiquitous deformation denominator.
Scalar q_diff();

}  // namespace qso4
