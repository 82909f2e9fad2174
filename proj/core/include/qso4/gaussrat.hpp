/// @file gaussrat.hpp
/// @brief Exact Gaussian rationals a + b·i with a, b in Q (GMP-backed).
///
/// This is the coefficient field of every polynomial in the library. All
/// operations are exact; division by zero throws DivisionByZero.
#pragma once

#include <gmpxx.h>

#include <complex>
#include <ostream>
#include <string>
#include <utility>

#include "qso4/errors.hpp"

namespace qso4 {

class GaussRat {
   public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(int n) : re_(n), im_(0) {}  // NOLINT(google-explicit-constructor)
    GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    explicit GaussRat(mpq_class re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }

    static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }
    /// num/den as a real rational.
    static GaussRat ratio(long num, long den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        return GaussRat(mpq_class(num, den));
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat conj() const { return GaussRat(re_, -im_); }

    GaussRat& operator+=(const GaussRat& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        mpq_class n2 = o.re_ * o.re_ + o.im_ * o.im_;
        if (n2 == 0) throw DivisionByZero("division by zero Gaussian rational");
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n2;
        mpq_class i = (im_ * o.re_ - re_ * o.im_) / n2;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// Canonical text form used inside polynomial strings:
    ///   "3", "-2/5", "i", "-i", "3/2*i", "(1+2*i)", "(1/2-3*i)".
    /// A purely-real or purely-imaginary value never gets parentheses.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const GaussRat& g) { return os << g.str(); }

   private:
    mpq_class re_, im_;
};

inline bool is_zero(const GaussRat& g) { return g.is_zero(); }

inline std::string GaussRat::str() const {
    auto rat = [](const mpq_class& q) { return q.get_str(); };
    if (im_ == 0) return rat(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = rat(im_) + "*i";
    if (re_ == 0) return imag;
    std::string out = "(" + rat(re_);
    if (imag[0] == '-')
        out += imag;
    else
        out += "+" + imag;
    out += ")";
    return out;
}

}  // namespace qso4
