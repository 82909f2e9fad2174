/// @file scalar.cpp
/// @brief Implementation of the exact scalar field Q(i)(s).

#include "qso4/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace qso4 {

namespace {

/// Ordinary polynomial (coefficients ascending from s^0), used only inside
/// normalization. Invariant: empty == zero, otherwise nonzero leading coeff.
using Poly = std::vector<GaussRat>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, GaussRat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    poly_trim(out);
    return out;
}

/// In-place remainder a mod b (b nonzero); quotient discarded.
void poly_mod(Poly& a, const Poly& b) {
    const GaussRat lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        GaussRat f = a.back() / lead;
        std::size_t off = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
        poly_trim(a);
    }
}

/// Monic gcd via the Euclidean algorithm.
Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        poly_mod(a, b);
        std::swap(a, b);
    }
    if (!a.empty()) {
        GaussRat lead = a.back();
        for (auto& c : a) c = c / lead;
    }
    return a;
}

/// Exact division a / b (caller guarantees divisibility).
Poly poly_div_exact(Poly a, const Poly& b) {
    Poly q;
    if (a.empty()) return q;
    q.assign(a.size() - b.size() + 1, GaussRat(0));
    const GaussRat lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        GaussRat f = a.back() / lead;
        std::size_t off = a.size() - b.size();
        q[off] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
        poly_trim(a);
    }
    poly_trim(q);
    return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(GaussRat c, int e) {
    if (!c.is_zero()) {
        lo_ = e;
        coeff_.push_back(std::move(c));
    }
}

LaurentPoly::LaurentPoly(int lo, std::vector<GaussRat> coeff) : lo_(lo), coeff_(std::move(coeff)) {
    trim();
}

void LaurentPoly::trim() {
    std::size_t front = 0;
    while (front < coeff_.size() && coeff_[front].is_zero()) ++front;
    if (front == coeff_.size()) {
        coeff_.clear();
        lo_ = 0;
        return;
    }
    std::size_t back = coeff_.size();
    while (back > front && coeff_[back - 1].is_zero()) --back;
    if (front > 0 || back < coeff_.size()) {
        coeff_ = std::vector<GaussRat>(coeff_.begin() + static_cast<long>(front),
                                       coeff_.begin() + static_cast<long>(back));
        lo_ += static_cast<int>(front);
    }
}

GaussRat LaurentPoly::at(int e) const {
    if (coeff_.empty() || e < lo_ || e > hi()) return GaussRat(0);
    return coeff_[static_cast<std::size_t>(e - lo_)];
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& c : out.coeff_) c = -c;
    return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.lo_, b.lo_);
    int hi = std::max(a.hi(), b.hi());
    std::vector<GaussRat> c(static_cast<std::size_t>(hi - lo + 1), GaussRat(0));
    for (std::size_t t = 0; t < a.coeff_.size(); ++t)
        c[static_cast<std::size_t>(a.lo_ - lo) + t] += a.coeff_[t];
    for (std::size_t t = 0; t < b.coeff_.size(); ++t)
        c[static_cast<std::size_t>(b.lo_ - lo) + t] += b.coeff_[t];
    return LaurentPoly(lo, std::move(c));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussRat> c(a.coeff_.size() + b.coeff_.size() - 1, GaussRat(0));
    for (std::size_t i = 0; i < a.coeff_.size(); ++i) {
        if (a.coeff_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeff_.size(); ++j) {
            if (b.coeff_[j].is_zero()) continue;
            c[i + j] += a.coeff_[i] * b.coeff_[j];
        }
    }
    return LaurentPoly(a.lo_ + b.lo_, std::move(c));
}

LaurentPoly LaurentPoly::shifted(int e) const {
    LaurentPoly out = *this;
    if (!out.coeff_.empty()) out.lo_ += e;
    return out;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> s0) const {
    // Horner over the polynomial part, then the Laurent shift.
    std::complex<double> acc = 0.0;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * s0 + it->to_complex();
    return acc * std::pow(s0, lo_);
}

GaussRat LaurentPoly::evaluate_rational(const mpq_class& s0) const {
    if (s0 == 0) throw DivisionByZero("exact evaluation at s = 0");
    GaussRat acc(0);
    const GaussRat s(s0);
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * s + *it;
    if (lo_ != 0) {
        mpq_class p(1);
        const bool invert = lo_ < 0;
        for (int k = 0; k < std::abs(lo_); ++k) p *= s0;
        acc = invert ? acc / GaussRat(p) : acc * GaussRat(p);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar() : num_(), den_(GaussRat(1), 0) {}
Scalar::Scalar(int n) : num_(GaussRat(n), 0), den_(GaussRat(1), 0) {}
Scalar::Scalar(const GaussRat& g) : num_(g, 0), den_(GaussRat(1), 0) {}

Scalar::Scalar(LaurentPoly num, LaurentPoly den) { normalize(std::move(num), std::move(den)); }

void Scalar::normalize(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero()) throw DivisionByZero("scalar with zero denominator");
    if (num.is_zero()) {
        num_ = LaurentPoly();
        den_ = LaurentPoly(GaussRat(1), 0);
        return;
    }
    // Split off the Laurent shifts: num = s^a * P, den = s^b * Q with
    // P(0) != 0, Q(0) != 0; the fraction is s^(a-b) * P/Q.
    const int shift = num.lo() - den.lo();
    Poly p = num.coeff();
    Poly q = den.coeff();
    Poly g = poly_gcd(p, q);
    if (g.size() > 1) {
        p = poly_div_exact(std::move(p), g);
        q = poly_div_exact(std::move(q), g);
    }
    // Make the denominator monic.
    const GaussRat lead = q.back();
    if (!lead.is_one()) {
        for (auto& c : q) c = c / lead;
        for (auto& c : p) c = c / lead;
    }
    num_ = LaurentPoly(shift, std::move(p));
    den_ = LaurentPoly(0, std::move(q));
}

Scalar Scalar::s_pow(int e) {
    Scalar x;
    x.num_ = LaurentPoly(GaussRat(1), e);
    return x;
}

Scalar Scalar::i() { return Scalar(GaussRat::i()); }

bool Scalar::is_one() const {
    return num_.coeff().size() == 1 && num_.lo() == 0 && num_.coeff()[0].is_one() &&
           den_.coeff().size() == 1;
}

bool Scalar::is_constant() const {
    return den_.coeff().size() == 1 && (num_.is_zero() || (num_.lo() == 0 && num_.coeff().size() == 1));
}

std::optional<GaussRat> Scalar::constant() const {
    if (!is_constant()) return std::nullopt;
    if (num_.is_zero()) return GaussRat(0);
    return num_.coeff()[0];
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.num_ = -out.num_;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    normalize(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    normalize(num_ * o.num_, den_ * o.den_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZero("scalar division by zero");
    normalize(num_ * o.den_, den_ * o.num_);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    Scalar out;
    out.normalize(den_, num_);
    return out;
}

std::complex<double> Scalar::evaluate(std::complex<double> q0, int unity_bound) const {
    constexpr double kTol = 1e-9;
    if (std::abs(q0) < kTol) throw DivisionByZero("numeric evaluation at q = 0");
    std::complex<double> p = 1.0;
    for (int n = 1; n <= unity_bound; ++n) {
        p *= q0;
        if (std::abs(p - 1.0) < kTol)
            throw RootOfUnity("q is a root of unity of order " + std::to_string(n));
    }
    const std::complex<double> s0 = std::sqrt(q0);
    const std::complex<double> d = den_.evaluate(s0);
    if (std::abs(d) < kTol) throw DivisionByZero("denominator vanishes at the evaluation point");
    return num_.evaluate(s0) / d;
}

GaussRat Scalar::evaluate_rational(const mpq_class& s0) const {
    const GaussRat d = den_.evaluate_rational(s0);
    if (d.is_zero()) throw DivisionByZero("denominator vanishes at the exact evaluation point");
    return num_.evaluate_rational(s0) / d;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string poly_str(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int e = p.hi(); e >= p.lo(); --e) {
        const GaussRat c = p.at(e);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += c.str();
        if (e != 0) out += "*s^" + std::to_string(e);
    }
    return out;
}

}  // namespace

std::string Scalar::str() const { return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")"; }

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string strip_spaces(const std::string& in) {
    std::string out;
    out.reserve(in.size());
    for (char ch : in)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(text);
            return mpq_class(n);
        }
        mpz_class n(text.substr(0, slash));
        mpz_class d(text.substr(slash + 1));
        if (d == 0) throw ParseError("rational with zero denominator: " + text);
        mpq_class q(n, d);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational number: " + text);
    }
}

/// Coefficient grammar (matches GaussRat::str()):
///   "3", "-2/5", "i", "-i", "3/2*i", "(1+2*i)", "(1/2-3*i)".
GaussRat parse_gauss(std::string text) {
    if (text.empty()) throw ParseError("empty coefficient");
    if (text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
    if (text.empty()) throw ParseError("empty coefficient");

    auto parse_imag_magnitude = [](std::string t) -> mpq_class {
        // t ends with "i"; strip it and an optional "*".
        t.pop_back();
        if (!t.empty() && t.back() == '*') t.pop_back();
        if (t.empty()) return mpq_class(1);
        if (t == "-") return mpq_class(-1);
        return parse_rational(t);
    };

    // Split at a top-level '+' or '-' (not at position 0, not after '*' or '/').
    for (std::size_t pos = 1; pos < text.size(); ++pos) {
        const char ch = text[pos];
        if (ch != '+' && ch != '-') continue;
        const char prev = text[pos - 1];
        if (prev == '*' || prev == '/' || prev == '+' || prev == '-') continue;
        std::string left = text.substr(0, pos);
        std::string right = text.substr(ch == '+' ? pos + 1 : pos);  // keep '-' attached
        if (right.empty() || right.back() != 'i')
            throw ParseError("expected imaginary part in coefficient: " + text);
        return GaussRat(parse_rational(left), parse_imag_magnitude(right));
    }
    if (text.back() == 'i') return GaussRat(mpq_class(0), parse_imag_magnitude(text));
    return GaussRat(parse_rational(text));
}

LaurentPoly parse_poly(const std::string& text) {
    if (text.empty()) throw ParseError("empty polynomial");
    // Split into signed terms at depth-0 '+'/'-' separators.
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        const char ch = text[pos];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        const bool separator = depth == 0 && (ch == '+' || ch == '-') && pos > 0 &&
                               text[pos - 1] != '^' && text[pos - 1] != '*' &&
                               text[pos - 1] != '+' && text[pos - 1] != '-' &&
                               text[pos - 1] != '(' && text[pos - 1] != '/';
        if (separator) {
            terms.push_back(cur);
            cur.clear();
            if (ch == '-') cur += '-';
        } else {
            cur += ch;
        }
    }
    terms.push_back(cur);

    LaurentPoly acc;
    for (const std::string& term : terms) {
        if (term.empty()) throw ParseError("empty term in polynomial: " + text);
        // Locate the variable part: a depth-0 's' (the coefficient alphabet has
        // no 's', so the first hit is the split point).
        std::size_t spos = std::string::npos;
        int d = 0;
        for (std::size_t pos = 0; pos < term.size(); ++pos) {
            if (term[pos] == '(') ++d;
            if (term[pos] == ')') --d;
            if (d == 0 && term[pos] == 's') {
                spos = pos;
                break;
            }
        }
        GaussRat coeff(1);
        int expo = 0;
        if (spos == std::string::npos) {
            coeff = parse_gauss(term);
        } else {
            std::string cpart = term.substr(0, spos);
            if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
            if (cpart == "-")
                coeff = GaussRat(-1);
            else if (!cpart.empty())
                coeff = parse_gauss(cpart);
            std::string epart = term.substr(spos + 1);
            if (epart.empty()) {
                expo = 1;
            } else {
                if (epart.front() != '^') throw ParseError("expected '^' after s: " + term);
                try {
                    std::size_t used = 0;
                    expo = std::stoi(epart.substr(1), &used);
                    if (used != epart.size() - 1) throw ParseError("bad exponent: " + term);
                } catch (const std::invalid_argument&) {
                    throw ParseError("bad exponent: " + term);
                } catch (const std::out_of_range&) {
                    throw ParseError("exponent out of range: " + term);
                }
            }
        }
        acc = acc + LaurentPoly(coeff, expo);
    }
    return acc;
}

}  // namespace

Scalar Scalar::parse(const std::string& raw) {
    const std::string text = strip_spaces(raw);
    if (text.empty()) throw ParseError("empty scalar literal");
    // Accept "(num)/(den)" and bare "num". The num/den split is the depth-0
    // '/' between a ')' and a '('.
    int depth = 0;
    std::size_t split = std::string::npos;
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        const char ch = text[pos];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == '/' && depth == 0 && pos > 0 && text[pos - 1] == ')' && pos + 1 < text.size() &&
            text[pos + 1] == '(') {
            split = pos;
            break;
        }
    }
    auto strip_parens = [](std::string t) {
        if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
            // Only strip if the parens wrap the whole string.
            int d = 0;
            for (std::size_t pos = 0; pos + 1 < t.size(); ++pos) {
                if (t[pos] == '(') ++d;
                if (t[pos] == ')') --d;
                if (d == 0) return t;  // closes early: not a full wrap
            }
            return t.substr(1, t.size() - 2);
        }
        return t;
    };
    if (split == std::string::npos) return Scalar(parse_poly(strip_parens(text)), LaurentPoly(GaussRat(1), 0));
    LaurentPoly num = parse_poly(strip_parens(text.substr(0, split)));
    LaurentPoly den = parse_poly(strip_parens(text.substr(split + 1)));
    return Scalar(std::move(num), std::move(den));
}

// ---------------------------------------------------------------------------
// q-number helpers

Scalar q_pow(HalfInt a) { return Scalar::s_pow(a.twice()); }

Scalar qint(HalfInt a) {
    // q^a = s^(2a), so the s-exponent of q^a is a.twice().
    LaurentPoly num = LaurentPoly(GaussRat(1), a.twice()) - LaurentPoly(GaussRat(1), -a.twice());
    LaurentPoly den = LaurentPoly(GaussRat(1), 2) - LaurentPoly(GaussRat(1), -2);
    return Scalar(std::move(num), std::move(den));
}

Scalar qplus(HalfInt a) {
    LaurentPoly num = LaurentPoly(GaussRat(1), a.twice()) + LaurentPoly(GaussRat(1), -a.twice());
    LaurentPoly den = LaurentPoly(GaussRat(1), 2) - LaurentPoly(GaussRat(1), -2);
    return Scalar(std::move(num), std::move(den));
}

Scalar q_diff() { return Scalar::s_pow(2) - Scalar::s_pow(-2); }

}  // namespace qso4
