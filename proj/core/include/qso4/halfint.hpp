/// @file halfint.hpp
/// @brief Exact half-integers (elements of (1/2)·Z), stored as twice their value.
///
/// Spins, weights and exponents in this library live in the half-integer
/// lattice. Storing 2x as a plain int keeps every operation exact and makes
/// parity questions ("is this integral?") trivial.
#pragma once

#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>

#include "qso4/errors.hpp"

namespace qso4 {

class HalfInt {
   public:
    constexpr HalfInt() : twice_(0) {}
    /// Implicit from int: the exact integer n.
    constexpr HalfInt(int n) : twice_(2 * n) {}  // NOLINT(google-explicit-constructor)

    /// Named constructor: the half-integer t/2.
    static constexpr HalfInt from_twice(int t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    /// Integer value; caller must ensure is_integer().
    constexpr int to_int() const { return twice_ / 2; }
    constexpr double to_double() const { return twice_ / 2.0; }

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
    constexpr HalfInt& operator+=(HalfInt o) {
        twice_ += o.twice_;
        return *this;
    }
    constexpr HalfInt& operator-=(HalfInt o) {
        twice_ -= o.twice_;
        return *this;
    }
    /// Product of two half-integers is a quarter-integer in general; only the
    /// product with an int stays in the lattice.
    constexpr friend HalfInt operator*(int n, HalfInt h) { return from_twice(n * h.twice_); }
    constexpr friend HalfInt operator*(HalfInt h, int n) { return from_twice(n * h.twice_); }

    constexpr auto operator<=>(const HalfInt&) const = default;

    constexpr HalfInt abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }

    /// "3/2", "-1/2", "2" — integers print without a denominator.
    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    /// Parse "n" or "n/2" (also accepts "n/1"). Throws ParseError.
    static HalfInt parse(const std::string& text);

    friend std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

   private:
    int twice_;
};

/// The half-integer 1/2, handy as a building block.
inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

inline HalfInt HalfInt::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty half-integer literal");
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t used = 0;
            int n = std::stoi(text, &used);
            if (used != text.size()) throw ParseError("trailing junk in half-integer: " + text);
            return HalfInt(n);
        }
        std::size_t used = 0;
        int num = std::stoi(text.substr(0, slash), &used);
        if (used != slash) throw ParseError("bad numerator in half-integer: " + text);
        const std::string den = text.substr(slash + 1);
        if (den == "2") return HalfInt::from_twice(num);
        if (den == "1") return HalfInt(num);
        throw ParseError("half-integer denominator must be 1 or 2: " + text);
    } catch (const std::invalid_argument&) {
        throw ParseError("not a half-integer: " + text);
    } catch (const std::out_of_range&) {
        throw ParseError("half-integer out of range: " + text);
    }
}

}  // namespace qso4
