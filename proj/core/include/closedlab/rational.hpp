#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

namespace closedlab {

/// Exact rational with 64-bit components, always normalized (gcd 1, den > 0).
/// Comparisons cross-multiply in 128 bits, so values built from counts and
/// squared lengths never overflow.
class Rational {
  public:
    constexpr Rational() = default;
    constexpr Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }
    constexpr explicit Rational(long long value) : num_(value), den_(1) {}

    constexpr long long num() const { return num_; }
    constexpr long long den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend constexpr bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend constexpr bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend constexpr bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend constexpr bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend constexpr bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend constexpr Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend constexpr Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend constexpr Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend constexpr Rational operator/(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.num_ << '/' << r.den_;
    }

  private:
    constexpr void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace closedlab
