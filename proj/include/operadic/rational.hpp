#ifndef OPERADIC_RATIONAL_HPP
#define OPERADIC_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "operadic/bigint.hpp"

namespace operadic {

// Exact rational number, always in lowest terms with positive denominator.
// Serialized form is "p" or "p/q" with q > 0; no floating point anywhere.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t v) : num_(v), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { reduce(); }
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static Rational from_string(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos)
            return Rational(BigInt::from_string(s), BigInt(1));
        return Rational(BigInt::from_string(s.substr(0, slash)),
                        BigInt::from_string(s.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    std::string to_string() const {
        if (den_ == BigInt(1)) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_.negate();
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(den_, num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Exact square root when the value is a square of a rational.
    friend std::optional<Rational> sqrt_exact(const Rational& r) {
        if (r.sign() < 0) return std::nullopt;
        BigInt sn = isqrt(r.num_), sd = isqrt(r.den_);
        if (sn * sn != r.num_ || sd * sd != r.den_) return std::nullopt;
        return Rational(sn, sd);
    }

private:
    BigInt num_, den_;

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.sign() < 0) {
            num_.negate();
            den_.negate();
        }
        BigInt g = gcd(num_, den_);
        if (g != BigInt(1)) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

}  // namespace operadic

#endif
