#ifndef OPERADIC_BIGINT_HPP
#define OPERADIC_BIGINT_HPP

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace operadic {

// Signed arbitrary-precision integer. Magnitudes that fit in 64 bits are kept
// in a plain word; larger magnitudes spill into base-2^32 limbs (little
// endian, top limb nonzero). Values the library actually produces are almost
// always word-sized, so the word path is the hot path.
class BigInt {
public:
    BigInt() = default;

    BigInt(std::int64_t v) {
        if (v < 0) {
            sign_ = -1;
            small_ = static_cast<std::uint64_t>(-(v + 1)) + 1u;
        } else if (v > 0) {
            sign_ = 1;
            small_ = static_cast<std::uint64_t>(v);
        }
    }

    static BigInt from_string(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty string");
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '-' || s[0] == '+') {
            neg = (s[0] == '-');
            i = 1;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
        BigInt r;
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c < '0' || c > '9')
                throw std::invalid_argument("BigInt: bad digit in \"" + std::string(s) + "\"");
            r = r * BigInt(10) + BigInt(c - '0');
        }
        if (neg) r.negate();
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    void negate() { sign_ = -sign_; }
    BigInt operator-() const {
        BigInt r = *this;
        r.negate();
        return r;
    }
    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    bool fits_int64() const {
        if (!big_.empty()) return false;
        if (sign_ >= 0) return small_ <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
        return small_ <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) + 1u;
    }
    std::int64_t to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
        if (sign_ >= 0) return static_cast<std::int64_t>(small_);
        return -static_cast<std::int64_t>(small_ - 1u) - 1;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            add_mag(a, b, r);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a, b);
            if (c == 0) return BigInt();
            if (c > 0) {
                sub_mag(a, b, r);
                r.sign_ = a.sign_;
            } else {
                sub_mag(b, a, r);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        mul_mag(a, b, r);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated division (C++ semantics): quotient toward zero,
    // remainder with the sign of the dividend.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (a.sign_ == 0) {
            q = BigInt();
            r = BigInt();
            return;
        }
        divmod_mag(a, b, q, r);
        q.sign_ = q.mag_is_zero() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_is_zero() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && cmp_mag(a, b) == 0;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a, b);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string digits;
        if (big_.empty()) {
            digits = std::to_string(small_);
        } else {
            std::vector<std::uint32_t> w = big_;
            while (!w.empty()) {
                std::uint64_t rem = 0;
                for (std::size_t i = w.size(); i-- > 0;) {
                    std::uint64_t cur = (rem << 32) | w[i];
                    w[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                    rem = cur % 1000000000u;
                }
                while (!w.empty() && w.back() == 0) w.pop_back();
                std::string chunk = std::to_string(rem);
                if (!w.empty())
                    chunk = std::string(9 - chunk.size(), '0') + chunk;
                digits = chunk + digits;
            }
        }
        return sign_ < 0 ? "-" + digits : digits;
    }

    // Floor square root of a nonnegative value (integer Newton iteration).
    friend BigInt isqrt(const BigInt& v) {
        if (v.sign_ < 0) throw std::domain_error("isqrt: negative argument");
        if (v.is_zero()) return BigInt();
        if (v <= BigInt(2)) return BigInt(1);
        BigInt x = v, two(2);
        BigInt y = (x + v / x) / two;
        while (y < x) {
            x = y;
            y = (x + v / x) / two;
        }
        return x;
    }

    friend BigInt gcd(BigInt a, BigInt b) {
        if (a.sign_ < 0) a.sign_ = 1;
        if (b.sign_ < 0) b.sign_ = 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        if (a.sign_ != 0) a.sign_ = 1;
        return a;
    }

private:
    int sign_ = 0;
    std::uint64_t small_ = 0;
    std::vector<std::uint32_t> big_;

    bool mag_is_zero() const { return big_.empty() && small_ == 0; }

    std::size_t limb_count() const {
        if (!big_.empty()) return big_.size();
        if (small_ > 0xffffffffull) return 2;
        return small_ ? 1 : 0;
    }
    std::uint32_t limb(std::size_t i) const {
        if (!big_.empty()) return i < big_.size() ? big_[i] : 0;
        if (i == 0) return static_cast<std::uint32_t>(small_);
        if (i == 1) return static_cast<std::uint32_t>(small_ >> 32);
        return 0;
    }

    // Collapse the limb vector back into the word form when it fits.
    void normalize_mag() {
        while (!big_.empty() && big_.back() == 0) big_.pop_back();
        if (big_.size() <= 2) {
            small_ = 0;
            if (big_.size() >= 1) small_ = big_[0];
            if (big_.size() == 2) small_ |= static_cast<std::uint64_t>(big_[1]) << 32;
            big_.clear();
        }
    }
    void set_mag_limbs(std::vector<std::uint32_t> limbs) {
        big_ = std::move(limbs);
        normalize_mag();
    }

    static int cmp_mag(const BigInt& a, const BigInt& b) {
        if (a.big_.empty() && b.big_.empty())
            return a.small_ < b.small_ ? -1 : (a.small_ > b.small_ ? 1 : 0);
        std::size_t na = a.limb_count(), nb = b.limb_count();
        if (na != nb) return na < nb ? -1 : 1;
        for (std::size_t i = na; i-- > 0;) {
            std::uint32_t x = a.limb(i), y = b.limb(i);
            if (x != y) return x < y ? -1 : 1;
        }
        return 0;
    }

    static void add_mag(const BigInt& a, const BigInt& b, BigInt& r) {
        if (a.big_.empty() && b.big_.empty()) {
            std::uint64_t s = a.small_ + b.small_;
            if (s >= a.small_) {  // no wrap
                r.small_ = s;
                r.big_.clear();
                return;
            }
        }
        std::size_t n = std::max(a.limb_count(), b.limb_count()) + 1;
        std::vector<std::uint32_t> out(n, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t s = carry + a.limb(i) + b.limb(i);
            out[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        r.set_mag_limbs(std::move(out));
    }

    // Requires |a| >= |b|.
    static void sub_mag(const BigInt& a, const BigInt& b, BigInt& r) {
        if (a.big_.empty() && b.big_.empty()) {
            r.small_ = a.small_ - b.small_;
            r.big_.clear();
            return;
        }
        std::size_t n = a.limb_count();
        std::vector<std::uint32_t> out(n, 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t d = static_cast<std::int64_t>(a.limb(i)) - b.limb(i) - borrow;
            if (d < 0) {
                d += (1ll << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            out[i] = static_cast<std::uint32_t>(d);
        }
        r.set_mag_limbs(std::move(out));
    }

    static void mul_mag(const BigInt& a, const BigInt& b, BigInt& r) {
        if (a.big_.empty() && b.big_.empty()) {
            unsigned __int128 p = static_cast<unsigned __int128>(a.small_) * b.small_;
            std::uint64_t hi = static_cast<std::uint64_t>(p >> 64);
            std::uint64_t lo = static_cast<std::uint64_t>(p);
            if (hi == 0) {
                r.small_ = lo;
                r.big_.clear();
                return;
            }
            std::vector<std::uint32_t> out = {
                static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(lo >> 32),
                static_cast<std::uint32_t>(hi), static_cast<std::uint32_t>(hi >> 32)};
            r.set_mag_limbs(std::move(out));
            return;
        }
        std::size_t na = a.limb_count(), nb = b.limb_count();
        std::vector<std::uint32_t> out(na + nb, 0);
        for (std::size_t i = 0; i < na; ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a.limb(i);
            for (std::size_t j = 0; j < nb; ++j) {
                std::uint64_t cur = out[i + j] + ai * b.limb(j) + carry;
                out[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + nb;
            while (carry) {
                std::uint64_t cur = out[k] + carry;
                out[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.set_mag_limbs(std::move(out));
    }

    // Magnitude division. The big path is bit-by-bit long division; values
    // beyond 64 bits are rare here and stay a few hundred bits at most.
    static void divmod_mag(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (a.big_.empty() && b.big_.empty()) {
            q.big_.clear();
            r.big_.clear();
            q.small_ = a.small_ / b.small_;
            r.small_ = a.small_ % b.small_;
            return;
        }
        if (cmp_mag(a, b) < 0) {
            q = BigInt();
            r = a;
            r.sign_ = 0;  // caller sets signs
            return;
        }
        std::size_t na = a.limb_count();
        std::size_t bits = na * 32;
        std::vector<std::uint32_t> quo(na, 0);
        BigInt rem;  // running remainder, nonnegative magnitude
        for (std::size_t bit = bits; bit-- > 0;) {
            shl1(rem);
            if ((a.limb(bit / 32) >> (bit % 32)) & 1u) set_bit0(rem);
            if (cmp_mag(rem, b) >= 0) {
                BigInt t;
                sub_mag(rem, b, t);
                rem = std::move(t);
                quo[bit / 32] |= (1u << (bit % 32));
            }
        }
        q.set_mag_limbs(std::move(quo));
        r = std::move(rem);
        q.sign_ = 0;
        r.sign_ = 0;
    }

    static void shl1(BigInt& v) {
        if (v.big_.empty()) {
            if ((v.small_ >> 63) == 0) {
                v.small_ <<= 1;
                return;
            }
            v.big_ = {static_cast<std::uint32_t>(v.small_),
                      static_cast<std::uint32_t>(v.small_ >> 32), 0};
            v.small_ = 0;
        }
        std::uint32_t carry = 0;
        for (auto& l : v.big_) {
            std::uint32_t nc = l >> 31;
            l = (l << 1) | carry;
            carry = nc;
        }
        if (carry) v.big_.push_back(carry);
    }
    static void set_bit0(BigInt& v) {
        if (v.big_.empty())
            v.small_ |= 1u;
        else
            v.big_[0] |= 1u;
    }
};

}  // namespace operadic

#endif
