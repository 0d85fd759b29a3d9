// Exact arbitrary-precision integer and rational arithmetic.
//
// Everything downstream (root systems, structure constants, PBW
// coefficients) is computed over these types; there is no floating
// point anywhere in the library.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace thaforge {

// Sign-magnitude big integer, little-endian base 2^32 limbs.
// Invariant: no trailing zero limbs; zero has empty limbs and sign 0.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v)
    {
        if (v == 0)
            return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long m =
            v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                  : static_cast<unsigned long long>(v);
        while (m) {
            mag_.push_back(static_cast<uint32_t>(m & 0xffffffffULL));
            m >>= 32;
        }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(const std::string &s)
    {
        BigInt r;
        size_t i = 0;
        int sign = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-')
                sign = -1;
            ++i;
        }
        if (i == s.size())
            throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit in numeral");
            r.mul_small_add(10, static_cast<uint32_t>(s[i] - '0'));
        }
        if (!r.mag_.empty())
            r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    int sign() const { return sign_; }

    friend bool operator==(const BigInt &a, const BigInt &b)
    {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt &a, const BigInt &b) { return !(a == b); }
    friend bool operator<(const BigInt &a, const BigInt &b)
    {
        if (a.sign_ != b.sign_)
            return a.sign_ < b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt &a, const BigInt &b) { return b < a; }
    friend bool operator<=(const BigInt &a, const BigInt &b) { return !(b < a); }
    friend bool operator>=(const BigInt &a, const BigInt &b) { return !(a < b); }

    BigInt operator-() const
    {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt &a, const BigInt &b)
    {
        if (a.sign_ == 0)
            return b;
        if (b.sign_ == 0)
            return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0)
                return r;
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt &a, const BigInt &b) { return a + (-b); }

    friend BigInt operator*(const BigInt &a, const BigInt &b)
    {
        if (a.sign_ == 0 || b.sign_ == 0)
            return BigInt();
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t t = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] +
                             r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(t);
                carry = t >> 32;
            }
            r.mag_[i + b.mag_.size()] += static_cast<uint32_t>(carry);
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated division; remainder has the sign of the dividend.
    static void divmod(const BigInt &a, const BigInt &b, BigInt &q, BigInt &r)
    {
        if (b.sign_ == 0)
            throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        if (b.mag_.size() == 1) {
            uint32_t rem = 0;
            q.mag_ = divmod_small(a.mag_, b.mag_[0], rem);
            q.trim();
            q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
            r = BigInt();
            if (rem) {
                r.mag_.push_back(rem);
                r.sign_ = a.sign_;
            }
            return;
        }
        divmod_knuth(a.mag_, b.mag_, q.mag_, r.mag_);
        q.trim();
        r.trim();
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt &a, const BigInt &b)
    {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt &a, const BigInt &b)
    {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt abs() const
    {
        BigInt r = *this;
        if (r.sign_ < 0)
            r.sign_ = 1;
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b)
    {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            BigInt t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    // Fits in long long (callers must check fits_longlong()).
    long long to_longlong() const
    {
        unsigned long long v = 0;
        for (size_t i = mag_.size(); i-- > 0;)
            v = (v << 32) | mag_[i];
        return sign_ < 0 ? -static_cast<long long>(v) : static_cast<long long>(v);
    }
    bool fits_longlong() const
    {
        if (mag_.size() > 2)
            return false;
        unsigned long long v = 0;
        for (size_t i = mag_.size(); i-- > 0;)
            v = (v << 32) | mag_[i];
        return sign_ < 0 ? v <= 0x8000000000000000ULL : v <= 0x7fffffffffffffffULL;
    }

    std::string to_string() const
    {
        if (sign_ == 0)
            return "0";
        std::vector<uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            uint32_t rem = 0;
            m = divmod_small(m, 1000000000u, rem);
            while (!m.empty() && m.back() == 0)
                m.pop_back();
            if (m.empty()) {
                digits = std::to_string(rem) + digits;
            } else {
                std::string chunk = std::to_string(rem);
                digits = std::string(9 - chunk.size(), '0') + chunk + digits;
            }
        }
        return (sign_ < 0 ? "-" : "") + digits;
    }

  private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    void trim()
    {
        while (!mag_.empty() && mag_.back() == 0)
            mag_.pop_back();
        if (mag_.empty())
            sign_ = 0;
    }

    void mul_small_add(uint32_t mul, uint32_t add)
    {
        uint64_t carry = add;
        for (auto &limb : mag_) {
            uint64_t t = static_cast<uint64_t>(limb) * mul + carry;
            limb = static_cast<uint32_t>(t);
            carry = t >> 32;
        }
        while (carry) {
            mag_.push_back(static_cast<uint32_t>(carry));
            carry >>= 32;
        }
        if (!mag_.empty())
            sign_ = 1;
    }

    static int cmp_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b)
    {
        if (a.size() != b.size())
            return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t> &a,
                                         const std::vector<uint32_t> &b)
    {
        const auto &big = a.size() >= b.size() ? a : b;
        const auto &small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint64_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t t = static_cast<uint64_t>(r[i]) + carry +
                         (i < small.size() ? small[i] : 0u);
            r[i] = static_cast<uint32_t>(t);
            carry = t >> 32;
            if (carry == 0 && i >= small.size())
                break;
        }
        if (carry)
            r.push_back(static_cast<uint32_t>(carry));
        return r;
    }

    // Requires |a| >= |b|.
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t> &a,
                                         const std::vector<uint32_t> &b)
    {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t t = static_cast<int64_t>(r[i]) - borrow -
                        (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
            if (t < 0) {
                t += (1LL << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(t);
            if (borrow == 0 && i >= b.size())
                break;
        }
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    }

    static std::vector<uint32_t> divmod_small(const std::vector<uint32_t> &a,
                                              uint32_t d, uint32_t &rem)
    {
        std::vector<uint32_t> q(a.size(), 0);
        uint64_t r = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (r << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            r = cur % d;
        }
        rem = static_cast<uint32_t>(r);
        while (!q.empty() && q.back() == 0)
            q.pop_back();
        return q;
    }

    // Knuth algorithm D. Requires |a| >= |b| and b.size() >= 2.
    static void divmod_knuth(const std::vector<uint32_t> &a_in,
                             const std::vector<uint32_t> &b_in,
                             std::vector<uint32_t> &q, std::vector<uint32_t> &r)
    {
        int shift = 0;
        uint32_t top = b_in.back();
        while (!(top & 0x80000000u)) {
            top <<= 1;
            ++shift;
        }
        std::vector<uint32_t> u = shl_bits(a_in, shift);
        std::vector<uint32_t> v = shl_bits(b_in, shift);
        size_t n = v.size(), m = u.size() - n;
        u.push_back(0);
        q.assign(m + 1, 0);
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = num / v[n - 1];
            uint64_t rhat = num % v[n - 1];
            while (qhat > 0xffffffffULL ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat > 0xffffffffULL)
                    break;
            }
            // multiply-subtract, with add-back if we overshot by one
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(u[i + j]) -
                            static_cast<int64_t>(p & 0xffffffffULL) - borrow;
                borrow = 0;
                if (t < 0) {
                    t += (1LL << 32);
                    borrow = 1;
                }
                u[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = static_cast<int64_t>(u[j + n]) -
                        static_cast<int64_t>(carry) - borrow;
            if (t < 0) {
                t += (1LL << 32);
                u[j + n] = static_cast<uint32_t>(t);
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<uint32_t>(s);
                    c2 = s >> 32;
                }
                u[j + n] = static_cast<uint32_t>(u[j + n] + c2);
            } else {
                u[j + n] = static_cast<uint32_t>(t);
            }
            q[j] = static_cast<uint32_t>(qhat);
        }
        u.resize(n);
        r = shr_bits(u, shift);
    }

    static std::vector<uint32_t> shl_bits(const std::vector<uint32_t> &a, int s)
    {
        if (s == 0)
            return a;
        std::vector<uint32_t> r(a.size() + 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] |= a[i] << s;
            r[i + 1] = a[i] >> (32 - s);
        }
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    }
    static std::vector<uint32_t> shr_bits(const std::vector<uint32_t> &a, int s)
    {
        if (s == 0)
            return a;
        std::vector<uint32_t> r(a.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] = a[i] >> s;
            if (i + 1 < a.size())
                r[i] |= a[i + 1] << (32 - s);
        }
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    }
};

// Rational number in canonical form: reduced fraction, positive denominator.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d))
    {
        reduce();
    }
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    // Accepts "p", "-p", "p/q".
    static Rational from_string(const std::string &s)
    {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rational(BigInt::from_string(s));
        return Rational(BigInt::from_string(s.substr(0, slash)),
                        BigInt::from_string(s.substr(slash + 1)));
    }

    const BigInt &num() const { return num_; }
    const BigInt &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    bool is_negative() const { return num_.is_negative(); }

    friend Rational operator+(const Rational &a, const Rational &b)
    {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational &a, const Rational &b)
    {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational &a, const Rational &b)
    {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational &a, const Rational &b)
    {
        if (b.is_zero())
            throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const
    {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rational &operator+=(const Rational &b) { return *this = *this + b; }
    Rational &operator-=(const Rational &b) { return *this = *this - b; }
    Rational &operator*=(const Rational &b) { return *this = *this * b; }
    Rational &operator/=(const Rational &b) { return *this = *this / b; }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational &a, const Rational &b) { return !(a == b); }
    friend bool operator<(const Rational &a, const Rational &b)
    {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational &a, const Rational &b) { return b < a; }
    friend bool operator<=(const Rational &a, const Rational &b) { return !(b < a); }
    friend bool operator>=(const Rational &a, const Rational &b) { return !(a < b); }

    Rational inverse() const { return Rational(1) / *this; }

    std::string to_string() const
    {
        if (den_.is_one())
            return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

  private:
    BigInt num_, den_;

    void reduce()
    {
        if (den_.is_zero())
            throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

inline Rational operator*(long long a, const Rational &b) { return Rational(a) * b; }

} // namespace thaforge
