#ifndef ZONECX_EXACT_SCALAR_HPP
#define ZONECX_EXACT_SCALAR_HPP

#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "zonecx/errors.hpp"

namespace zonecx {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
using Rational = mpq_class;

inline int sign_of(const Rational& q) { return sgn(q); }

/// num / den in lowest terms (mpq_class(num, den) alone does not reduce).
inline Rational ratio(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p/q" or "p" (decimal integers, q > 0).
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    auto valid_int = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = t[0] == '-' ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw FormatError("malformed rational '" + s + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw FormatError("zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

/// Canonical "p/q" text, q > 0, lowest terms. Integers keep the "/1".
inline std::string format_rational(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// An element a + b*sqrt(5) of Q(sqrt 5). Pure rationals have b = 0.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    ExactScalar(int v) : a_(v) {}   // NOLINT(google-explicit-constructor)
    explicit ExactScalar(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt5_part() const { return b_; }

    bool is_rational() const { return b_ == 0; }
    bool is_integer() const { return b_ == 0 && a_.get_den() == 1; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
        return ExactScalar(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
        return ExactScalar(x.a_ - y.a_, x.b_ - y.b_);
    }
    friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
        if (x.b_ == 0 && y.b_ == 0) return ExactScalar(Rational(x.a_ * y.a_));
        return ExactScalar(x.a_ * y.a_ + 5 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
    }
    ExactScalar operator-() const { return ExactScalar(Rational(-a_), Rational(-b_)); }
    ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
    ExactScalar& operator-=(const ExactScalar& y) { return *this = *this - y; }
    ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }

    /// Division by a nonzero rational; the only division the geometry needs
    /// (canonicalization of lines).
    ExactScalar divided_by(const Rational& q) const {
        if (q == 0) throw std::domain_error("ExactScalar: division by zero");
        return ExactScalar(Rational(a_ / q), Rational(b_ / q));
    }

    /// Multiplicative inverse: 1/(a + b sqrt5) = (a - b sqrt5) / (a^2 - 5 b^2).
    ExactScalar inverse() const {
        if (is_zero()) throw std::domain_error("ExactScalar: inverse of zero");
        Rational norm = a_ * a_ - 5 * b_ * b_;
        return ExactScalar(Rational(a_ / norm), Rational(-b_ / norm));
    }

    friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    /// Exact sign of a + b*sqrt(5).
    friend int sign(const ExactScalar& x) {
        int sa = sgn(x.a_), sb = sgn(x.b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: |a| vs |b| sqrt5 decided by a^2 - 5 b^2.
        Rational d = x.a_ * x.a_ - 5 * x.b_ * x.b_;
        return sa * sgn(d);
    }

    friend double to_double(const ExactScalar& x) {
        static const double root5 = 2.23606797749978969640917366873128;
        return x.a_.get_d() + x.b_.get_d() * root5;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
        os << x.a_;
        if (x.b_ != 0) os << (sgn(x.b_) < 0 ? " - " : " + ") << abs(x.b_) << "*sqrt5";
        return os;
    }

private:
    Rational a_{0};
    Rational b_{0};
};

/// The golden ratio (1 + sqrt5) / 2.
inline ExactScalar golden_ratio() { return ExactScalar(Rational(1, 2), Rational(1, 2)); }

/// Exact integer ring on int64 that throws ArithmeticOverflow instead of
/// wrapping. Used as the fast path for integer-coefficient arrangements.
class CheckedInt {
public:
    constexpr CheckedInt() = default;
    constexpr CheckedInt(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

    constexpr std::int64_t value() const { return v_; }

    friend CheckedInt operator+(CheckedInt x, CheckedInt y) {
        std::int64_t r;
        if (__builtin_add_overflow(x.v_, y.v_, &r)) throw ArithmeticOverflow("CheckedInt add");
        return r;
    }
    friend CheckedInt operator-(CheckedInt x, CheckedInt y) {
        std::int64_t r;
        if (__builtin_sub_overflow(x.v_, y.v_, &r)) throw ArithmeticOverflow("CheckedInt sub");
        return r;
    }
    friend CheckedInt operator*(CheckedInt x, CheckedInt y) {
        std::int64_t r;
        if (__builtin_mul_overflow(x.v_, y.v_, &r)) throw ArithmeticOverflow("CheckedInt mul");
        return r;
    }
    CheckedInt operator-() const {
        if (v_ == std::numeric_limits<std::int64_t>::min()) throw ArithmeticOverflow("CheckedInt neg");
        return -v_;
    }
    CheckedInt& operator+=(CheckedInt y) { return *this = *this + y; }
    CheckedInt& operator-=(CheckedInt y) { return *this = *this - y; }
    CheckedInt& operator*=(CheckedInt y) { return *this = *this * y; }

    friend constexpr bool operator==(CheckedInt x, CheckedInt y) { return x.v_ == y.v_; }
    friend constexpr int sign(CheckedInt x) { return (x.v_ > 0) - (x.v_ < 0); }
    friend double to_double(CheckedInt x) { return static_cast<double>(x.v_); }
    friend std::ostream& operator<<(std::ostream& os, CheckedInt x) { return os << x.v_; }

private:
    std::int64_t v_ = 0;
};

/// The operations every coordinate ring must support.
template <class S>
concept ExactRing = requires(const S& x, const S& y) {
    { x + y } -> std::convertible_to<S>;
    { x - y } -> std::convertible_to<S>;
    { x * y } -> std::convertible_to<S>;
    { -x } -> std::convertible_to<S>;
    { x == y } -> std::convertible_to<bool>;
    { sign(x) } -> std::convertible_to<int>;
    { to_double(x) } -> std::convertible_to<double>;
    S(0);
};

static_assert(ExactRing<ExactScalar>);
static_assert(ExactRing<CheckedInt>);

}  // namespace zonecx

#endif  // ZONECX_EXACT_SCALAR_HPP
