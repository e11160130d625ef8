#pragma once

/**
 * @file numeric.hpp
 * @brief Exact scalars and 2x2 matrices.
 *
 * Everything downstream is computed over Rational, a canonical fraction of
 * arbitrary-precision integers. There is no floating point anywhere in the
 * library: identities are checked by exact equality.
 */

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "idforge/errors.hpp"

namespace idforge {

using BigInt = boost::multiprecision::cpp_int;

/// Parses an optionally signed run of decimal digits.
inline BigInt parse_bigint(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        throw ParseError("malformed integer '" + std::string(text) + "'");
    }
    for (char ch : digits) {
        if (ch < '0' || ch > '9') {
            throw ParseError("malformed integer '" + std::string(text) + "'");
        }
    }
    BigInt value{std::string(digits)};
    return (text.front() == '-') ? BigInt(-value) : value;
}

/**
 * Signed fraction num/den kept in canonical form: den > 0 and
 * gcd(|num|, den) = 1, with zero stored as 0/1.
 */
class Rational {
public:
    Rational() : num_(0), den_(1) {}

    template <typename Int>
        requires std::is_integral_v<Int>
    Rational(Int value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)

    Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) {
            throw DomainError("rational with zero denominator");
        }
        normalize();
    }

    /// Accepts "p" or "p/q" (non-canonical input is reduced, q = 0 rejected).
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            return Rational(parse_bigint(text));
        }
        BigInt num = parse_bigint(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!den_text.empty() && den_text.front() == '+') {
            throw ParseError("malformed rational '" + std::string(text) + "'");
        }
        BigInt den = parse_bigint(den_text);
        if (den == 0) {
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        }
        return Rational(std::move(num), std::move(den));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    /// "p/q", or just "p" when q = 1.
    std::string to_string() const {
        if (den_ == 1) {
            return num_.str();
        }
        return num_.str() + "/" + den_.str();
    }

    Rational reciprocal() const {
        if (num_ == 0) {
            throw DomainError("reciprocal of zero");
        }
        return Rational(den_, num_);
    }

    Rational operator-() const {
        Rational out = *this;
        out.num_ = -out.num_;
        return out;
    }

    Rational& operator+=(const Rational& o) {
        if (den_ == o.den_) {
            num_ += o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ *= o.den_;
        }
        normalize();
        return *this;
    }

    Rational& operator-=(const Rational& o) {
        if (den_ == o.den_) {
            num_ -= o.num_;
        } else {
            num_ = num_ * o.den_ - o.num_ * den_;
            den_ *= o.den_;
        }
        normalize();
        return *this;
    }

    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }

    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) {
            throw DomainError("division by zero");
        }
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
        return os << q.to_string();
    }

private:
    void normalize() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

/// Exact integer power; e < 0 requires q != 0.
inline Rational rat_pow(const Rational& q, std::int64_t e) {
    if (e < 0 && q.is_zero()) {
        throw DomainError("zero raised to a negative power");
    }
    Rational result(1);
    Rational base = (e < 0) ? q.reciprocal() : q;
    auto bits = (e < 0) ? static_cast<std::uint64_t>(-(e + 1)) + 1U : static_cast<std::uint64_t>(e);
    while (bits != 0) {
        if (bits & 1U) {
            result *= base;
        }
        bits >>= 1U;
        if (bits != 0) {
            base *= base;
        }
    }
    return result;
}

/// Row-major [[a, b], [c, d]].
struct Mat2 {
    Rational a, b, c, d;

    static Mat2 identity() { return {1, 0, 0, 1}; }

    /// [[c1, c2], [1, 0]]; maps (X_{n+1}, X_n) to (X_{n+2}, X_{n+1}).
    static Mat2 companion(const Rational& c1, const Rational& c2) { return {c1, c2, 1, 0}; }

    friend Mat2 operator*(const Mat2& m, const Mat2& o) {
        return {m.a * o.a + m.b * o.c, m.a * o.b + m.b * o.d,
                m.c * o.a + m.d * o.c, m.c * o.b + m.d * o.d};
    }

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline Rational mat2_det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

inline Mat2 mat2_inverse(const Mat2& m) {
    Rational det = mat2_det(m);
    if (det.is_zero()) {
        throw DomainError("singular matrix has no inverse");
    }
    return {m.d / det, -m.b / det, -m.c / det, m.a / det};
}

/// Binary exponentiation on |e|; negative exponents invert once up front.
inline Mat2 mat2_pow(const Mat2& m, std::int64_t e) {
    Mat2 base = (e < 0) ? mat2_inverse(m) : m;
    auto bits = (e < 0) ? static_cast<std::uint64_t>(-(e + 1)) + 1U : static_cast<std::uint64_t>(e);
    Mat2 result = Mat2::identity();
    while (bits != 0) {
        if (bits & 1U) {
            result = result * base;
        }
        bits >>= 1U;
        if (bits != 0) {
            base = base * base;
        }
    }
    return result;
}

}  // namespace idforge
