#pragma once

/**
 * @file exact.hpp
 * @brief Exact arithmetic substrate: big integers, rationals in lowest
 *        terms, and elements x + y*sqrt(D) of a quadratic extension of Q.
 *
 * Every sequence value and identity check in this library is computed
 * through these types. There is no floating point anywhere in the library;
 * equality always means exact structural equality.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace genfib {

// Arbitrary-precision signed integer. GMP's mpz is sign-magnitude and
// round-trips through decimal strings, which is all the library relies on.
using BigInt = mpz_class;

// Thrown when an algebraically guaranteed cancellation fails at runtime,
// e.g. a Binet quotient that should be a rational integer comes out with a
// sqrt part. Seeing this means a formula or its implementation is wrong.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Strict decimal parse: optional leading '-', then digits only. Unlike the
// raw GMP parser this rejects embedded whitespace and empty strings.
BigInt parse_bigint(std::string_view text);

std::string to_decimal(const BigInt& value);

// base^exp, exact. 0^0 = 1.
BigInt int_pow(const BigInt& base, std::uint64_t exp);

// Exact binomial coefficient C(n, k); 0 when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/**
 * Rational number, eagerly normalized: gcd(|num|, den) = 1 and den > 0
 * after every construction and every arithmetic operation, so equality is
 * structural.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;  // throws on zero divisor

    Rational inverse() const;

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    // "num/den" form, e.g. "-2/3", "10/1".
    std::string str() const;

private:
    struct Raw {};
    Rational(mpq_class v, Raw) : v_(std::move(v)) {}
    mpq_class v_;
};

// Normalized lowest-terms rational with positive denominator.
// Throws std::domain_error("division by zero") when den = 0.
Rational rational_from_pair(const BigInt& num, const BigInt& den);

// base^exp for signed exponents; negative exponents invert (base must be
// nonzero then).
Rational rational_pow(const Rational& base, std::int64_t exp);

/**
 * Element x + y*sqrt(delta) with rational x, y. Two elements combine
 * arithmetically only when their delta fields agree; mixing discriminants
 * throws std::invalid_argument.
 *
 * delta need not be squarefree or nonsquare: the arithmetic below is the
 * plain ring structure on pairs, which is exactly what the closed-form
 * sequence evaluations need. Division multiplies by the conjugate and is
 * defined whenever the divisor's norm x^2 - y^2*delta is nonzero.
 */
class QuadElem {
public:
    QuadElem(Rational x, Rational y, BigInt delta)
        : x_(std::move(x)), y_(std::move(y)), delta_(std::move(delta)) {}

    static QuadElem integer(const BigInt& value, const BigInt& delta) {
        return QuadElem(Rational(value), Rational(), delta);
    }
    // sqrt(delta) itself, i.e. 0 + 1*sqrt(delta).
    static QuadElem sqrt_delta(const BigInt& delta) {
        return QuadElem(Rational(), Rational(BigInt(1)), delta);
    }

    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    const BigInt& delta() const { return delta_; }

    QuadElem conjugate() const { return QuadElem(x_, -y_, delta_); }

    // x^2 - y^2*delta; multiplicative: norm(z*w) = norm(z)*norm(w).
    Rational norm() const;

    QuadElem operator-() const { return QuadElem(-x_, -y_, delta_); }
    QuadElem operator+(const QuadElem& o) const;
    QuadElem operator-(const QuadElem& o) const;
    QuadElem operator*(const QuadElem& o) const;
    QuadElem operator/(const QuadElem& o) const;  // throws on zero-norm divisor

    bool operator==(const QuadElem& o) const {
        return delta_ == o.delta_ && x_ == o.x_ && y_ == o.y_;
    }
    bool operator!=(const QuadElem& o) const { return !(*this == o); }

    // "x + y*sqrt(delta)" with rational coordinates, for diagnostics.
    std::string str() const;

private:
    void require_same_delta(const QuadElem& o) const;

    Rational x_, y_;
    BigInt delta_;
};

// base^exp by binary exponentiation; base^0 = 1 + 0*sqrt(delta).
QuadElem quad_pow(QuadElem base, std::uint64_t exp);

// Certifies that z is a rational integer (zero sqrt part, unit denominator)
// and returns it; otherwise throws consistency_error. The Binet-style
// evaluations use this to turn "the sqrt part cancels" from an assumption
// into a runtime check.
BigInt as_integer(const QuadElem& z);

}  // namespace genfib
