#include "genfib/exact.hpp"

#include <cctype>
#include <utility>

namespace genfib {

BigInt parse_bigint(std::string_view text) {
    std::size_t i = (!text.empty() && text.front() == '-') ? 1 : 0;
    if (i == text.size()) {
        throw std::invalid_argument("malformed integer: \"" + std::string(text) + "\"");
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw std::invalid_argument("malformed integer: \"" + std::string(text) + "\"");
        }
    }
    return BigInt(std::string(text), 10);
}

std::string to_decimal(const BigInt& value) {
    return value.get_str();
}

BigInt int_pow(const BigInt& base, std::uint64_t exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return BigInt(0);
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("division by zero");
    v_.canonicalize();
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_), Raw{}); }

Rational Rational::operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_), Raw{}); }

Rational Rational::operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_), Raw{}); }

Rational Rational::operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_), Raw{}); }

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return Rational(mpq_class(v_ / o.v_), Raw{});
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    mpq_class out;
    mpq_inv(out.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(out), Raw{});
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational rational_from_pair(const BigInt& num, const BigInt& den) {
    return Rational(num, den);
}

Rational rational_pow(const Rational& base, std::int64_t exp) {
    if (exp == 0) return Rational(BigInt(1));
    const bool invert = exp < 0;
    const std::uint64_t e = invert ? static_cast<std::uint64_t>(-(exp + 1)) + 1
                                   : static_cast<std::uint64_t>(exp);
    Rational out(int_pow(base.num(), e), int_pow(base.den(), e));
    return invert ? out.inverse() : out;
}

void QuadElem::require_same_delta(const QuadElem& o) const {
    if (delta_ != o.delta_) {
        throw std::invalid_argument("mismatched discriminants: " + to_decimal(delta_) +
                                    " vs " + to_decimal(o.delta_));
    }
}

Rational QuadElem::norm() const {
    return x_ * x_ - y_ * y_ * Rational(delta_);
}

QuadElem QuadElem::operator+(const QuadElem& o) const {
    require_same_delta(o);
    return QuadElem(x_ + o.x_, y_ + o.y_, delta_);
}

QuadElem QuadElem::operator-(const QuadElem& o) const {
    require_same_delta(o);
    return QuadElem(x_ - o.x_, y_ - o.y_, delta_);
}

QuadElem QuadElem::operator*(const QuadElem& o) const {
    require_same_delta(o);
    // (x1 + y1*s)(x2 + y2*s) = (x1*x2 + y1*y2*delta) + (x1*y2 + x2*y1)*s
    const Rational d(delta_);
    return QuadElem(x_ * o.x_ + y_ * o.y_ * d, x_ * o.y_ + o.x_ * y_, delta_);
}

QuadElem QuadElem::operator/(const QuadElem& o) const {
    require_same_delta(o);
    const Rational n = o.norm();
    if (n.is_zero()) throw std::domain_error("division by zero-norm element");
    const QuadElem num = *this * o.conjugate();
    return QuadElem(num.x_ / n, num.y_ / n, delta_);
}

std::string QuadElem::str() const {
    return x_.str() + " + " + y_.str() + "*sqrt(" + to_decimal(delta_) + ")";
}

QuadElem quad_pow(QuadElem base, std::uint64_t exp) {
    QuadElem acc = QuadElem::integer(BigInt(1), base.delta());
    while (exp != 0) {
        if (exp & 1) acc = acc * base;
        exp >>= 1;
        if (exp != 0) base = base * base;
    }
    return acc;
}

BigInt as_integer(const QuadElem& z) {
    if (!z.y().is_zero()) {
        throw consistency_error("nonzero sqrt part where an integer was expected: " + z.str());
    }
    if (!z.x().is_integer()) {
        throw consistency_error("non-unit denominator where an integer was expected: " + z.str());
    }
    return z.x().num();
}

}  // namespace genfib
