#pragma once

/**
 * @file genfunc.hpp
 * @brief Rational power-series engine. Expands P(x)/Q(x) into an exact
 *        coefficient stream, plus the two k = 2 generating functions
 *
 *            g(x) = x^2 / (1 - p*x + p*q*x^3 - q^2*x^4)        (U^(2) family)
 *            h(x) = (4 - 2p*x - p^2*x^2 + 2pq*x^3) / same      (V^(2) family)
 *
 * Coefficients come from the linear-recurrence convolution identity
 *
 *     den[0]*c_n = num_n - sum_{j=1}^{deg(den)} den[j]*c_{n-j},
 *
 * which streams in O(deg * count) exact integer operations.
 */

#include <cstdint>
#include <vector>

#include "genfib/horadam.hpp"

namespace genfib {

// Dense integer polynomial; index = degree, trailing zeros trimmed, the zero
// polynomial is the empty list.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<BigInt> coeffs);

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of x^i, zero beyond the degree.
    BigInt coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
    }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    std::vector<BigInt> coeffs_;
};

// num/den as a formal power series around 0. Construction requires
// den(0) != 0, otherwise std::domain_error("series has a pole at 0").
class RationalSeries {
public:
    RationalSeries(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

private:
    Poly num_, den_;
};

// First `count` coefficients of the series, exact. Each step divides by
// den(0); a non-exact division step throws std::domain_error (cannot happen
// when den(0) = +-1, which holds for both generating functions below).
std::vector<BigInt> expand(const RationalSeries& series, std::size_t count);

// The generating functions of the U^(2) and V^(2) families at (p, q).
RationalSeries gf_u2(const SequenceParams& params);
RationalSeries gf_v2(const SequenceParams& params);

}  // namespace genfib
