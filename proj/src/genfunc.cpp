#include "genfib/genfunc.hpp"

#include <stdexcept>
#include <utility>

namespace genfib {

Poly::Poly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalSeries::RationalSeries(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero() || den_.coeff(0) == 0) {
        throw std::domain_error("series has a pole at 0");
    }
}

std::vector<BigInt> expand(const RationalSeries& series, std::size_t count) {
    const Poly& num = series.num();
    const Poly& den = series.den();
    const BigInt& den0 = den.coeffs()[0];

    std::vector<BigInt> c;
    c.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        BigInt acc = num.coeff(n);
        for (std::size_t j = 1; j < den.size() && j <= n; ++j) {
            acc -= den.coeffs()[j] * c[n - j];
        }
        if (den0 != 1) {
            if (!mpz_divisible_p(acc.get_mpz_t(), den0.get_mpz_t())) {
                throw std::domain_error("non-exact division in series expansion");
            }
            acc /= den0;
        }
        c.push_back(std::move(acc));
    }
    return c;
}

namespace {

Poly series_denominator(const SequenceParams& params) {
    // 1 - p*x + p*q*x^3 - q^2*x^4
    return Poly({BigInt(1), -params.p(), BigInt(0), params.p() * params.q(),
                 -params.q() * params.q()});
}

}  // namespace

RationalSeries gf_u2(const SequenceParams& params) {
    return RationalSeries(Poly({BigInt(0), BigInt(0), BigInt(1)}), series_denominator(params));
}

RationalSeries gf_v2(const SequenceParams& params) {
    // 4 - 2p*x - p^2*x^2 + 2pq*x^3
    Poly num({BigInt(4), -2 * params.p(), -params.p() * params.p(),
              2 * params.p() * params.q()});
    return RationalSeries(std::move(num), series_denominator(params));
}

}  // namespace genfib
