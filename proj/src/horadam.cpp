#include "genfib/horadam.hpp"

#include <utility>

namespace genfib {

SequenceParams::SequenceParams(BigInt p, BigInt q)
    : p_(std::move(p)), q_(std::move(q)), delta_(p_ * p_ - 4 * q_) {}

Mat2 Mat2::operator*(const Mat2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
}

BigInt horadam_w(const SequenceParams& params, const HoradamInit& init, std::uint64_t n) {
    if (n == 0) return init.a;
    BigInt prev = init.a;
    BigInt cur = init.b;
    for (std::uint64_t i = 1; i < n; ++i) {
        BigInt next = params.p() * cur - params.q() * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt u_n(const SequenceParams& params, std::uint64_t n) {
    return horadam_w(params, {BigInt(0), BigInt(1)}, n);
}

BigInt v_n(const SequenceParams& params, std::uint64_t n) {
    return horadam_w(params, {BigInt(2), params.p()}, n);
}

namespace {

std::pair<BigInt, BigInt> iterate_pair(const SequenceParams& params, BigInt w0, BigInt w1,
                                        std::uint64_t n) {
    for (std::uint64_t i = 0; i < n; ++i) {
        BigInt next = params.p() * w1 - params.q() * w0;
        w0 = std::move(w1);
        w1 = std::move(next);
    }
    return {std::move(w0), std::move(w1)};
}

}  // namespace

std::pair<BigInt, BigInt> u_pair(const SequenceParams& params, std::uint64_t n) {
    return iterate_pair(params, BigInt(0), BigInt(1), n);
}

std::pair<BigInt, BigInt> v_pair(const SequenceParams& params, std::uint64_t n) {
    return iterate_pair(params, BigInt(2), params.p(), n);
}

QuadElem alpha_root(const SequenceParams& params) {
    return QuadElem(Rational(params.p(), BigInt(2)), Rational(BigInt(1), BigInt(2)),
                    params.delta());
}

QuadElem beta_root(const SequenceParams& params) {
    return QuadElem(Rational(params.p(), BigInt(2)), Rational(BigInt(-1), BigInt(2)),
                    params.delta());
}

BigInt u_n_binet(const SequenceParams& params, std::uint64_t n) {
    if (params.delta() == 0) throw std::domain_error("degenerate discriminant");
    const QuadElem diff = quad_pow(alpha_root(params), n) - quad_pow(beta_root(params), n);
    return as_integer(diff / QuadElem::sqrt_delta(params.delta()));
}

BigInt v_n_binet(const SequenceParams& params, std::uint64_t n) {
    if (params.delta() == 0) throw std::domain_error("degenerate discriminant");
    return as_integer(quad_pow(alpha_root(params), n) + quad_pow(beta_root(params), n));
}

Mat2 w_matrix(const SequenceParams& params) {
    return {params.p(), -params.q(), BigInt(1), BigInt(0)};
}

Mat2 w_matrix_pow(const SequenceParams& params, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("matrix power requires n >= 1");
    Mat2 acc = Mat2::identity();
    Mat2 base = w_matrix(params);
    while (n != 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n != 0) base = base * base;
    }
    return acc;
}

}  // namespace genfib
