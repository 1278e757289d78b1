#pragma once

/**
 * @file horadam.hpp
 * @brief Horadam sequences W_n(a,b;p,q) with W_n = p*W_{n-1} - q*W_{n-2},
 *        the special sequences U (seeds 0,1) and V (seeds 2,p), and two
 *        independent evaluation routes besides plain iteration: exact
 *        closed-form evaluation through Q(sqrt(Delta)) and powers of the
 *        companion matrix [[p,-q],[1,0]].
 *
 * Indices are nonnegative throughout; negative indices are not defined.
 */

#include <cstdint>
#include <utility>

#include "genfib/exact.hpp"

namespace genfib {

// Recurrence parameters (p, q) with the discriminant Delta = p^2 - 4q
// computed once at construction.
class SequenceParams {
public:
    SequenceParams(BigInt p, BigInt q);

    const BigInt& p() const { return p_; }
    const BigInt& q() const { return q_; }
    const BigInt& delta() const { return delta_; }

    bool operator==(const SequenceParams& o) const { return p_ == o.p_ && q_ == o.q_; }
    bool operator!=(const SequenceParams& o) const { return !(*this == o); }

private:
    BigInt p_, q_, delta_;
};

// Seed pair W_0 = a, W_1 = b.
struct HoradamInit {
    BigInt a;
    BigInt b;
};

// 2x2 integer matrix.
struct Mat2 {
    BigInt m00, m01, m10, m11;

    static Mat2 identity() { return {BigInt(1), BigInt(0), BigInt(0), BigInt(1)}; }

    Mat2 operator*(const Mat2& o) const;
    BigInt det() const { return m00 * m11 - m01 * m10; }

    bool operator==(const Mat2& o) const {
        return m00 == o.m00 && m01 == o.m01 && m10 == o.m10 && m11 == o.m11;
    }
    bool operator!=(const Mat2& o) const { return !(*this == o); }
};

// W_n by linear iteration from the seeds.
BigInt horadam_w(const SequenceParams& params, const HoradamInit& init, std::uint64_t n);

// U_n = W_n(0,1;p,q) and V_n = W_n(2,p;p,q).
BigInt u_n(const SequenceParams& params, std::uint64_t n);
BigInt v_n(const SequenceParams& params, std::uint64_t n);

// (U_n, U_{n+1}) and (V_n, V_{n+1}) in a single iteration pass.
std::pair<BigInt, BigInt> u_pair(const SequenceParams& params, std::uint64_t n);
std::pair<BigInt, BigInt> v_pair(const SequenceParams& params, std::uint64_t n);

// The characteristic roots alpha = (p + sqrt(Delta))/2, beta = (p - sqrt(Delta))/2
// as exact quadratic-field elements. alpha + beta = p and alpha*beta = q.
QuadElem alpha_root(const SequenceParams& params);
QuadElem beta_root(const SequenceParams& params);

// Closed-form evaluation U_n = (alpha^n - beta^n)/(alpha - beta) and
// V_n = alpha^n + beta^n in exact quadratic-field arithmetic. The result is
// certified to be a rational integer (consistency_error otherwise).
// Throws std::domain_error("degenerate discriminant") when Delta = 0; the
// iterative and matrix routes remain available there.
BigInt u_n_binet(const SequenceParams& params, std::uint64_t n);
BigInt v_n_binet(const SequenceParams& params, std::uint64_t n);

// The companion matrix [[p,-q],[1,0]].
Mat2 w_matrix(const SequenceParams& params);

// Its n-th power by binary exponentiation, n >= 1. Entries equal
// [[U_{n+1}, -q*U_n], [U_n, -q*U_{n-1}]], and det = q^n.
Mat2 w_matrix_pow(const SequenceParams& params, std::uint64_t n);

}  // namespace genfib
