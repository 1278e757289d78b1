#pragma once

/**
 * @file family.hpp
 * @brief The generalized families U_n^(k) and V_n^(k).
 *
 * For n = m*k + r with 0 <= r < k, the families are defined by the products
 *
 *     U_n^(k) = U_m^(k-r) * U_{m+1}^r,   V_n^(k) = V_m^(k-r) * V_{m+1}^r,
 *
 * equivalently by the closed forms
 *
 *     U_n^(k) = (alpha^{m+1} - beta^{m+1})^r (alpha^m - beta^m)^{k-r} / (alpha - beta)^k,
 *     V_n^(k) = (alpha^{m+1} + beta^{m+1})^r (alpha^m + beta^m)^{k-r}.
 *
 * Both routes are implemented; at k = 1 they reduce to U_n and V_n. For
 * k = 2 the sequences additionally satisfy the fourth-order recurrence
 *
 *     x_n = p*x_{n-1} - p*q*x_{n-3} + q^2*x_{n-4},   n >= 4,
 *
 * and the U family the shorter split rules
 *
 *     U_{2m}^(2)   = p*U_{2m-1}^(2) - q*U_{2m-2}^(2) + q^{m-1},
 *     U_{2m+1}^(2) = p*U_{2m}^(2)   - q*U_{2m-1}^(2).
 */

#include <cstdint>
#include <span>
#include <vector>

#include "genfib/horadam.hpp"

namespace genfib {

// Unique decomposition n = m*k + r with 0 <= r < k.
struct FamilyIndex {
    std::uint64_t n;
    std::uint64_t k;
    std::uint64_t m;
    std::uint64_t r;

    bool operator==(const FamilyIndex& o) const {
        return n == o.n && k == o.k && m == o.m && r == o.r;
    }
};

// Throws std::invalid_argument("k must be positive") when k = 0.
FamilyIndex decompose(std::uint64_t n, std::uint64_t k);

// Product-form evaluation.
BigInt u_family(const SequenceParams& params, std::uint64_t n, std::uint64_t k);
BigInt v_family(const SequenceParams& params, std::uint64_t n, std::uint64_t k);

// Closed-form evaluation through quadratic-field arithmetic, certified to be
// a rational integer. The U variant divides by (alpha - beta)^k and throws
// std::domain_error("degenerate discriminant") when Delta = 0; the V variant
// has no such restriction.
BigInt u_family_binet(const SequenceParams& params, std::uint64_t n, std::uint64_t k);
BigInt v_family_binet(const SequenceParams& params, std::uint64_t n, std::uint64_t k);

// One step of the fourth-order k = 2 recurrence. history holds the values at
// indices n-4 .. n-1 in ascending order (at least four entries; the last four
// are used). Throws std::invalid_argument on short history or n < 4.
BigInt u2_next(const SequenceParams& params, std::span<const BigInt> history, std::uint64_t n);
BigInt v2_next(const SequenceParams& params, std::span<const BigInt> history, std::uint64_t n);

// Split rules for the U^(2) sequence, m >= 1: value at index 2m (even rule,
// with the additive q^{m-1} term) and at index 2m+1 (odd rule). Lower-index
// values are taken from the product form.
BigInt u2_short_even(const SequenceParams& params, std::uint64_t m);
BigInt u2_short_odd(const SequenceParams& params, std::uint64_t m);

enum class SequenceKind { U, V };

// One evaluated family member: the parameters, the index decomposition and
// the value U_m^(k-r) * U_{m+1}^r (resp. V...).
struct FamilyValue {
    SequenceParams params;
    FamilyIndex index;
    BigInt value;

    bool operator==(const FamilyValue& o) const {
        return params == o.params && index == o.index && value == o.value;
    }
    bool operator!=(const FamilyValue& o) const { return !(*this == o); }
};

FamilyValue family_value(const SequenceParams& params, SequenceKind kind, std::uint64_t n,
                         std::uint64_t k);

// Family rows for n in [lo, hi], in index order. family_table runs the grid
// with OpenMP when available; family_table_serial is the plain-loop
// reference.
std::vector<FamilyValue> family_table(const SequenceParams& params, SequenceKind kind,
                                      std::uint64_t k, std::uint64_t lo, std::uint64_t hi);
std::vector<FamilyValue> family_table_serial(const SequenceParams& params, SequenceKind kind,
                                             std::uint64_t k, std::uint64_t lo, std::uint64_t hi);

}  // namespace genfib
