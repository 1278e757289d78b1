#include "genfib/family.hpp"

#include <optional>
#include <stdexcept>

namespace genfib {

FamilyIndex decompose(std::uint64_t n, std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    return {n, k, n / k, n % k};
}

BigInt u_family(const SequenceParams& params, std::uint64_t n, std::uint64_t k) {
    const FamilyIndex ix = decompose(n, k);
    const auto [um, um1] = u_pair(params, ix.m);
    return int_pow(um, ix.k - ix.r) * int_pow(um1, ix.r);
}

BigInt v_family(const SequenceParams& params, std::uint64_t n, std::uint64_t k) {
    const FamilyIndex ix = decompose(n, k);
    const auto [vm, vm1] = v_pair(params, ix.m);
    return int_pow(vm, ix.k - ix.r) * int_pow(vm1, ix.r);
}

BigInt u_family_binet(const SequenceParams& params, std::uint64_t n, std::uint64_t k) {
    const FamilyIndex ix = decompose(n, k);
    if (params.delta() == 0) throw std::domain_error("degenerate discriminant");
    const QuadElem a = alpha_root(params);
    const QuadElem b = beta_root(params);
    const QuadElem hi = quad_pow(a, ix.m + 1) - quad_pow(b, ix.m + 1);
    const QuadElem lo = quad_pow(a, ix.m) - quad_pow(b, ix.m);
    const QuadElem num = quad_pow(hi, ix.r) * quad_pow(lo, ix.k - ix.r);
    const QuadElem den = quad_pow(QuadElem::sqrt_delta(params.delta()), ix.k);
    return as_integer(num / den);
}

BigInt v_family_binet(const SequenceParams& params, std::uint64_t n, std::uint64_t k) {
    const FamilyIndex ix = decompose(n, k);
    const QuadElem a = alpha_root(params);
    const QuadElem b = beta_root(params);
    const QuadElem hi = quad_pow(a, ix.m + 1) + quad_pow(b, ix.m + 1);
    const QuadElem lo = quad_pow(a, ix.m) + quad_pow(b, ix.m);
    return as_integer(quad_pow(hi, ix.r) * quad_pow(lo, ix.k - ix.r));
}

namespace {

// x_n = p*x_{n-1} - p*q*x_{n-3} + q^2*x_{n-4}
BigInt fourth_order_step(const SequenceParams& params, std::span<const BigInt> history,
                         std::uint64_t n) {
    if (n < 4) throw std::invalid_argument("recurrence applies for n >= 4");
    if (history.size() < 4) throw std::invalid_argument("insufficient history");
    const std::size_t last = history.size() - 1;  // index n-1
    return params.p() * history[last] - params.p() * params.q() * history[last - 2] +
           params.q() * params.q() * history[last - 3];
}

}  // namespace

BigInt u2_next(const SequenceParams& params, std::span<const BigInt> history, std::uint64_t n) {
    return fourth_order_step(params, history, n);
}

BigInt v2_next(const SequenceParams& params, std::span<const BigInt> history, std::uint64_t n) {
    return fourth_order_step(params, history, n);
}

BigInt u2_short_even(const SequenceParams& params, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("m must be >= 1");
    return params.p() * u_family(params, 2 * m - 1, 2) -
           params.q() * u_family(params, 2 * m - 2, 2) + int_pow(params.q(), m - 1);
}

BigInt u2_short_odd(const SequenceParams& params, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("m must be >= 1");
    return params.p() * u_family(params, 2 * m, 2) - params.q() * u_family(params, 2 * m - 1, 2);
}

FamilyValue family_value(const SequenceParams& params, SequenceKind kind, std::uint64_t n,
                         std::uint64_t k) {
    return {params, decompose(n, k),
            (kind == SequenceKind::U) ? u_family(params, n, k) : v_family(params, n, k)};
}

std::vector<FamilyValue> family_table_serial(const SequenceParams& params, SequenceKind kind,
                                             std::uint64_t k, std::uint64_t lo,
                                             std::uint64_t hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    std::vector<FamilyValue> out;
    out.reserve(hi - lo + 1);
    for (std::uint64_t n = lo; n <= hi; ++n) {
        out.push_back(family_value(params, kind, n, k));
    }
    return out;
}

std::vector<FamilyValue> family_table(const SequenceParams& params, SequenceKind kind,
                                      std::uint64_t k, std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::optional<FamilyValue>> slots(count);
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < static_cast<long>(count); ++i) {
        const std::uint64_t n = lo + static_cast<std::uint64_t>(i);
        slots[static_cast<std::size_t>(i)] = family_value(params, kind, n, k);
    }
    std::vector<FamilyValue> out;
    out.reserve(count);
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

}  // namespace genfib
