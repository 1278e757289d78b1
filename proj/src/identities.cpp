#include "genfib/identities.hpp"

#include <exception>
#include <stdexcept>

namespace genfib {

std::string_view to_string(IdentityId id) {
    switch (id) {
        case IdentityId::T1i: return "T1i";
        case IdentityId::T1ii: return "T1ii";
        case IdentityId::T1iii: return "T1iii";
        case IdentityId::T3: return "T3";
        case IdentityId::T4U: return "T4U";
        case IdentityId::T4V: return "T4V";
        case IdentityId::ShortEven: return "ShortEven";
        case IdentityId::ShortOdd: return "ShortOdd";
        case IdentityId::Simson: return "Simson";
        case IdentityId::MatrixEntries: return "MatrixEntries";
    }
    return "?";
}

std::optional<IdentityId> parse_identity(std::string_view text) {
    for (IdentityId id : kAllIdentities) {
        if (to_string(id) == text) return id;
    }
    return std::nullopt;
}

bool needs_order_index(IdentityId id) {
    return id == IdentityId::T1i || id == IdentityId::T1ii || id == IdentityId::T1iii;
}

std::string_view first_index_name(IdentityId id) {
    switch (id) {
        case IdentityId::T1i:
        case IdentityId::T1ii:
        case IdentityId::T1iii:
        case IdentityId::ShortEven:
        case IdentityId::ShortOdd:
            return "m";
        case IdentityId::T3:
            return "s";
        default:
            return "n";
    }
}

BigInt SequenceSource::u(const SequenceParams& params, std::uint64_t n) const {
    return u_n(params, n);
}

BigInt SequenceSource::v(const SequenceParams& params, std::uint64_t n) const {
    return v_n(params, n);
}

BigInt SequenceSource::u_family(const SequenceParams& params, std::uint64_t n,
                                std::uint64_t k) const {
    return genfib::u_family(params, n, k);
}

BigInt SequenceSource::v_family(const SequenceParams& params, std::uint64_t n,
                                std::uint64_t k) const {
    return genfib::v_family(params, n, k);
}

const SequenceSource& default_source() {
    static const SequenceSource src;
    return src;
}

bool IdentityReport::operator==(const IdentityReport& o) const {
    return id == o.id && params == o.params && index == o.index && k == o.k && lhs == o.lhs &&
           rhs == o.rhs && cleared == o.cleared && status == o.status && reason == o.reason;
}

namespace {

IdentityReport made(IdentityId id, const SequenceParams& params, std::uint64_t index,
                    std::optional<std::uint64_t> k, Rational lhs, Rational rhs,
                    std::optional<std::pair<BigInt, BigInt>> cleared = std::nullopt) {
    IdentityReport r{id, params, index, k, std::move(lhs), std::move(rhs), std::move(cleared),
                     CheckStatus::fail, ""};
    const bool equal = *r.lhs == *r.rhs;
    const bool cleared_ok = !r.cleared || r.cleared->first == r.cleared->second;
    r.status = (equal && cleared_ok) ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

IdentityReport skipped(IdentityId id, const SequenceParams& params, std::uint64_t index,
                       std::optional<std::uint64_t> k, std::string reason) {
    return IdentityReport{id,           params, index, k, std::nullopt, std::nullopt,
                          std::nullopt, CheckStatus::skip, std::move(reason)};
}

void require_defined(IdentityId id, const SequenceParams& params, std::uint64_t index,
                     std::optional<std::uint64_t> k, const SequenceSource& src) {
    if (auto why = precondition_violation(id, params, index, k, src)) {
        if (*why == "U_{m-1} = 0") throw std::domain_error("identity undefined at this m");
        throw std::domain_error("identity undefined (" + *why + ")");
    }
}

IdentityReport eval_t1_i(const SequenceParams& params, std::uint64_t m, std::uint64_t k,
                         const SequenceSource& src) {
    Rational lhs;
    const Rational neg_p(-params.p());
    for (std::uint64_t t = 0; t < k; ++t) {
        const Rational weight = rational_pow(neg_p, -static_cast<std::int64_t>(t));
        lhs = lhs + Rational(binomial(k - 1, t)) * weight *
                        Rational(src.u_family(params, m * k + t, k));
    }
    const Rational prefactor = rational_pow(Rational(params.q()) / Rational(params.p()),
                                            static_cast<std::int64_t>(k) - 1);
    const BigInt tail =
        k >= 2 ? src.u_family(params, (m - 1) * (k - 1), k - 1) : BigInt(1);
    const Rational rhs = prefactor * Rational(src.u(params, m)) * Rational(tail);
    return made(IdentityId::T1i, params, m, k, lhs, rhs);
}

IdentityReport eval_t1_ii(const SequenceParams& params, std::uint64_t m, std::uint64_t k,
                          const SequenceSource& src) {
    Rational lhs;
    const Rational weight_base = Rational(-params.p()) / Rational(params.q());
    for (std::uint64_t t = 0; t < k; ++t) {
        const Rational weight = rational_pow(weight_base, static_cast<std::int64_t>(t));
        lhs = lhs + Rational(binomial(k - 1, t)) * weight *
                        Rational(src.u_family(params, m * k + t, k));
    }
    const Rational prefactor =
        rational_pow(Rational(-params.q()), 1 - static_cast<std::int64_t>(k));
    const BigInt tail =
        k >= 2 ? src.u_family(params, (m + 2) * (k - 1), k - 1) : BigInt(1);
    const Rational rhs = prefactor * Rational(src.u(params, m)) * Rational(tail);
    return made(IdentityId::T1ii, params, m, k, lhs, rhs);
}

IdentityReport eval_t1_iii(const SequenceParams& params, std::uint64_t m, std::uint64_t k,
                           const SequenceSource& src) {
    const Rational p(params.p());
    const Rational q(params.q());

    Rational lhs;
    BigInt cleared_sum(0);
    for (std::uint64_t t = 0; t < k; ++t) {
        const BigInt term = src.u_family(params, m * k + t, k);
        lhs = lhs + rational_pow(p, -static_cast<std::int64_t>(t)) * Rational(term);
        cleared_sum += int_pow(params.p(), k - 1 - t) * term;
    }

    const BigInt u_m = src.u(params, m);
    const BigInt u_m_prev = src.u(params, m - 1);
    const BigInt block_hi = src.u_family(params, (m + 1) * k, k);
    const BigInt block_lo = src.u_family(params, m * k, k);
    const BigInt block_diff = block_hi - int_pow(params.p(), k) * block_lo;

    const Rational rhs = (-p / q) * rational_pow(p, -static_cast<std::int64_t>(k)) *
                         (Rational(u_m) / Rational(u_m_prev)) * Rational(block_diff);

    // (-q) U_{m-1} sum_t p^{k-1-t} U^(k)_{mk+t} = U_m (U^(k)_{(m+1)k} - p^k U^(k)_{mk})
    const BigInt cleared_lhs = -params.q() * u_m_prev * cleared_sum;
    const BigInt cleared_rhs = u_m * block_diff;

    return made(IdentityId::T1iii, params, m, k, lhs, rhs,
                std::make_pair(cleared_lhs, cleared_rhs));
}

IdentityReport eval_t3(const SequenceParams& params, std::uint64_t s,
                       const SequenceSource& src) {
    const Rational lhs(src.u_family(params, 2 * (s - 1), 2));
    const Rational rhs(int_pow(params.q(), s - 2) + src.u(params, s) * src.u(params, s - 2));
    return made(IdentityId::T3, params, s, std::nullopt, lhs, rhs);
}

IdentityReport eval_t4_u(const SequenceParams& params, std::uint64_t n,
                         const SequenceSource& src) {
    const std::array<BigInt, 4> history = {
        src.u_family(params, n - 4, 2), src.u_family(params, n - 3, 2),
        src.u_family(params, n - 2, 2), src.u_family(params, n - 1, 2)};
    const Rational lhs(u2_next(params, history, n));
    const Rational rhs(src.u_family(params, n, 2));
    return made(IdentityId::T4U, params, n, std::nullopt, lhs, rhs);
}

IdentityReport eval_t4_v(const SequenceParams& params, std::uint64_t n,
                         const SequenceSource& src) {
    const std::array<BigInt, 4> history = {
        src.v_family(params, n - 4, 2), src.v_family(params, n - 3, 2),
        src.v_family(params, n - 2, 2), src.v_family(params, n - 1, 2)};
    const Rational lhs(v2_next(params, history, n));
    const Rational rhs(src.v_family(params, n, 2));
    return made(IdentityId::T4V, params, n, std::nullopt, lhs, rhs);
}

IdentityReport eval_short_even(const SequenceParams& params, std::uint64_t m,
                               const SequenceSource& src) {
    const Rational lhs(params.p() * src.u_family(params, 2 * m - 1, 2) -
                       params.q() * src.u_family(params, 2 * m - 2, 2) +
                       int_pow(params.q(), m - 1));
    const Rational rhs(src.u_family(params, 2 * m, 2));
    return made(IdentityId::ShortEven, params, m, std::nullopt, lhs, rhs);
}

IdentityReport eval_short_odd(const SequenceParams& params, std::uint64_t m,
                              const SequenceSource& src) {
    const Rational lhs(params.p() * src.u_family(params, 2 * m, 2) -
                       params.q() * src.u_family(params, 2 * m - 1, 2));
    const Rational rhs(src.u_family(params, 2 * m + 1, 2));
    return made(IdentityId::ShortOdd, params, m, std::nullopt, lhs, rhs);
}

IdentityReport eval_simson(const SequenceParams& params, std::uint64_t n,
                           const SequenceSource& src) {
    const BigInt mid = src.u(params, n - 1);
    const Rational lhs(mid * mid - src.u(params, n) * src.u(params, n - 2));
    const Rational rhs(int_pow(params.q(), n - 2));
    return made(IdentityId::Simson, params, n, std::nullopt, lhs, rhs);
}

IdentityReport eval_matrix_entries(const SequenceParams& params, std::uint64_t n,
                                   const SequenceSource& src) {
    const Mat2 power = w_matrix_pow(params, n);
    const BigInt un = src.u(params, n);
    const Mat2 expected = {src.u(params, n + 1), -params.q() * un, un,
                           -params.q() * src.u(params, n - 1)};
    const std::array<std::pair<const BigInt*, const BigInt*>, 4> entries = {{
        {&power.m00, &expected.m00},
        {&power.m01, &expected.m01},
        {&power.m10, &expected.m10},
        {&power.m11, &expected.m11},
    }};
    for (const auto& [got, want] : entries) {
        if (*got != *want) {
            return made(IdentityId::MatrixEntries, params, n, std::nullopt, Rational(*got),
                        Rational(*want));
        }
    }
    // All entries match; report the determinant comparison det(W^n) = q^n.
    return made(IdentityId::MatrixEntries, params, n, std::nullopt, Rational(power.det()),
                Rational(int_pow(params.q(), n)));
}

}  // namespace

std::optional<std::string> precondition_violation(IdentityId id, const SequenceParams& params,
                                                  std::uint64_t index,
                                                  std::optional<std::uint64_t> k,
                                                  const SequenceSource& src) {
    switch (id) {
        case IdentityId::T1i:
            if (k.value_or(0) < 1) return "k < 1";
            if (index < 1) return "m < 1";
            if (params.p() == 0) return "division by p";
            return std::nullopt;
        case IdentityId::T1ii:
            if (k.value_or(0) < 1) return "k < 1";
            if (index < 1) return "m < 1";
            if (params.q() == 0) return "division by q";
            return std::nullopt;
        case IdentityId::T1iii:
            if (k.value_or(0) < 1) return "k < 1";
            if (index < 1) return "m < 1";
            if (params.p() == 0) return "division by p";
            if (params.q() == 0) return "division by q";
            if (src.u(params, index - 1) == 0) return "U_{m-1} = 0";
            return std::nullopt;
        case IdentityId::T3:
            if (index < 2) return "s < 2";
            return std::nullopt;
        case IdentityId::T4U:
        case IdentityId::T4V:
            if (index < 4) return "n < 4";
            return std::nullopt;
        case IdentityId::ShortEven:
        case IdentityId::ShortOdd:
            if (index < 1) return "m < 1";
            return std::nullopt;
        case IdentityId::Simson:
            if (index < 2) return "n < 2";
            return std::nullopt;
        case IdentityId::MatrixEntries:
            if (index < 1) return "n < 1";
            return std::nullopt;
    }
    return std::nullopt;
}

IdentityReport check_t1_i(const SequenceParams& params, std::uint64_t m, std::uint64_t k,
                          const SequenceSource& src) {
    require_defined(IdentityId::T1i, params, m, k, src);
    return eval_t1_i(params, m, k, src);
}

IdentityReport check_t1_ii(const SequenceParams& params, std::uint64_t m, std::uint64_t k,
                           const SequenceSource& src) {
    require_defined(IdentityId::T1ii, params, m, k, src);
    return eval_t1_ii(params, m, k, src);
}

IdentityReport check_t1_iii(const SequenceParams& params, std::uint64_t m, std::uint64_t k,
                            const SequenceSource& src) {
    require_defined(IdentityId::T1iii, params, m, k, src);
    return eval_t1_iii(params, m, k, src);
}

IdentityReport check_t3(const SequenceParams& params, std::uint64_t s,
                        const SequenceSource& src) {
    require_defined(IdentityId::T3, params, s, std::nullopt, src);
    return eval_t3(params, s, src);
}

IdentityReport check_t4_u(const SequenceParams& params, std::uint64_t n,
                          const SequenceSource& src) {
    require_defined(IdentityId::T4U, params, n, std::nullopt, src);
    return eval_t4_u(params, n, src);
}

IdentityReport check_t4_v(const SequenceParams& params, std::uint64_t n,
                          const SequenceSource& src) {
    require_defined(IdentityId::T4V, params, n, std::nullopt, src);
    return eval_t4_v(params, n, src);
}

IdentityReport check_short_even(const SequenceParams& params, std::uint64_t m,
                                const SequenceSource& src) {
    require_defined(IdentityId::ShortEven, params, m, std::nullopt, src);
    return eval_short_even(params, m, src);
}

IdentityReport check_short_odd(const SequenceParams& params, std::uint64_t m,
                               const SequenceSource& src) {
    require_defined(IdentityId::ShortOdd, params, m, std::nullopt, src);
    return eval_short_odd(params, m, src);
}

IdentityReport check_simson(const SequenceParams& params, std::uint64_t n,
                            const SequenceSource& src) {
    require_defined(IdentityId::Simson, params, n, std::nullopt, src);
    return eval_simson(params, n, src);
}

IdentityReport check_matrix_entries(const SequenceParams& params, std::uint64_t n,
                                    const SequenceSource& src) {
    require_defined(IdentityId::MatrixEntries, params, n, std::nullopt, src);
    return eval_matrix_entries(params, n, src);
}

IdentityReport check_point(IdentityId id, const SequenceParams& params, std::uint64_t index,
                           std::optional<std::uint64_t> k, const SequenceSource& src) {
    if (auto why = precondition_violation(id, params, index, k, src)) {
        return skipped(id, params, index, k, std::move(*why));
    }
    switch (id) {
        case IdentityId::T1i: return eval_t1_i(params, index, *k, src);
        case IdentityId::T1ii: return eval_t1_ii(params, index, *k, src);
        case IdentityId::T1iii: return eval_t1_iii(params, index, *k, src);
        case IdentityId::T3: return eval_t3(params, index, src);
        case IdentityId::T4U: return eval_t4_u(params, index, src);
        case IdentityId::T4V: return eval_t4_v(params, index, src);
        case IdentityId::ShortEven: return eval_short_even(params, index, src);
        case IdentityId::ShortOdd: return eval_short_odd(params, index, src);
        case IdentityId::Simson: return eval_simson(params, index, src);
        case IdentityId::MatrixEntries: return eval_matrix_entries(params, index, src);
    }
    throw std::logic_error("unreachable identity id");
}

namespace {

struct GridPoint {
    std::size_t params_index;
    std::uint64_t index;
    std::optional<std::uint64_t> k;
};

std::vector<GridPoint> enumerate_grid(const SweepRequest& request) {
    if (request.params_list.empty()) throw std::invalid_argument("empty params list");
    if (request.first.hi < request.first.lo) throw std::invalid_argument("empty index range");
    if (needs_order_index(request.id) != request.order.has_value()) {
        throw std::invalid_argument(needs_order_index(request.id)
                                        ? "identity requires a k range"
                                        : "identity takes a single index range");
    }
    if (request.order && request.order->hi < request.order->lo) {
        throw std::invalid_argument("empty k range");
    }

    std::vector<GridPoint> points;
    const std::uint64_t order_count = request.order ? request.order->size() : 1;
    points.reserve(request.params_list.size() * request.first.size() * order_count);
    for (std::size_t pi = 0; pi < request.params_list.size(); ++pi) {
        for (std::uint64_t i = request.first.lo; i <= request.first.hi; ++i) {
            if (request.order) {
                for (std::uint64_t k = request.order->lo; k <= request.order->hi; ++k) {
                    points.push_back({pi, i, k});
                }
            } else {
                points.push_back({pi, i, std::nullopt});
            }
        }
    }
    return points;
}

}  // namespace

std::vector<IdentityReport> sweep_serial(const SweepRequest& request,
                                         const SequenceSource& src) {
    const auto points = enumerate_grid(request);
    std::vector<IdentityReport> reports;
    reports.reserve(points.size());
    for (const GridPoint& pt : points) {
        reports.push_back(
            check_point(request.id, request.params_list[pt.params_index], pt.index, pt.k, src));
    }
    return reports;
}

std::vector<IdentityReport> sweep(const SweepRequest& request, const SequenceSource& src) {
    const auto points = enumerate_grid(request);
    std::vector<std::optional<IdentityReport>> slots(points.size());
    std::exception_ptr error;

#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < static_cast<long>(points.size()); ++i) {
        try {
            const GridPoint& pt = points[static_cast<std::size_t>(i)];
            slots[static_cast<std::size_t>(i)] = check_point(
                request.id, request.params_list[pt.params_index], pt.index, pt.k, src);
        } catch (...) {
#pragma omp critical
            {
                if (!error) error = std::current_exception();
            }
        }
    }
    if (error) std::rethrow_exception(error);

    std::vector<IdentityReport> reports;
    reports.reserve(slots.size());
    for (auto& slot : slots) reports.push_back(std::move(*slot));
    return reports;
}

}  // namespace genfib
