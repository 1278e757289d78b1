#pragma once

/**
 * @file identities.hpp
 * @brief Verification engine: evaluates both sides of each registered
 *        identity exactly and reports pass/fail/skip per grid point.
 *
 * Registered identities (first index, optional order k):
 *
 *   T1i   sum_{t=0}^{k-1} C(k-1,t) (-p)^{-t} U^(k)_{mk+t}
 *             = (q/p)^{k-1} U_m U^(k-1)_{(m-1)(k-1)}
 *   T1ii  sum_{t=0}^{k-1} C(k-1,t) (-p/q)^t U^(k)_{mk+t}
 *             = (-q)^{1-k} U_m U^(k-1)_{(m+2)(k-1)}
 *   T1iii sum_{t=0}^{k-1} p^{-t} U^(k)_{mk+t}
 *             = (-p/q) p^{-k} (U_m / U_{m-1}) (U^(k)_{(m+1)k} - p^k U^(k)_{mk})
 *         (also checked in cleared-denominator integer form)
 *   T3    U^(2)_{2(s-1)} = q^{s-2} + U_s U_{s-2},          s >= 2
 *   T4U   U^(2)_n = p U^(2)_{n-1} - pq U^(2)_{n-3} + q^2 U^(2)_{n-4},  n >= 4
 *   T4V   same recurrence for V^(2)
 *   ShortEven  U^(2)_{2m} = p U^(2)_{2m-1} - q U^(2)_{2m-2} + q^{m-1},  m >= 1
 *   ShortOdd   U^(2)_{2m+1} = p U^(2)_{2m} - q U^(2)_{2m-1},            m >= 1
 *   Simson     U_{n-1}^2 - U_n U_{n-2} = q^{n-2},                       n >= 2
 *   MatrixEntries  W^n = [[U_{n+1}, -q U_n], [U_n, -q U_{n-1}]] and
 *                  det(W^n) = q^n,                                      n >= 1
 *
 * For k = 1 the T1 sums collapse to a single term and the U^(0) factor on
 * the right is taken as 1 (empty product); both sides then equal U_m.
 *
 * Comparison is exact rational equality; there is no tolerance anywhere.
 * Grid points that violate an identity's precondition are reported as
 * skipped, never as failures.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genfib/family.hpp"

namespace genfib {

enum class IdentityId {
    T1i,
    T1ii,
    T1iii,
    T3,
    T4U,
    T4V,
    ShortEven,
    ShortOdd,
    Simson,
    MatrixEntries,
};

inline constexpr std::array<IdentityId, 10> kAllIdentities = {
    IdentityId::T1i,      IdentityId::T1ii,     IdentityId::T1iii,  IdentityId::T3,
    IdentityId::T4U,      IdentityId::T4V,      IdentityId::ShortEven,
    IdentityId::ShortOdd, IdentityId::Simson,   IdentityId::MatrixEntries,
};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view text);

// True for the T1 identities, which sweep over (m, k); the rest take a
// single index.
bool needs_order_index(IdentityId id);

// Name of the first index in reports and CLI ranges: "m", "n" or "s".
std::string_view first_index_name(IdentityId id);

/**
 * Source of sequence values consumed by the identity checks. The default
 * implementation delegates to the library; tests substitute doubles that
 * corrupt selected values to prove failures are detected and reported.
 */
class SequenceSource {
public:
    virtual ~SequenceSource() = default;

    virtual BigInt u(const SequenceParams& params, std::uint64_t n) const;
    virtual BigInt v(const SequenceParams& params, std::uint64_t n) const;
    virtual BigInt u_family(const SequenceParams& params, std::uint64_t n,
                            std::uint64_t k) const;
    virtual BigInt v_family(const SequenceParams& params, std::uint64_t n,
                            std::uint64_t k) const;
};

const SequenceSource& default_source();

enum class CheckStatus { pass, fail, skip };

struct IdentityReport {
    IdentityId id;
    SequenceParams params;
    std::uint64_t index = 0;               // m, n or s depending on the identity
    std::optional<std::uint64_t> k;        // T1 identities only
    std::optional<Rational> lhs, rhs;      // absent when skipped
    // T1iii only: both sides restated with all rational prefactors
    // multiplied out, so both are integers.
    std::optional<std::pair<BigInt, BigInt>> cleared;
    CheckStatus status = CheckStatus::skip;
    std::string reason;                    // violated precondition when skipped

    bool pass() const { return status == CheckStatus::pass; }

    bool operator==(const IdentityReport& o) const;
};

// Point checks. Each throws std::domain_error when the identity is
// undefined at the given point (e.g. "identity undefined (division by p)");
// sweeps convert those situations into skip reports instead.
IdentityReport check_t1_i(const SequenceParams& params, std::uint64_t m, std::uint64_t k,
                          const SequenceSource& src = default_source());
IdentityReport check_t1_ii(const SequenceParams& params, std::uint64_t m, std::uint64_t k,
                           const SequenceSource& src = default_source());
IdentityReport check_t1_iii(const SequenceParams& params, std::uint64_t m, std::uint64_t k,
                            const SequenceSource& src = default_source());
IdentityReport check_t3(const SequenceParams& params, std::uint64_t s,
                        const SequenceSource& src = default_source());
IdentityReport check_t4_u(const SequenceParams& params, std::uint64_t n,
                          const SequenceSource& src = default_source());
IdentityReport check_t4_v(const SequenceParams& params, std::uint64_t n,
                          const SequenceSource& src = default_source());
IdentityReport check_short_even(const SequenceParams& params, std::uint64_t m,
                                const SequenceSource& src = default_source());
IdentityReport check_short_odd(const SequenceParams& params, std::uint64_t m,
                               const SequenceSource& src = default_source());
IdentityReport check_simson(const SequenceParams& params, std::uint64_t n,
                            const SequenceSource& src = default_source());
IdentityReport check_matrix_entries(const SequenceParams& params, std::uint64_t n,
                                    const SequenceSource& src = default_source());

// The precondition the given point violates, if any.
std::optional<std::string> precondition_violation(IdentityId id, const SequenceParams& params,
                                                  std::uint64_t index,
                                                  std::optional<std::uint64_t> k,
                                                  const SequenceSource& src = default_source());

// Evaluates one grid point, mapping precondition violations to skip reports.
IdentityReport check_point(IdentityId id, const SequenceParams& params, std::uint64_t index,
                           std::optional<std::uint64_t> k,
                           const SequenceSource& src = default_source());

// Inclusive index range.
struct IndexRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    std::uint64_t size() const { return hi - lo + 1; }
};

struct SweepRequest {
    IdentityId id;
    std::vector<SequenceParams> params_list;
    IndexRange first;                   // m, n or s range
    std::optional<IndexRange> order;    // k range, required exactly for the T1 identities
};

// Exhaustive grid evaluation in deterministic order: params-major, then the
// first index, then k. sweep evaluates points in parallel with OpenMP when
// available (reports are still emitted in deterministic order);
// sweep_serial is the plain-loop reference the tests compare against.
std::vector<IdentityReport> sweep(const SweepRequest& request,
                                  const SequenceSource& src = default_source());
std::vector<IdentityReport> sweep_serial(const SweepRequest& request,
                                         const SequenceSource& src = default_source());

}  // namespace genfib
