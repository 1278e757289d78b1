#pragma once

/**
 * @file cli.hpp
 * @brief Command implementations behind the `genfib` executable: family-spec
 *        parsing, sequence tables, identity sweeps and generating-function
 *        comparisons, emitted as CSV or JSON lines.
 *
 * Every numeric field in the output is an exact decimal string; output for
 * identical invocations is byte-identical. Exit-status contract: 0 = all
 * points passed or were skipped, 1 = at least one failure, 2 = usage or
 * parse error.
 */

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genfib/genfunc.hpp"
#include "genfib/identities.hpp"

namespace genfib {

// Parsed form of a --family argument.
//
// Grammar:  NAME | p=<int>,q=<int>   with optional ,k=<uint> and optional
// ,a=<int>,b=<int>; whitespace-insensitive. Presets: fibonacci (1,-1),
// pell (2,-1), jacobsthal (1,-2), balancing (6,1).
struct FamilySpec {
    SequenceParams params;
    std::uint64_t k = 1;
    std::optional<HoradamInit> init;  // raw Horadam mode (--which W)
};

// Parse failure, with the byte offset of the offending token in the
// original spec string.
struct FamilyParseError : std::runtime_error {
    FamilyParseError(const std::string& what, std::size_t position);
    std::size_t position;
};

FamilySpec parse_family(std::string_view spec);

const std::vector<std::pair<std::string, SequenceParams>>& family_presets();

// A "--range" argument: `lo..hi` (inclusive), optionally prefixed with the
// index name it binds, e.g. `m=1..25` or `k=1..6`.
struct RangeArg {
    std::optional<std::string> name;
    IndexRange range;
};

RangeArg parse_range(std::string_view text);

enum class OutputFormat { csv, json };
enum class TableKind { U, V, W };

OutputFormat parse_format(std::string_view text);  // "csv" | "json"
TableKind parse_table_kind(std::string_view text); // "U" | "V" | "W"

// Flat, ordered key -> value row; values are exact decimal strings or
// status tokens, never floating point.
using OutputRecord = std::vector<std::pair<std::string, std::string>>;

void write_records(std::ostream& out, OutputFormat format,
                   const std::vector<OutputRecord>& records);

// Bad command usage detected after argument parsing (maps to exit 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// `table`: one record per n with fields n, m, r, value. Returns 0.
int cmd_table(const FamilySpec& family, IndexRange range, TableKind which, OutputFormat format,
              std::ostream& out);

// `verify`: sweeps one identity over families x ranges; one record per grid
// point. Returns 0 when no point failed, 1 otherwise.
int cmd_verify(IdentityId id, const std::vector<FamilySpec>& families,
               const std::vector<RangeArg>& ranges, OutputFormat format, std::ostream& out,
               const SequenceSource& src = default_source());

// `gfcheck`: compares the first `count` generating-function coefficients
// against the product-form family values, for both the U and V streams.
// Returns 0 when every coefficient matches, 1 otherwise.
int cmd_gfcheck(const FamilySpec& family, std::uint64_t count, OutputFormat format,
                std::ostream& out);

}  // namespace genfib
