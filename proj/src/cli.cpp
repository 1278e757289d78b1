#include "genfib/cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <ostream>

namespace genfib {

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
        ++offset;
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::string_view trim(std::string_view s) {
    std::size_t ignored = 0;
    return trim(s, ignored);
}

BigInt parse_spec_int(std::string_view text, std::size_t position) {
    try {
        return parse_bigint(text);
    } catch (const std::invalid_argument&) {
        throw FamilyParseError("expected integer at position " + std::to_string(position),
                               position);
    }
}

std::uint64_t parse_spec_uint(std::string_view text, std::size_t position) {
    const BigInt value = parse_spec_int(text, position);
    if (value < 0 || !value.fits_ulong_p()) {
        throw FamilyParseError("expected nonnegative integer at position " +
                                   std::to_string(position),
                               position);
    }
    return value.get_ui();
}

}  // namespace

FamilyParseError::FamilyParseError(const std::string& what, std::size_t pos)
    : std::runtime_error("family spec: " + what), position(pos) {}

const std::vector<std::pair<std::string, SequenceParams>>& family_presets() {
    static const std::vector<std::pair<std::string, SequenceParams>> presets = {
        {"fibonacci", SequenceParams(BigInt(1), BigInt(-1))},
        {"pell", SequenceParams(BigInt(2), BigInt(-1))},
        {"jacobsthal", SequenceParams(BigInt(1), BigInt(-2))},
        {"balancing", SequenceParams(BigInt(6), BigInt(1))},
    };
    return presets;
}

FamilySpec parse_family(std::string_view spec) {
    std::optional<SequenceParams> preset;
    std::optional<BigInt> p, q, a, b;
    std::optional<std::uint64_t> k;

    std::size_t token_start = 0;
    bool first_token = true;
    while (token_start <= spec.size()) {
        const std::size_t comma = std::min(spec.find(',', token_start), spec.size());
        std::size_t pos = token_start;
        const std::string_view token = trim(spec.substr(token_start, comma - token_start), pos);

        const std::size_t eq = token.find('=');
        if (eq == std::string_view::npos) {
            if (!first_token || token.empty()) {
                throw FamilyParseError("expected key=value at position " + std::to_string(pos),
                                       pos);
            }
            const auto& presets = family_presets();
            const auto it = std::find_if(presets.begin(), presets.end(),
                                         [&](const auto& e) { return e.first == token; });
            if (it == presets.end()) {
                throw FamilyParseError("unknown preset \"" + std::string(token) +
                                           "\" at position " + std::to_string(pos),
                                       pos);
            }
            preset = it->second;
        } else {
            const std::string_view key = trim(token.substr(0, eq));
            std::size_t value_pos = pos + eq + 1;
            const std::string_view value = trim(token.substr(eq + 1), value_pos);

            auto assign_int = [&](std::optional<BigInt>& slot) {
                if (slot) {
                    throw FamilyParseError("duplicate key \"" + std::string(key) +
                                               "\" at position " + std::to_string(pos),
                                           pos);
                }
                slot = parse_spec_int(value, value_pos);
            };
            if (key == "p") {
                if (preset) {
                    throw FamilyParseError("p conflicts with preset at position " +
                                               std::to_string(pos),
                                           pos);
                }
                assign_int(p);
            } else if (key == "q") {
                if (preset) {
                    throw FamilyParseError("q conflicts with preset at position " +
                                               std::to_string(pos),
                                           pos);
                }
                assign_int(q);
            } else if (key == "k") {
                if (k) {
                    throw FamilyParseError("duplicate key \"k\" at position " +
                                               std::to_string(pos),
                                           pos);
                }
                k = parse_spec_uint(value, value_pos);
                if (*k == 0) {
                    throw FamilyParseError("k must be positive (position " +
                                               std::to_string(value_pos) + ")",
                                           value_pos);
                }
            } else if (key == "a") {
                assign_int(a);
            } else if (key == "b") {
                assign_int(b);
            } else {
                throw FamilyParseError("unknown key \"" + std::string(key) + "\" at position " +
                                           std::to_string(pos),
                                       pos);
            }
        }

        first_token = false;
        if (comma == spec.size()) break;
        token_start = comma + 1;
    }

    if (!preset && (!p || !q)) {
        throw FamilyParseError("spec must name a preset or give both p and q", 0);
    }
    if (a.has_value() != b.has_value()) {
        throw FamilyParseError("a and b must be given together", 0);
    }

    FamilySpec out{preset ? *preset : SequenceParams(*p, *q), k.value_or(1), std::nullopt};
    if (a) out.init = HoradamInit{*a, *b};
    return out;
}

RangeArg parse_range(std::string_view text) {
    RangeArg out;
    std::string_view body = trim(text);
    if (const std::size_t eq = body.find('='); eq != std::string_view::npos) {
        const std::string_view name = trim(body.substr(0, eq));
        if (name.empty()) throw UsageError("range: empty index name in \"" + std::string(text) + "\"");
        out.name = std::string(name);
        body = trim(body.substr(eq + 1));
    }
    const std::size_t dots = body.find("..");
    if (dots == std::string_view::npos) {
        throw UsageError("range: expected lo..hi in \"" + std::string(text) + "\"");
    }
    const auto parse_bound = [&](std::string_view part) -> std::uint64_t {
        part = trim(part);
        BigInt value;
        try {
            value = parse_bigint(part);
        } catch (const std::invalid_argument&) {
            throw UsageError("range: malformed bound in \"" + std::string(text) + "\"");
        }
        if (value < 0 || !value.fits_ulong_p()) {
            throw UsageError("range: bounds must be nonnegative in \"" + std::string(text) + "\"");
        }
        return value.get_ui();
    };
    out.range.lo = parse_bound(body.substr(0, dots));
    out.range.hi = parse_bound(body.substr(dots + 2));
    if (out.range.hi < out.range.lo) {
        throw UsageError("range: lo exceeds hi in \"" + std::string(text) + "\"");
    }
    return out;
}

OutputFormat parse_format(std::string_view text) {
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    throw UsageError("unknown format \"" + std::string(text) + "\" (expected csv or json)");
}

TableKind parse_table_kind(std::string_view text) {
    if (text == "U") return TableKind::U;
    if (text == "V") return TableKind::V;
    if (text == "W") return TableKind::W;
    throw UsageError("unknown sequence \"" + std::string(text) + "\" (expected U, V or W)");
}

namespace {

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void write_csv(std::ostream& out, const std::vector<OutputRecord>& records) {
    if (records.empty()) return;
    std::string line;
    for (const auto& [key, value] : records.front()) {
        if (!line.empty()) line += ',';
        line += csv_field(key);
    }
    out << line << '\n';
    for (const OutputRecord& record : records) {
        line.clear();
        for (const auto& [key, value] : record) {
            if (!line.empty()) line += ',';
            line += csv_field(value);
        }
        out << line << '\n';
    }
}

void write_jsonl(std::ostream& out, const std::vector<OutputRecord>& records) {
    for (const OutputRecord& record : records) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (const auto& [key, value] : record) obj[key] = value;
        out << obj.dump() << '\n';
    }
}

std::string status_name(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skip: return "skip";
    }
    return "?";
}

}  // namespace

void write_records(std::ostream& out, OutputFormat format,
                   const std::vector<OutputRecord>& records) {
    if (format == OutputFormat::csv) {
        write_csv(out, records);
    } else {
        write_jsonl(out, records);
    }
}

int cmd_table(const FamilySpec& family, IndexRange range, TableKind which, OutputFormat format,
              std::ostream& out) {
    std::vector<OutputRecord> records;
    records.reserve(range.size());
    const auto add_row = [&](std::uint64_t n, const BigInt& value) {
        const FamilyIndex ix = decompose(n, family.k);
        records.push_back({{"n", std::to_string(n)},
                           {"m", std::to_string(ix.m)},
                           {"r", std::to_string(ix.r)},
                           {"value", to_decimal(value)}});
    };

    if (which == TableKind::W) {
        if (!family.init) {
            throw UsageError("table: --which W needs a=<int>,b=<int> in the family spec");
        }
        // One iteration pass covers the whole range.
        BigInt w0 = family.init->a;
        BigInt w1 = family.init->b;
        for (std::uint64_t n = 0; n <= range.hi; ++n) {
            if (n >= range.lo) add_row(n, w0);
            BigInt next = family.params.p() * w1 - family.params.q() * w0;
            w0 = std::move(w1);
            w1 = std::move(next);
        }
    } else {
        const auto rows =
            family_table(family.params, which == TableKind::U ? SequenceKind::U : SequenceKind::V,
                         family.k, range.lo, range.hi);
        for (const FamilyValue& row : rows) add_row(row.index.n, row.value);
    }
    write_records(out, format, records);
    return 0;
}

int cmd_verify(IdentityId id, const std::vector<FamilySpec>& families,
               const std::vector<RangeArg>& ranges, OutputFormat format, std::ostream& out,
               const SequenceSource& src) {
    if (families.empty()) throw UsageError("verify: at least one --family is required");

    const std::string index_name(first_index_name(id));
    std::optional<IndexRange> first, order;
    for (const RangeArg& arg : ranges) {
        if (!arg.name || *arg.name == index_name) {
            if (first) throw UsageError("verify: duplicate " + index_name + " range");
            first = arg.range;
        } else if (*arg.name == "k") {
            if (order) throw UsageError("verify: duplicate k range");
            order = arg.range;
        } else {
            throw UsageError("verify: identity " + std::string(to_string(id)) +
                             " has no index named \"" + *arg.name + "\"");
        }
    }
    if (!first) throw UsageError("verify: missing --range for index " + index_name);
    if (needs_order_index(id) && !order) {
        throw UsageError("verify: identity " + std::string(to_string(id)) +
                         " needs a k range (--range k=lo..hi)");
    }
    if (!needs_order_index(id) && order) {
        throw UsageError("verify: identity " + std::string(to_string(id)) +
                         " takes no k range");
    }

    SweepRequest request{id, {}, *first, order};
    request.params_list.reserve(families.size());
    for (const FamilySpec& family : families) request.params_list.push_back(family.params);

    const std::vector<IdentityReport> reports = sweep(request, src);

    std::vector<OutputRecord> records;
    records.reserve(reports.size());
    bool any_fail = false;
    for (const IdentityReport& report : reports) {
        any_fail = any_fail || report.status == CheckStatus::fail;
        OutputRecord record{
            {"identity", std::string(to_string(report.id))},
            {"p", to_decimal(report.params.p())},
            {"q", to_decimal(report.params.q())},
            {index_name, std::to_string(report.index)},
        };
        if (report.k) record.push_back({"k", std::to_string(*report.k)});
        record.push_back({"lhs", report.lhs ? report.lhs->str() : ""});
        record.push_back({"rhs", report.rhs ? report.rhs->str() : ""});
        record.push_back({"status", status_name(report.status)});
        record.push_back({"reason", report.reason});
        records.push_back(std::move(record));
    }
    write_records(out, format, records);
    return any_fail ? 1 : 0;
}

int cmd_gfcheck(const FamilySpec& family, std::uint64_t count, OutputFormat format,
                std::ostream& out) {
    if (count < 1) throw UsageError("gfcheck: count must be >= 1");

    std::vector<OutputRecord> records;
    records.reserve(2 * count);
    bool any_fail = false;
    for (const SequenceKind kind : {SequenceKind::U, SequenceKind::V}) {
        const RationalSeries series =
            kind == SequenceKind::U ? gf_u2(family.params) : gf_v2(family.params);
        const std::vector<BigInt> coeffs = expand(series, count);
        const auto rows = family_table(family.params, kind, 2, 0, count - 1);
        for (std::uint64_t n = 0; n < count; ++n) {
            const bool match = coeffs[n] == rows[n].value;
            any_fail = any_fail || !match;
            records.push_back({{"kind", kind == SequenceKind::U ? "U" : "V"},
                               {"n", std::to_string(n)},
                               {"series", to_decimal(coeffs[n])},
                               {"family", to_decimal(rows[n].value)},
                               {"status", match ? "pass" : "fail"}});
        }
    }
    write_records(out, format, records);
    return any_fail ? 1 : 0;
}

}  // namespace genfib
