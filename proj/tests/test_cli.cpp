#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "genfib/cli.hpp"

using namespace genfib;

namespace {

struct CorruptUFamily : SequenceSource {
    BigInt u_family(const SequenceParams& params, std::uint64_t n,
                    std::uint64_t k) const override {
        BigInt value = SequenceSource::u_family(params, n, k);
        if (n == 7 && k == 2) value += 1;
        return value;
    }
};

std::size_t parse_position(const char* spec) {
    try {
        parse_family(spec);
    } catch (const FamilyParseError& e) {
        return e.position;
    }
    return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("family presets") {
    const FamilySpec fib = parse_family("fibonacci,k=2");
    CHECK(fib.params == SequenceParams(BigInt(1), BigInt(-1)));
    CHECK(fib.k == 2);
    CHECK(!fib.init.has_value());

    CHECK(parse_family("pell").params == SequenceParams(BigInt(2), BigInt(-1)));
    CHECK(parse_family("jacobsthal").params == SequenceParams(BigInt(1), BigInt(-2)));
    CHECK(parse_family("balancing").params == SequenceParams(BigInt(6), BigInt(1)));
}

TEST_CASE("explicit family specs") {
    const FamilySpec explicit_pair = parse_family("p=6,q=1");
    CHECK(explicit_pair.params == SequenceParams(BigInt(6), BigInt(1)));
    CHECK(explicit_pair.k == 1);

    const FamilySpec spaced = parse_family("  p = 2 ,  q = -1 , k = 3 ");
    CHECK(spaced.params == SequenceParams(BigInt(2), BigInt(-1)));
    CHECK(spaced.k == 3);

    const FamilySpec seeded = parse_family("fibonacci,a=3,b=7");
    REQUIRE(seeded.init.has_value());
    CHECK(seeded.init->a == 3);
    CHECK(seeded.init->b == 7);
}

TEST_CASE("family parse errors carry a position") {
    CHECK(parse_position("p=1,q=") == 6);
    CHECK(parse_position("p=1,q=x") == 6);
    CHECK(parse_position("lucas") == 0);
    CHECK(parse_position("p=1,p=2,q=1") == 4);
    CHECK(parse_position("p=1,q=2,z=3") == 8);
    CHECK_THROWS_AS(parse_family("fibonacci,k=0"), FamilyParseError);
    CHECK_THROWS_AS(parse_family("fibonacci,p=2"), FamilyParseError);
    CHECK_THROWS_AS(parse_family("p=1"), FamilyParseError);
    CHECK_THROWS_AS(parse_family("p=1,q=2,a=3"), FamilyParseError);
    CHECK_THROWS_AS(parse_family("k=2"), FamilyParseError);
    CHECK_THROWS_AS(parse_family(""), FamilyParseError);
    CHECK_THROWS_AS(parse_family("fibonacci,k=-2"), FamilyParseError);
}

TEST_CASE("range parsing") {
    const RangeArg plain = parse_range("2..50");
    CHECK(!plain.name.has_value());
    CHECK(plain.range.lo == 2);
    CHECK(plain.range.hi == 50);

    const RangeArg named = parse_range(" m = 1..25 ");
    CHECK(named.name == "m");
    CHECK(named.range.lo == 1);
    CHECK(named.range.hi == 25);

    CHECK_THROWS_AS(parse_range("5"), UsageError);
    CHECK_THROWS_AS(parse_range("5..x"), UsageError);
    CHECK_THROWS_AS(parse_range("9..2"), UsageError);
    CHECK_THROWS_AS(parse_range("-3..2"), UsageError);
}

TEST_CASE("format and kind parsing") {
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK_THROWS_AS(parse_format("xml"), UsageError);
    CHECK(parse_table_kind("U") == TableKind::U);
    CHECK(parse_table_kind("W") == TableKind::W);
    CHECK_THROWS_AS(parse_table_kind("X"), UsageError);
}

TEST_CASE("table emits n, m, r, value rows") {
    std::ostringstream out;
    const int code = cmd_table(parse_family("fibonacci,k=2"), {0, 6}, TableKind::U,
                               OutputFormat::csv, out);
    CHECK(code == 0);
    CHECK(out.str() ==
          "n,m,r,value\n"
          "0,0,0,0\n"
          "1,0,1,0\n"
          "2,1,0,1\n"
          "3,1,1,1\n"
          "4,2,0,1\n"
          "5,2,1,2\n"
          "6,3,0,4\n");
}

TEST_CASE("table covers the three sequences") {
    std::ostringstream u3;
    cmd_table(parse_family("p=1,q=-1,k=3"), {0, 3}, TableKind::U, OutputFormat::csv, u3);
    CHECK(u3.str() ==
          "n,m,r,value\n"
          "0,0,0,0\n"
          "1,0,1,0\n"
          "2,0,2,0\n"
          "3,1,0,1\n");

    std::ostringstream v;
    cmd_table(parse_family("fibonacci"), {0, 3}, TableKind::V, OutputFormat::csv, v);
    CHECK(v.str() ==
          "n,m,r,value\n"
          "0,0,0,2\n"
          "1,1,0,1\n"
          "2,2,0,3\n"
          "3,3,0,4\n");

    std::ostringstream w;
    cmd_table(parse_family("fibonacci,a=3,b=7"), {2, 4}, TableKind::W, OutputFormat::csv, w);
    CHECK(w.str() ==
          "n,m,r,value\n"
          "2,2,0,10\n"
          "3,3,0,17\n"
          "4,4,0,27\n");

    CHECK_THROWS_AS(
        cmd_table(parse_family("fibonacci"), {0, 3}, TableKind::W, OutputFormat::csv, v),
        UsageError);
}

TEST_CASE("json output is one object per line with string values") {
    std::ostringstream out;
    cmd_table(parse_family("fibonacci,k=2"), {5, 6}, TableKind::U, OutputFormat::json, out);
    std::istringstream lines(out.str());
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        const auto obj = nlohmann::json::parse(line);
        CHECK(obj.at("n").is_string());
        CHECK(obj.at("value").is_string());
        ++rows;
    }
    CHECK(rows == 2);

    std::ostringstream again;
    cmd_table(parse_family("fibonacci,k=2"), {5, 6}, TableKind::U, OutputFormat::json, again);
    CHECK(out.str() == again.str());
}

TEST_CASE("csv fields with separators are quoted") {
    std::ostringstream out;
    write_records(out, OutputFormat::csv,
                  {{{"key", "a,b"}, {"note", "say \"hi\""}}});
    CHECK(out.str() == "key,note\n\"a,b\",\"say \"\"hi\"\"\"\n");
}

TEST_CASE("verify exit codes and statuses") {
    std::ostringstream out;
    const std::vector<FamilySpec> fib = {parse_family("fibonacci")};

    const int ok = cmd_verify(IdentityId::T3, fib, {parse_range("s=2..50")},
                              OutputFormat::csv, out);
    CHECK(ok == 0);
    int lines = 0;
    for (char c : out.str()) lines += (c == '\n') ? 1 : 0;
    CHECK(lines == 50);  // header + 49 grid points

    std::ostringstream skip_out;
    const int skipped =
        cmd_verify(IdentityId::T1iii, fib, {parse_range("m=1..1"), parse_range("k=2..2")},
                   OutputFormat::csv, skip_out);
    CHECK(skipped == 0);
    CHECK(skip_out.str().find("skip,U_{m-1} = 0") != std::string::npos);

    std::ostringstream pell_out;
    const int t4 = cmd_verify(IdentityId::T4U, {parse_family("pell")},
                              {parse_range("n=4..100")}, OutputFormat::csv, pell_out);
    CHECK(t4 == 0);
    std::size_t passes = 0;
    for (std::size_t at = pell_out.str().find("pass"); at != std::string::npos;
         at = pell_out.str().find("pass", at + 1)) {
        ++passes;
    }
    CHECK(passes == 97);

    std::ostringstream bad_out;
    const CorruptUFamily corrupt;
    const int failed = cmd_verify(IdentityId::T4U, fib, {parse_range("n=4..30")},
                                  OutputFormat::csv, bad_out, corrupt);
    CHECK(failed == 1);
    CHECK(bad_out.str().find("fail") != std::string::npos);
}

TEST_CASE("verify validates its ranges") {
    const std::vector<FamilySpec> fib = {parse_family("fibonacci")};
    std::ostringstream out;
    CHECK_THROWS_AS(cmd_verify(IdentityId::T1i, fib, {parse_range("m=1..5")},
                               OutputFormat::csv, out),
                    UsageError);
    CHECK_THROWS_AS(cmd_verify(IdentityId::T3, fib,
                               {parse_range("s=2..5"), parse_range("k=1..2")},
                               OutputFormat::csv, out),
                    UsageError);
    CHECK_THROWS_AS(cmd_verify(IdentityId::T3, fib, {parse_range("n=2..5")},
                               OutputFormat::csv, out),
                    UsageError);
    CHECK_THROWS_AS(cmd_verify(IdentityId::T3, {}, {parse_range("s=2..5")},
                               OutputFormat::csv, out),
                    UsageError);
}

TEST_CASE("gfcheck compares both streams") {
    std::ostringstream out;
    CHECK(cmd_gfcheck(parse_family("fibonacci"), 64, OutputFormat::csv, out) == 0);

    std::ostringstream pell32;
    CHECK(cmd_gfcheck(parse_family("p=2,q=-1"), 32, OutputFormat::csv, pell32) == 0);

    std::ostringstream one;
    CHECK(cmd_gfcheck(parse_family("p=2,q=-1"), 1, OutputFormat::csv, one) == 0);
    CHECK(one.str() ==
          "kind,n,series,family,status\n"
          "U,0,0,0,pass\n"
          "V,0,4,4,pass\n");

    CHECK_THROWS_AS(cmd_gfcheck(parse_family("fibonacci"), 0, OutputFormat::csv, out),
                    UsageError);
}

TEST_CASE("verify output is deterministic") {
    const std::vector<FamilySpec> fams = {parse_family("fibonacci"), parse_family("pell")};
    std::ostringstream a, b;
    cmd_verify(IdentityId::T1ii, fams, {parse_range("m=1..10"), parse_range("k=1..4")},
               OutputFormat::json, a);
    cmd_verify(IdentityId::T1ii, fams, {parse_range("m=1..10"), parse_range("k=1..4")},
               OutputFormat::json, b);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("\"lhs\"") != std::string::npos);
}
