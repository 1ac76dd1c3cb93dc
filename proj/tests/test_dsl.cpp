#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "adic/runner.hpp"
#include "schema_check.hpp"

using namespace adic;

namespace {

std::vector<std::string> valid_corpus() {
    return {
        // 1: minimal ring + ideal
        "ring A = QQ[x,y] order grevlex; ideal a = <x, y>;",
        // 2: default order clause omitted
        "ring A = QQ[x,y]; ideal a = <x^2 - y>;",
        // 3: lex order
        "ring A = QQ[x,y,z] order lex; ideal a = <x, y, z>;",
        // 4: prime field
        "ring A = GF(7)[x,y]; ideal a = <x + 6*y>;",
        // 5: quotient ring modulus
        "ring A = QQ[x,y] / <x*y>; ideal a = <x>; wpr;",
        // 6: module with relations, gb over modules
        "ring A = QQ[x,y]; module M = coker rows 1 [[x],[y]]; gb M;",
        // 7: free module through an empty matrix
        "ring A = QQ[x,y]; module F = coker rows 2 [];",
        // 8: rank-2 relations, multi-entry rows
        "ring A = QQ[x,y]; module N = coker rows 2 [[x, y],[y, x]];",
        // 9: induced tower + validate
        "ring A = QQ[x,y]; ideal a = <x, y>; module F = coker rows 1 []; "
        "tower T = induced F levels 3; tower-validate T;",
        // 10: explicit tower
        "ring A = QQ[x]; ideal a = <x>; tower T = explicit levels 1 modules "
        "[coker rows 1 [[x]], coker rows 1 [[x^2]]] transitions [[[1]]]; "
        "tower-validate T;",
        // 11: morphism + ml-check
        "ring A = QQ[x,y]; ideal a = <x, y>; module F2 = coker rows 2 []; "
        "module F1 = coker rows 1 []; tower T2 = induced F2 levels 2; "
        "tower T1 = induced F1 levels 2; morphism p = T2 -> T1 maps "
        "[[[1],[0]], [[1],[0]], [[1],[0]]]; ml-check p;",
        // 12: tor and koszul commands
        "ring A = QQ[x,y]; ideal a = <x, y>; module M = coker rows 1 [[x]]; "
        "module Q = coker rows 1 [[x],[y]]; tor Q M 1; koszul 2;",
        // 13: flatcheck and prop250
        "ring A = QQ[x,y]; ideal a = <x, y>; module M = coker rows 1 [[x]]; "
        "flatcheck M; prop250 M;",
        // 14: system-resolution, lemma290, lift, limit-flat
        "ring A = QQ[x,y]; ideal a = <x, y>; module F = coker rows 1 []; "
        "tower T = induced F levels 2; system-resolution T 2; lemma290 T 2; "
        "lift T 0; limit-flat T;",
        // 15: comments and rational coefficients
        "# a comment line\nring A = QQ[x,y]; # trailing comment\n"
        "ideal a = <1/2*x + y, x^3>;\n",
        // 16: parenthesized polynomial arithmetic in entries
        "ring A = QQ[x,y]; ideal a = <(x + y)^2 - x*(x + 2*y)>;",
    };
}

std::vector<Report> run_text(const std::string& text, int kmax = 2, int depth = 2) {
    SessionScript s = parse_script(text);
    RunOptions opt;
    opt.kmax = kmax;
    opt.depth = depth;
    return run_script(s, opt);
}

} // namespace

TEST_CASE("the valid corpus parses and round-trips structurally") {
    for (const auto& text : valid_corpus()) {
        CAPTURE(text);
        SessionScript first = parse_script(text);
        std::string printed = print_script(first);
        SessionScript second = parse_script(printed);
        CHECK(first == second);
        // printing is a fixed point
        CHECK(print_script(second) == printed);
    }
}

TEST_CASE("script files round-trip as well") {
    for (const char* name :
         {"koszul_regular.adic", "nonflat_quotient.adic", "tower_lift.adic",
          "wpr_family.adic", "wpr_xy_quotient.adic", "thm230_ml.adic"}) {
        std::ifstream in(std::string(ADIC_SOURCE_DIR) + "/scripts/" + name);
        REQUIRE(in.good());
        std::stringstream buf;
        buf << in.rdbuf();
        SessionScript first = parse_script(buf.str());
        SessionScript second = parse_script(print_script(first));
        CHECK(first == second);
    }
}

TEST_CASE("malformed inputs carry positions and expectations") {
    SUBCASE("unterminated generator list") {
        try {
            parse_script("ring A = QQ[x,y];\nideal a = <x,");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.pos.line == 2);
            CHECK(e.expected.find("polynomial") != std::string::npos);
        }
    }
    SUBCASE("a second ring is rejected") {
        try {
            parse_script("ring A = QQ[x]; ring B = QQ[y];");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.pos.line == 1);
            CHECK(e.pos.col > 15);
        }
    }
    SUBCASE("matrix row arity mismatch") {
        try {
            parse_script("ring A = QQ[x,y]; module M = coker rows 2 [[x]];");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.expected.find("arity") != std::string::npos);
        }
    }
    SUBCASE("unknown variable inside a polynomial") {
        try {
            parse_script("ring A = QQ[x];\nideal a = <z>;");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.pos.line == 2);
            CHECK(std::string(e.what()).find("unknown variable") != std::string::npos);
        }
    }
    SUBCASE("undeclared names in commands") {
        CHECK_THROWS_AS(parse_script("ring A = QQ[x]; tor M M 1;"), ParseError);
        CHECK_THROWS_AS(parse_script("ring A = QQ[x]; gb a;"), ParseError);
    }
    SUBCASE("commands requiring the ideal") {
        CHECK_THROWS_AS(parse_script("ring A = QQ[x]; wpr;"), ParseError);
        CHECK_THROWS_AS(
            parse_script("ring A = QQ[x]; module F = coker rows 1 []; "
                         "tower T = induced F levels 2;"),
            ParseError);
    }
    SUBCASE("missing semicolon") {
        CHECK_THROWS_AS(parse_script("ring A = QQ[x]"), ParseError);
    }
    SUBCASE("declaration before the ring") {
        CHECK_THROWS_AS(parse_script("ideal a = <x>;"), ParseError);
    }
}

TEST_CASE("reports validate against the published schema") {
    std::ifstream in(std::string(ADIC_SOURCE_DIR) + "/docs/report.schema.json");
    REQUIRE(in.good());
    nlohmann::json schema = nlohmann::json::parse(in);
    std::string why;
    auto reports = run_text(
        "ring A = QQ[x,y]; ideal a = <x, y>; module M = coker rows 1 [[x]]; "
        "module F = coker rows 1 []; tower T = induced F levels 2; gb a; "
        "tor M M 1; koszul 1; wpr; flatcheck M; tower-validate T; "
        "system-resolution T 2; lift T 0; prop250 F; lemma290 T 2; limit-flat T;");
    REQUIRE(reports.size() == 11);
    for (const auto& r : reports) {
        nlohmann::json j = report_to_json(r);
        CAPTURE(j.dump());
        CHECK(testsupport::validates(j, schema, &why));
        if (!why.empty()) CAPTURE(why);
    }
}

TEST_CASE("every failing report carries at least one witness") {
    auto reports = run_text(
        "ring A = QQ[x,y]; ideal a = <x, y>; module M = coker rows 1 [[x]]; "
        "flatcheck M; prop250 M;");
    for (const auto& r : reports) {
        if (r.verdict == "fail") CHECK(!r.witnesses.empty());
    }
}

TEST_CASE("repeated runs are identical modulo the timing field") {
    const std::string text =
        "ring A = QQ[x,y]; ideal a = <x, y>; module M = coker rows 1 [[x]]; "
        "module F = coker rows 1 []; tower T = induced F levels 2; "
        "gb a; wpr; flatcheck M; system-resolution T 2; limit-flat T;";
    auto strip = [](std::vector<Report> reports) {
        std::string all;
        for (auto& r : reports) {
            nlohmann::json j = report_to_json(r);
            j["timing_ms"] = 0;
            all += j.dump() + "\n";
        }
        return all;
    };
    CHECK(strip(run_text(text)) == strip(run_text(text)));
}

TEST_CASE("digest is stable and hex-shaped") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") != fnv1a_hex("b"));
    CHECK(fnv1a_hex("adic").size() == 16);
}
