#include "tolspace/dot.hpp"
#include "tolspace/error.hpp"
#include "tolspace/fixtures.hpp"
#include "tolspace/real.hpp"
#include "tolspace/spacespec.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace tolspace;

namespace {

const char* kE1Text = R"(# comment
continuum e1
  carrier 0 1 2 3 4
  level 1 absdiff<=2
  level 2 absdiff<=1
  class X0 = 0
end
)";

} // namespace

TEST_CASE("parsing materializes rules to the programmatic representation") {
    Workspace ws = parse_workspace(kE1Text);
    REQUIRE(ws.spaces.size() == 1);
    CHECK(*ws.spaces[0].continuum == *fixtures::e1());
    Class x0 = ws.resolve_class(ws.spaces[0], "X0");
    CHECK(x0.count() == 1);
    CHECK(x0.test(ws.spaces[0].continuum->require_position("0")));
}

TEST_CASE("inline class literals resolve against the carrier") {
    Workspace ws = parse_workspace(kE1Text);
    Class lit = ws.resolve_class(ws.spaces[0], "{0,2,4}");
    CHECK(lit.count() == 3);
    CHECK(ws.resolve_class(ws.spaces[0], "{}").none());
    CHECK_THROWS_AS(ws.resolve_class(ws.spaces[0], "{0,9}"), Error);
    CHECK_THROWS_AS(ws.resolve_class(ws.spaces[0], "NOPE"), Error);
}

TEST_CASE("level 0 defaults to the full relation and levels must be contiguous") {
    Workspace ws = parse_workspace(kE1Text);
    CHECK(ws.spaces[0].continuum->relation(0).is_full());
    CHECK_THROWS_AS(parse_workspace("continuum c\n  carrier a b\n  level 2 edges (a,b)\nend\n"),
                    Error);
}

TEST_CASE("grids build the real continuum by default") {
    Workspace ws = parse_workspace("continuum g\n  grid 4 2 3\nend\n");
    CHECK(*ws.spaces[0].continuum ==
          Continuum(real_continuum(RealGrid{4, 2, 3})));
}

TEST_CASE("selectors pick out the literal families") {
    Workspace ws = parse_workspace(
        "continuum lit\n  carrier 0 8 48\n  levels paper-literal-real 4\nend\n");
    ValidationReport report = validate(*ws.space("lit").continuum);
    CHECK_FALSE(report.ok);
    Workspace ws2 = parse_workspace(
        "continuum mg\n  grid 4 1 4\n  levels metric-family 4\nend\nmetric md on mg absdiff\n");
    CHECK(validate(*ws2.space("mg").continuum).ok);
    CHECK(validate_metric(ws2.metric("md")).ok);
    Workspace ws3 = parse_workspace(
        "continuum pm\n  grid 3 1 2\n  levels paper-literal-metric 2 e=1/2\nend\n");
    CHECK_FALSE(validate(*ws3.space("pm").continuum).ok);
}

TEST_CASE("asymmetric literal pair lists are malformed input") {
    try {
        parse_workspace(
            "continuum bad\n  carrier a b\n  level 1 pairs (a,a) (b,b) (a,b)\nend\n");
        FAIL("expected an input error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::bad_input);
        CHECK(std::string(e.what()).find("converse") != std::string::npos);
    }
}

TEST_CASE("structural errors carry line numbers") {
    auto expect_input_error = [](const char* text) {
        try {
            parse_workspace(text);
            FAIL_CHECK("expected an input error for: " << text);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::bad_input);
            CHECK(std::string(e.what()).rfind("line ", 0) == 0);
        }
    };
    expect_input_error("bogus directive\n");
    expect_input_error("continuum c\n  carrier a\n  level 1 edges (a,b)\nend\n");
    expect_input_error("continuum c\n  carrier a a\n  level 1 full\nend\n");
    expect_input_error("continuum c\n  carrier a\nend\n"); // no levels
    expect_input_error("continuum c\n  carrier 0 1\n  level 1 absdiff<=x\nend\n");
    expect_input_error("continuum c\n  carrier 0 1\n  level 1 full\n  partition (0,9)\nend\n");
    expect_input_error("continuum c\n  carrier 0 1\n  level 1 full\n  class A = 9\nend\n");
    expect_input_error("continuum c\n  carrier 0 1\n  level 1 full\n"); // missing end
    expect_input_error("continuum c\n  carrier a b\n  grid 3 1 2\nend\n"); // both carriers
    expect_input_error("continuum g\n  grid 3 1 5\nend\n"); // G < L+1
    expect_input_error("function f from a to b affine 1 0\n");
    expect_input_error(
        "continuum c\n  carrier 0 1\n  level 1 full\nend\n"
        "function f from c to c table 0->0\n"); // not total
    expect_input_error(
        "continuum c\n  carrier 0 1\n  level 1 full\nend\n"
        "metric m on c table (0,1)=1 (0,1)=2\n"); // duplicate entry
}

TEST_CASE("metric tables fill symmetrically with zero diagonals") {
    Workspace ws = parse_workspace(
        "continuum c\n  carrier a b c\n  level 1 full\nend\n"
        "metric m on c table (a,b)=1 (a,c)=2 (b,c)=1\n");
    const MetricTable& m = ws.metric("m");
    Index a = m.carrier().require("a"), b = m.carrier().require("b");
    CHECK(m.distance(a, b) == Rational(1));
    CHECK(m.distance(b, a) == Rational(1));
    CHECK(m.distance(a, a) == Rational(0));
    CHECK_THROWS_AS(parse_workspace("continuum c\n  carrier a b c\n  level 1 full\nend\n"
                                    "metric m on c table (a,b)=1\n"),
                    Error); // incomplete
}

TEST_CASE("print is a fixed point and parse(print) is semantically equal") {
    const char* texts[] = {
        kE1Text,
        "continuum g\n  grid 3 1 2\nend\nfunction id on g identity\nfunction st on g step\n"
        "metric d on g absdiff\n",
        "continuum p\n  carrier 0 1 2 3 4\n  level 1 absdiff<=2\n  level 2 absdiff<=1\n"
        "  partition (0,1) (3,4)\n  class A = 0 4\nend\n",
        "continuum lit\n  carrier 0 8 48\n  levels paper-literal-real 4\nend\n",
        "continuum pm\n  grid 3 1 2\n  levels paper-literal-metric 2 e=1/2\nend\n",
        "continuum sparse\n  carrier 0 1/64 63/64 1 65/64 2\n  levels real-continuum 4\n"
        "  partition clusters\nend\n",
    };
    for (const char* text : texts) {
        INFO(text);
        Workspace ws = parse_workspace(text);
        std::string printed = print_workspace(ws);
        Workspace again = parse_workspace(printed);
        CHECK(semantically_equal(ws, again));
        CHECK(print_workspace(again) == printed);
    }
}

TEST_CASE("dot export is deterministic and loop free") {
    auto e1 = fixtures::e1();
    std::string dot = export_dot(*e1, 2, "e1");
    CHECK(dot == "graph e1_level_2 {\n"
                 "  \"0\";\n  \"1\";\n  \"2\";\n  \"3\";\n  \"4\";\n"
                 "  \"0\" -- \"1\";\n  \"1\" -- \"2\";\n  \"2\" -- \"3\";\n  \"3\" -- \"4\";\n"
                 "}\n");
    // level 0 is the complete graph: C(5,2) edges
    std::string full = export_dot(*e1, 0, "e1");
    std::size_t edges = 0;
    for (std::size_t at = full.find("--"); at != std::string::npos; at = full.find("--", at + 1)) {
        ++edges;
    }
    CHECK(edges == 10);
    auto e2 = fixtures::e2();
    std::string pairs = export_dot(*e2, 2, "e2");
    CHECK(pairs.find("\"0\" -- \"1\"") != std::string::npos);
    CHECK(pairs.find("\"10\" -- \"11\"") != std::string::npos);
    CHECK(pairs.find("\"1\" -- \"10\"") == std::string::npos);
    std::string all = export_dot_all_levels(*e1, "e1");
    CHECK(all.find("e1_level_0") != std::string::npos);
    CHECK(all.find("e1_level_2") != std::string::npos);
}
