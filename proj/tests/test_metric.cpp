#include "tolspace/error.hpp"
#include "tolspace/figures.hpp"
#include "tolspace/metric.hpp"
#include "tolspace/real.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace tolspace;

namespace {

MetricTable table_metric(std::initializer_list<const char*> ids,
                         std::initializer_list<std::tuple<int, int, long long>> entries) {
    std::vector<std::string> names;
    for (const char* id : ids) names.emplace_back(id);
    CarrierPtr carrier = make_carrier(names);
    std::vector<Rational> dense(carrier->size() * carrier->size(), Rational(0));
    for (const auto& [i, j, v] : entries) {
        dense[static_cast<std::size_t>(i) * carrier->size() + static_cast<std::size_t>(j)] =
            Rational(v);
        dense[static_cast<std::size_t>(j) * carrier->size() + static_cast<std::size_t>(i)] =
            Rational(v);
    }
    return MetricTable(carrier, dense);
}

} // namespace

TEST_CASE("the absolute difference is a metric") {
    std::vector<Rational> values;
    for (int i = 0; i <= 4; ++i) values.emplace_back(i);
    MetricTable m = MetricTable::absdiff(make_numeric_carrier(values));
    CHECK(validate_metric(m).ok);
}

TEST_CASE("identity violations are witnessed") {
    MetricTable m = table_metric({"0", "1"}, {{0, 1, 0}});
    ValidationReport report = validate_metric(m);
    CHECK_FALSE(report.ok);
    bool found = false;
    for (const auto& v : report.violations) {
        if (v.condition == "identity") found = true;
    }
    CHECK(found);
}

TEST_CASE("triangle violations name the witness triple") {
    MetricTable m = table_metric({"0", "1", "2"}, {{0, 2, 5}, {0, 1, 1}, {1, 2, 1}});
    ValidationReport report = validate_metric(m);
    CHECK_FALSE(report.ok);
    bool found = false;
    for (const auto& v : report.violations) {
        if (v.condition == "triangle") {
            CHECK(v.witness == std::vector<std::string>{"0", "1", "2"});
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("ball evaluation on the g4 grid") {
    CarrierPtr carrier = grid_carrier(RealGrid{4, 1, 1});
    MetricTable m = MetricTable::absdiff(carrier);
    Index zero = carrier->require("0");

    Class b = ball(m, zero, Rational(1, 2), 6);
    oracle::IdSet expected;
    for (Index i = 0; i < carrier->size(); ++i) {
        if (carrier->value(i).abs() < Rational(1, 2)) expected.insert(carrier->at(i).id);
    }
    oracle::IdSet got;
    for (auto i = b.find_first(); i != Class::npos; i = b.find_next(i)) {
        got.insert(carrier->at(static_cast<Index>(i)).id);
    }
    CHECK(got == expected);
    CHECK(expected.count("7/16") == 1);
    CHECK(expected.count("1/2") == 0);

    // depth 0 keeps only the first union term, d < e - 1
    Class shallow = ball(m, zero, Rational(1, 2), 0);
    CHECK(shallow.none());
    Class wide = ball(m, zero, Rational(3, 2), 0);
    for (auto i = wide.find_first(); i != Class::npos; i = wide.find_next(i)) {
        CHECK(m.distance(zero, static_cast<Index>(i)) < Rational(1, 2));
    }

    CHECK_THROWS_AS(ball(m, zero, Rational(0), 3), Error);
    CHECK_THROWS_AS(ball(m, zero, Rational(-1), 3), Error);
}

TEST_CASE("metric continua validate and make balls open") {
    CarrierPtr carrier = grid_carrier(RealGrid{4, 1, 1});
    MetricTable m = MetricTable::absdiff(carrier);
    Continuum c = continuum_from_metric(m, 4);
    CHECK(validate(c).ok);
    CHECK(c.relation(0).is_full());
    Class b = ball(m, carrier->require("0"), Rational(1, 2), 6);
    CHECK(is_open(c, b, 4));
}

TEST_CASE("the literal ball family is constructible and rejected") {
    CarrierPtr carrier = grid_carrier(RealGrid{3, 1, 1});
    MetricTable m = MetricTable::absdiff(carrier);
    Continuum literal = literal_metric_continuum(m, Rational(1, 2), 3);
    ValidationReport report = validate(literal);
    CHECK_FALSE(report.ok);
    bool reflexivity = false;
    for (const auto& v : report.violations) {
        if (v.condition == "reflexivity") reflexivity = true;
    }
    CHECK(reflexivity); // e < 1 leaves the diagonal out at coarse levels
}

TEST_CASE("invalid metrics cannot derive continua") {
    MetricTable bad = table_metric({"0", "1", "2"}, {{0, 2, 5}, {0, 1, 1}, {1, 2, 1}});
    CHECK_THROWS_AS(continuum_from_metric(bad, 2), Error);
}
