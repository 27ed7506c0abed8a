#include "tolspace/continuum.hpp"
#include "tolspace/error.hpp"
#include "tolspace/fixtures.hpp"
#include "tolspace/real.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace tolspace;
using oracle::set_of;

TEST_CASE("validate accepts e1 and reports ok iff no violations") {
    auto e1 = fixtures::e1();
    ValidationReport report = validate(*e1);
    CHECK(report.ok);
    CHECK(report.violations.empty());
}

TEST_CASE("validate flags a missing symmetric pair with its witness") {
    auto e1 = fixtures::e1();
    std::vector<Relation> levels = e1->levels();
    // remove (1,0) while keeping (0,1)
    Relation broken(e1->carrier_size());
    for (Index i = 0; i < e1->carrier_size(); ++i) {
        for (Index j = 0; j < e1->carrier_size(); ++j) {
            if (levels[1].contains(i, j) && !(i == 1 && j == 0)) broken.set(i, j);
        }
    }
    levels[1] = broken;
    ValidationReport report = validate(e1->carrier(), levels);
    CHECK_FALSE(report.ok);
    bool found = false;
    for (const auto& v : report.violations) {
        if (v.condition == "symmetry" && v.level == 1) {
            CHECK(v.witness == std::vector<std::string>{"0", "1"});
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("the literal far-branch family fails composition at (0,48,8), n=3") {
    std::vector<Rational> values = {Rational(0), Rational(8), Rational(48)};
    Continuum literal = literal_real_continuum_on(make_numeric_carrier(values), 4);
    ValidationReport report = validate(literal);
    CHECK_FALSE(report.ok);
    bool found = false;
    for (const auto& v : report.violations) {
        if (v.condition == "composition" && v.level == 3) {
            CHECK(v.witness == std::vector<std::string>{"0", "48", "8"});
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("malformed input is an error, not a validation failure") {
    auto e1 = fixtures::e1();
    CHECK_THROWS_AS(validate(e1->carrier(), {}), Error);
    std::vector<Relation> wrong_size = {Relation::full(3), Relation::full(3)};
    CHECK_THROWS_AS(validate(e1->carrier(), wrong_size), Error);
}

TEST_CASE("image examples on e1") {
    auto e1 = fixtures::e1();
    CHECK(oracle::ids(*e1, e1->image(e1->require_position("1"), 2)) == oracle::image(*e1, "1", 2));
    CHECK(oracle::ids(*e1, e1->image(e1->require_position("1"), 2)) == set_of({"0", "1", "2"}));
    CHECK(e1->image(e1->require_position("0"), 0) == e1->carrier().full_class());
    CHECK(oracle::ids(*e1, e1->image(e1->require_position("4"), 1)) == set_of({"2", "3", "4"}));
    CHECK_THROWS_AS(e1->image(99, 1), Error);
    CHECK_THROWS_AS(e1->image(0, 3), Error);
    CHECK_THROWS_AS(e1->image(0, -1), Error);
}

TEST_CASE("level figure examples on e1") {
    auto e1 = fixtures::e1();
    Class x0 = e1->carrier().make_class(std::vector<std::string>{"0"});
    CHECK(oracle::ids(*e1, e1->level_figure(x0, 2)) == set_of({"0", "1"}));
    CHECK(e1->level_figure(e1->carrier().empty_class(), 1).none());
    Class x04 = e1->carrier().make_class(std::vector<std::string>{"0", "4"});
    CHECK(e1->level_figure(x04, 1) == e1->carrier().full_class());
    // oracle agreement on every subset
    for (std::uint64_t mask = 0; mask < 32; ++mask) {
        Class x(e1->carrier_size());
        oracle::IdSet names;
        for (Index i = 0; i < 5; ++i) {
            if (mask & (1u << i)) {
                x.set(i);
                names.insert(e1->carrier().at(i).id);
            }
        }
        for (int n = 0; n <= 2; ++n) {
            CHECK(oracle::ids(*e1, e1->level_figure(x, n)) == oracle::level_figure(*e1, names, n));
        }
    }
}

TEST_CASE("monads come from the limit partition") {
    auto e1 = fixtures::e1();
    CHECK(oracle::ids(*e1, e1->monad(e1->require_position("2"))) == set_of({"2"}));
    auto e1p = fixtures::e1_partitioned();
    CHECK(oracle::ids(*e1p, e1p->monad(e1p->require_position("0"))) == set_of({"0", "1"}));
    CHECK(oracle::ids(*e1p, e1p->monad(e1p->require_position("4"))) == set_of({"3", "4"}));
}

TEST_CASE("cluster partition on a sparse numeric carrier") {
    std::vector<Rational> values = {Rational(0),      Rational(1, 64), Rational(63, 64),
                                    Rational(1),      Rational(65, 64), Rational(2)};
    auto c = std::make_shared<Continuum>(real_continuum_on(make_numeric_carrier(values), 4));
    Partition p = cluster_partition(*c, 4);
    Continuum with_blocks(c->carrier_ptr(), c->levels(), p);
    CHECK(oracle::ids(with_blocks, with_blocks.monad(with_blocks.require_position("0"))) ==
          set_of({"0", "1/64"}));
    CHECK(oracle::ids(with_blocks, with_blocks.monad(with_blocks.require_position("1"))) ==
          set_of({"63/64", "1", "65/64"}));
    CHECK(oracle::ids(with_blocks, with_blocks.monad(with_blocks.require_position("2"))) ==
          set_of({"2"}));
}

TEST_CASE("partition blocks must be related at every level") {
    auto e1 = fixtures::e1();
    // {0, 2} is not an R_2 pair, so it cannot be a monad
    CHECK_THROWS_AS(Continuum(e1->carrier_ptr(), e1->levels(),
                              Partition::from_blocks(5, {{0, 2}})),
                    Error);
    CHECK_NOTHROW(Continuum(e1->carrier_ptr(), e1->levels(),
                            Partition::from_blocks(5, {{0, 1}, {3, 4}})));
}

TEST_CASE("total disconnection means every level is transitive") {
    CHECK_FALSE(fixtures::e1()->is_totally_disconnected()); // (0,1),(1,2) in R_2, (0,2) not
    CHECK(fixtures::e2()->is_totally_disconnected());
    CHECK(fixtures::nested_partition_space()->is_totally_disconnected());
}

TEST_CASE("nesting holds on validated continua") {
    for (const auto& [name, c] : fixtures::shipped_continua()) {
        INFO(name);
        for (int n = 0; n < c->max_level(); ++n) {
            CHECK(c->relation(n + 1).is_subset_of(c->relation(n)));
        }
    }
}

TEST_CASE("monad discernibility side condition") {
    CHECK(monad_discernibility_failure(*fixtures::e2_partitioned()) == std::nullopt);
    CHECK(monad_discernibility_failure(*fixtures::nested_partition_space()) == std::nullopt);
    auto failure = monad_discernibility_failure(*fixtures::e1());
    REQUIRE(failure.has_value());
    // adjacent singletons are related at every level
    CHECK(fixtures::e1()->relation(2).contains(failure->first, failure->second));
}
