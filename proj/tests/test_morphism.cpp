#include "tolspace/error.hpp"
#include "tolspace/figures.hpp"
#include "tolspace/fixtures.hpp"
#include "tolspace/morphism.hpp"
#include "tolspace/real.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace tolspace;

namespace {

ContinuumPtr grid_ptr(int g, long long m, int l) {
    return std::make_shared<Continuum>(real_continuum(RealGrid{g, m, l}));
}

} // namespace

TEST_CASE("morphism construction enforces totality and target membership") {
    auto src = grid_ptr(3, 1, 2);
    auto dst = grid_ptr(3, 1, 2);
    CHECK_THROWS_AS(make_morphism(src, dst, std::vector<Index>(3, 0)), Error); // not total
    CHECK_THROWS_AS(make_affine(src, dst, Rational(2), Rational(0)), Error);   // 2x leaves M=1
    CHECK_NOTHROW(make_affine(src, grid_ptr(2, 2, 1), Rational(2), Rational(0)));
    CHECK_THROWS_AS(make_affine(src, dst, Rational(1), Rational(1, 3)), Error); // off the grid
}

TEST_CASE("doubling moduli on the G=6 grids") {
    auto src = grid_ptr(6, 1, 5);
    auto dst = grid_ptr(6, 2, 4);
    MorphismTable dbl = make_affine(src, dst, Rational(2), Rational(0));
    for (int k = 1; k <= 4; ++k) {
        CHECK(preserves_at(dbl, k + 1, k));
        CHECK_FALSE(preserves_at(dbl, k, k)); // a pair just under 2^-k doubles past it
    }
    ModulusTable table = modulus(dbl);
    REQUIRE(table.least_source_level.size() == 5);
    CHECK(table.least_source_level[0] == 0);
    for (int k = 1; k <= 4; ++k) {
        CHECK(table.least_source_level[static_cast<std::size_t>(k)] == k + 1);
    }
    CHECK(is_uniformly_continuous(dbl));

    MorphismTable ident = make_identity(src);
    CHECK(preserves_at(ident, 3, 3));
    ModulusTable id_table = modulus(ident);
    for (std::size_t k = 0; k < id_table.least_source_level.size(); ++k) {
        CHECK(id_table.least_source_level[k] == static_cast<int>(k));
    }
}

TEST_CASE("the step morphism smooths values at monad granularity") {
    auto grid = grid_ptr(5, 1, 3);
    MorphismTable step = step_morphism(grid);
    const Carrier& carrier = grid->carrier();
    CHECK(carrier.at(step.apply(carrier.require("0"))).id == "1");
    CHECK(carrier.at(step.apply(carrier.require("1/2"))).id == "0");
    CHECK(carrier.at(step.apply(carrier.require("1/16"))).id == "1"); // 2^-(L+1), G > L
    CHECK(carrier.at(step.apply(carrier.require("-3/32"))).id == "1");
    CHECK(carrier.at(step.apply(carrier.require("1/8"))).id == "0"); // the cutoff is strict

    ModulusTable table = modulus(step);
    CHECK_FALSE(table.least_source_level[1].has_value()); // none at k=1
    CHECK_FALSE(is_uniformly_continuous(step));
}

TEST_CASE("connectedness preservation is edgewise") {
    auto src = grid_ptr(6, 1, 5);
    auto dst = grid_ptr(6, 2, 4);
    MorphismTable dbl = make_affine(src, dst, Rational(2), Rational(0));
    for (int k = 1; k <= 4; ++k) {
        CHECK(preserves_connected(dbl, k + 1, k).ok);
    }

    auto grid = grid_ptr(5, 1, 3);
    MorphismTable step = step_morphism(grid);
    ConnectednessCheck check = preserves_connected(step, 3, 3);
    CHECK_FALSE(check.ok);
    REQUIRE(check.witness_edge.has_value());
    auto [x, y] = *check.witness_edge;
    CHECK(grid->relation(3).contains(x, y));
    Rational fx = grid->carrier().value(step.apply(x));
    Rational fy = grid->carrier().value(step.apply(y));
    CHECK((fx - fy).abs() == Rational(1)); // the values jump across the cutoff

    // a constant table preserves everything
    std::vector<Index> constant(grid->carrier_size(), grid->require_position("0"));
    MorphismTable flat = make_morphism(grid, grid, constant);
    CHECK(preserves_connected(flat, 3, 3).ok);
}

TEST_CASE("pushing motions") {
    auto src = grid_ptr(3, 1, 2);
    auto dst = grid_ptr(2, 2, 1);
    MorphismTable dbl = make_affine(src, dst, Rational(2), Rational(0));
    Motion m{{src->require_position("0"), src->require_position("1/8"),
              src->require_position("1/4")},
             2};
    PushResult pushed = push_motion(dbl, m, 1);
    CHECK(pushed.ok);
    REQUIRE(pushed.image.steps.size() == 3);
    CHECK(dst->carrier().at(pushed.image.steps[1]).id == "1/4");

    MorphismTable ident = make_identity(src);
    Motion constant{{src->require_position("1"), src->require_position("1")}, 2};
    CHECK(push_motion(ident, constant, 2).ok);

    auto grid = grid_ptr(5, 1, 3);
    MorphismTable step = step_morphism(grid);
    std::vector<Index> walk;
    for (Index i = 0; i < grid->carrier_size(); ++i) walk.push_back(i);
    PushResult failed = push_motion(step, Motion{walk, 3}, 3);
    CHECK_FALSE(failed.ok);
    REQUIRE(failed.failed_step.has_value());
    // the failing step straddles the value jump
    Index before = failed.image.steps[*failed.failed_step];
    Index after = failed.image.steps[*failed.failed_step + 1];
    CHECK((grid->carrier().value(before) - grid->carrier().value(after)).abs() == Rational(1));

    Motion not_a_motion{{src->require_position("0"), src->require_position("1")}, 2};
    CHECK_THROWS_AS(push_motion(dbl, not_a_motion, 1), Error);
}

TEST_CASE("preimage checks over interior and closure images") {
    auto h1 = grid_ptr(3, 1, 2);
    MorphismTable ident = make_identity(h1);
    CHECK(preimage_open_check(ident, 1, 1).ok);
    CHECK(preimage_closed_check(ident, 1, 1).ok);

    auto h2 = grid_ptr(2, 2, 1);
    MorphismTable dbl = make_affine(h1, h2, Rational(2), Rational(0));
    CHECK(preimage_open_check(dbl, 2, 1).ok);
    CHECK(preimage_closed_check(dbl, 2, 1).ok);

    MorphismTable step = step_morphism(h1);
    PreimageCheck open_check = preimage_open_check(step, 1, 1);
    CHECK_FALSE(open_check.ok);
    REQUIRE(open_check.witness.has_value());
    // the witness really is an interior image whose preimage is not one
    CHECK(is_interior_image(*h1, *open_check.witness, 1));
    CHECK_FALSE(preimage_closed_check(step, 1, 1).ok);
}

TEST_CASE("image families equal their stability characterizations") {
    // is_interior_image must accept exactly {interior(Y,n) : Y}, and
    // is_closure_image exactly {closure(Y,n) : Y}; checked by enumeration
    auto fixtures_list = {fixtures::e1(), fixtures::e2(), fixtures::nested_partition_space()};
    for (const auto& c : fixtures_list) {
        const std::size_t n = c->carrier_size();
        if (n > 6) continue;
        for (int lvl = 0; lvl <= c->max_level(); ++lvl) {
            std::set<Class> interiors, closures;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                Class y(n);
                for (std::size_t i = 0; i < n; ++i) {
                    if (mask & (std::uint64_t{1} << i)) y.set(i);
                }
                interiors.insert(interior(*c, y, lvl));
                closures.insert(closure(*c, y, lvl));
            }
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                Class x(n);
                for (std::size_t i = 0; i < n; ++i) {
                    if (mask & (std::uint64_t{1} << i)) x.set(i);
                }
                CHECK(is_interior_image(*c, x, lvl) == (interiors.count(x) == 1));
                CHECK(is_closure_image(*c, x, lvl) == (closures.count(x) == 1));
            }
        }
    }
}

TEST_CASE("function equality at a level") {
    auto src = grid_ptr(5, 1, 3);
    auto dst = grid_ptr(5, 2, 3);
    int k = 2;
    MorphismTable f = make_affine(src, dst, Rational(1), Rational(0));
    MorphismTable g = make_affine(src, dst, Rational(1), Rational::pow2(-(k + 1)));
    CHECK(functions_equal_at(f, g, k));
    CHECK_FALSE(functions_equal_at(f, g, k + 2));
    CHECK(functions_equal_at(f, f, 3));

    MorphismTable step = step_morphism(src);
    std::vector<Index> zeros(src->carrier_size(), src->require_position("0"));
    MorphismTable flat = make_morphism(src, src, zeros);
    CHECK_FALSE(functions_equal_at(step, flat, 1)); // the step jumps by a full unit
}

TEST_CASE("epsilon delta over the level thresholds") {
    auto h1 = grid_ptr(3, 1, 2);
    MetricTable m1 = MetricTable::absdiff(h1->carrier_ptr());

    auto src = grid_ptr(4, 1, 3);
    auto dst = grid_ptr(4, 2, 3);
    MetricTable ms = MetricTable::absdiff(src->carrier_ptr());
    MetricTable md = MetricTable::absdiff(dst->carrier_ptr());
    MorphismTable dbl = make_affine(src, dst, Rational(2), Rational(0));
    std::vector<Rational> eps = {Rational(1, 4)};
    EpsilonDeltaResult r = epsilon_delta_check(dbl, ms, md, eps);
    CHECK(r.ok);
    REQUIRE(r.per_sample.size() == 1);
    CHECK(r.per_sample[0].second == Rational(1, 8)); // the first threshold that works

    MorphismTable ident = make_identity(src);
    std::vector<Rational> eps2 = {Rational(1, 2), Rational(1, 8)};
    CHECK(epsilon_delta_check(ident, ms, ms, eps2).ok);

    MorphismTable step = step_morphism(h1);
    std::vector<Rational> eps3 = {Rational(1, 2)};
    EpsilonDeltaResult sr = epsilon_delta_check(step, m1, m1, eps3);
    CHECK_FALSE(sr.ok);
    CHECK_FALSE(sr.per_sample[0].second.has_value());

    std::vector<Rational> bad = {Rational(0)};
    CHECK_THROWS_AS(epsilon_delta_check(ident, ms, ms, bad), Error); // epsilons are positive
}
