#include "tolspace/error.hpp"
#include "tolspace/figures.hpp"
#include "tolspace/real.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace tolspace;
using oracle::set_of;

TEST_CASE("grid carriers and parameter validation") {
    Continuum grid = real_continuum(RealGrid{4, 2, 3});
    CHECK(grid.carrier_size() == 2 * 2 * 16 + 1);
    CHECK(grid.carrier().numeric());
    CHECK(validate(grid).ok);
    CHECK_THROWS_AS(real_continuum(RealGrid{3, 1, 3}), Error); // needs G >= L+1
    CHECK_THROWS_AS(real_continuum(RealGrid{4, 0, 2}), Error);
}

TEST_CASE("fast grid construction equals the rational evaluation") {
    for (int G = 2; G <= 5; ++G) {
        for (int M = 1; M <= 3; ++M) {
            for (int L = 1; L < G; ++L) {
                Continuum fast = real_continuum(RealGrid{G, M, L});
                Continuum generic = real_continuum_on(grid_carrier(RealGrid{G, M, L}), L);
                CHECK(fast == generic);
            }
        }
    }
}

TEST_CASE("the far branch is inert on narrow grids and merges wide tails") {
    Continuum narrow = real_continuum(RealGrid{4, 2, 3});
    for (int n = 1; n <= 3; ++n) {
        Rational bound = Rational::pow2(-n);
        for (Index i = 0; i < narrow.carrier_size(); ++i) {
            const Class& row = narrow.relation(n).row(i);
            for (auto j = row.find_first(); j != Class::npos; j = row.find_next(j)) {
                CHECK((narrow.carrier().value(i) -
                       narrow.carrier().value(static_cast<Index>(j))).abs() < bound);
            }
        }
    }
    Continuum wide = real_continuum(RealGrid{5, 20, 4});
    CHECK(validate(wide).ok);
    Rational sixteen = Rational::pow2(4);
    Index a = wide.require_position("17");
    Index b = wide.require_position("20");
    CHECK(wide.carrier().value(a) > sixteen);
    CHECK(wide.relation(4).contains(a, b)); // the positive tail is one monad analog
    Index neg = wide.require_position("-17");
    CHECK_FALSE(wide.relation(4).contains(a, neg)); // opposite tails stay apart

    // every grid point beyond 2^L is related to every other on the same side
    Continuum huge = real_continuum(RealGrid{5, 40, 4});
    Class tail(huge.carrier_size());
    for (Index i = 0; i < huge.carrier_size(); ++i) {
        if (huge.carrier().value(i) > sixteen) tail.set(i);
    }
    CHECK(tail.count() > 100);
    for (auto i = tail.find_first(); i != Class::npos; i = tail.find_next(i)) {
        CHECK(tail.is_subset_of(huge.relation(4).row(static_cast<Index>(i))));
    }
}

TEST_CASE("real_eq thresholds") {
    CHECK(real_eq(Rational(0), Rational::pow2(-4), 3));
    CHECK_FALSE(real_eq(Rational(0), Rational::pow2(-3), 3));
    CHECK(real_eq(Rational(100), Rational(200), 3)); // both beyond 2^3
    CHECK_FALSE(real_eq(Rational(100), Rational(-200), 3));
    CHECK(real_eq(Rational(5), Rational(-5), 0)); // level 0 relates everything
}

TEST_CASE("monad arithmetic is representative arithmetic") {
    CHECK(real_add(Rational(1, 2), Rational(1, 3)) == Rational(5, 6));
    CHECK(real_mul(Rational(2, 3), Rational(3, 4)) == Rational(1, 2));
    CHECK(real_neg(Rational(1, 3)) == Rational(-1, 3));
    CHECK(real_le(Rational(1, 3), Rational(1, 2)));
}

TEST_CASE("archimedean witnesses") {
    CHECK(archimedean_witness(Rational(5, 3)) == 2);
    CHECK(archimedean_witness(Rational(-7)) == 0);
    CHECK(archimedean_witness(Rational(1000001, 1000)) == 1001);
    CHECK(archimedean_witness(Rational(0)) == 1);
    CHECK(archimedean_witness(Rational(3)) == 4); // strict inequality
}

TEST_CASE("bisection lub") {
    std::vector<Rational> two = {Rational(1, 3), Rational(1, 2)};
    CHECK(lub(two, Rational(0), Rational(1), 8) == Rational(1, 2));

    std::vector<Rational> third = {Rational(1, 3)};
    Rational got = lub(third, Rational(0), Rational(1), 8);
    CHECK(got == Rational(43, 128)); // hand-simulated bisection
    CHECK(got - Rational(1, 3) == Rational(1, 384));
    CHECK(got - Rational(1, 3) <= Rational::pow2(-8));

    // symmetric bracket closes onto the single member
    for (int iters = 1; iters <= 6; ++iters) {
        Rational q(7, 5);
        Rational r = lub({&q, 1}, q - Rational(1), q + Rational(1), iters);
        CHECK(r >= q);
        CHECK(r - q <= Rational(2) / Rational::pow2(iters));
    }
}

TEST_CASE("lub preconditions carry witnesses") {
    std::vector<Rational> ms = {Rational(2), Rational(1)};
    try {
        lub(ms, Rational(0), Rational(3, 2), 4); // b below the max member
        FAIL("expected a precondition error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::precondition);
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
    CHECK_THROWS_AS(lub(ms, Rational(5), Rational(6), 4), Error); // a already an upper bound
    CHECK_THROWS_AS(lub({}, Rational(0), Rational(1), 4), Error);
}

TEST_CASE("interval constructions on the g4 grid, strict thresholds") {
    Continuum grid = real_continuum(RealGrid{4, 2, 3});
    Rational zero(0), one(1);

    // open (0,1) at level 3: interior erodes one 1/8-layer (minus a step) each side
    Class open_cls = interval(grid, zero, one, IntervalKind::open, 3);
    oracle::IdSet expected_open;
    for (Index i = 0; i < grid.carrier_size(); ++i) {
        const Rational& q = grid.carrier().value(i);
        if (Rational(1, 8) <= q && q <= Rational(7, 8)) expected_open.insert(q.str());
    }
    CHECK(oracle::ids(grid, open_cls) == expected_open);

    // closed [0,1] at level 3 under the strict relation: exactly [0, 1]
    Class closed_cls = interval(grid, zero, one, IntervalKind::closed, 3);
    oracle::IdSet expected_closed;
    for (Index i = 0; i < grid.carrier_size(); ++i) {
        const Rational& q = grid.carrier().value(i);
        if (zero <= q && q <= one) expected_closed.insert(q.str());
    }
    CHECK(oracle::ids(grid, closed_cls) == expected_closed);

    // the two half-open routes differ by exactly the kept endpoint's monad fringe
    auto [left1, left2] = interval_constructions(grid, zero, one, IntervalKind::half_open_left, 3);
    CHECK(left1 != left2);
    CHECK(left1.is_subset_of(left2));
    CHECK((left1 | grid.image(grid.require_position("1"), 3)) == left2);
    Class diff = left2 - left1;
    CHECK(diff.count() == 1);
    CHECK(grid.carrier().at(static_cast<Index>(diff.find_first())).id == "17/16");

    auto [right1, right2] =
        interval_constructions(grid, zero, one, IntervalKind::half_open_right, 3);
    CHECK((right1 | grid.image(grid.require_position("0"), 3)) == right2);

    CHECK_THROWS_AS(interval(grid, one, zero, IntervalKind::open, 3), Error);
    CHECK_THROWS_AS(interval(grid, Rational(1, 3), one, IntervalKind::open, 3), Error);
}
