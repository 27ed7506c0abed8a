#include "tolspace/connectivity.hpp"
#include "tolspace/error.hpp"
#include "tolspace/figures.hpp"
#include "tolspace/fixtures.hpp"
#include "tolspace/real.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace tolspace;
using oracle::set_of;

namespace {

Class cls(const Continuum& c, std::initializer_list<const char*> names) {
    Class out(c.carrier_size());
    for (const char* n : names) out.set(c.carrier().require(n));
    return out;
}

SequencePrefix seq(const Continuum& c, std::initializer_list<const char*> names) {
    SequencePrefix out;
    for (const char* n : names) out.push_back(c.require_position(n));
    return out;
}

} // namespace

TEST_CASE("motions check consecutive pairs") {
    auto e1 = fixtures::e1();
    CHECK(is_motion(*e1, seq(*e1, {"0", "1", "2"}), 2));
    CHECK_FALSE(is_motion(*e1, seq(*e1, {"0", "2"}), 2));
    CHECK(is_motion(*e1, seq(*e1, {"0", "2"}), 1));
    CHECK(is_motion(*e1, seq(*e1, {"3"}), 2));
    Motion m{seq(*e1, {"0", "1", "2", "1"}), 2};
    CHECK(oracle::ids(*e1, trace(*e1, m)) == set_of({"0", "1", "2"}));
}

TEST_CASE("connectivity matches the BFS oracle") {
    auto e1 = fixtures::e1();
    CHECK(is_connected_set(*e1, cls(*e1, {"0", "1", "2"}), 2));
    CHECK_FALSE(is_connected_set(*e1, cls(*e1, {"0", "2"}), 2));
    CHECK(is_connected_set(*e1, cls(*e1, {"0", "2"}), 1));
    CHECK(is_connected_set(*e1, cls(*e1, {"3"}), 2));
    CHECK(is_connected_set(*e1, e1->carrier().empty_class(), 2)); // by convention

    for (std::uint64_t mask = 0; mask < 32; ++mask) {
        Class u(5);
        oracle::IdSet names;
        for (Index i = 0; i < 5; ++i) {
            if (mask & (1u << i)) {
                u.set(i);
                names.insert(e1->carrier().at(i).id);
            }
        }
        for (int n = 0; n <= 2; ++n) {
            CHECK(is_connected_set(*e1, u, n) == oracle::connected(*e1, names, n));
        }
    }
}

TEST_CASE("components split e2 and keep e1 whole") {
    auto e2 = fixtures::e2();
    auto parts = components(*e2, e2->carrier().full_class(), 2);
    REQUIRE(parts.size() == 2);
    CHECK(oracle::ids(*e2, parts[0]) == set_of({"0", "1"}));
    CHECK(oracle::ids(*e2, parts[1]) == set_of({"10", "11"}));

    auto e1 = fixtures::e1();
    CHECK(components(*e1, e1->carrier().full_class(), 2).size() == 1);
    CHECK(components(*e1, e1->carrier().empty_class(), 2).empty());
}

TEST_CASE("motion_through walks exactly the class") {
    auto e1 = fixtures::e1();
    Class u = cls(*e1, {"0", "1", "2"});
    Motion m = motion_through(*e1, u, 2);
    CHECK(is_motion(*e1, m.steps, 2));
    CHECK(trace(*e1, m) == u);
    CHECK(m.steps.size() <= 2 * u.count());

    Motion single = motion_through(*e1, cls(*e1, {"3"}), 2);
    CHECK(single.steps == std::vector<Index>{e1->require_position("3")});

    Class spread = cls(*e1, {"0", "2", "4"});
    Motion wide = motion_through(*e1, spread, 1);
    CHECK(is_motion(*e1, wide.steps, 1));
    CHECK(trace(*e1, wide) == spread);

    // the error names a violating bipartition
    try {
        motion_through(*e1, cls(*e1, {"0", "4"}), 2);
        FAIL("expected a precondition error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::precondition);
        std::string msg = e.what();
        CHECK(msg.find("{0}") != std::string::npos);
        CHECK(msg.find("{4}") != std::string::npos);
    }
}

TEST_CASE("greedy nets in canonical order") {
    auto e1 = fixtures::e1();
    Net net = maximal_net(*e1, e1->carrier().full_class(), 2);
    CHECK(oracle::ids(*e1, net.members) == set_of({"0", "2", "4"}));
    CHECK(net.members == oracle::from_ids(*e1, oracle::greedy_net(
                                                   *e1, oracle::ids(*e1, e1->carrier().full_class()), 2)));
    CHECK(net.maximal);

    Net full = maximal_net(*e1, e1->carrier().full_class(), 0);
    CHECK(oracle::ids(*e1, full.members) == set_of({"0"}));

    auto e2 = fixtures::e2();
    Net far = maximal_net(*e2, e2->carrier().full_class(), 2);
    CHECK(oracle::ids(*e2, far.members) == set_of({"0", "10"}));
}

TEST_CASE("cluster positions count prefix terms per net zone") {
    auto e1 = fixtures::e1();
    ClusterPosition a = cluster_position(*e1, seq(*e1, {"0", "1", "0", "1", "0"}), 2);
    CHECK(e1->carrier().at(a.member).id == "0");
    CHECK(a.count == 5); // Z_2(0) = {0,1} holds every term
    ClusterPosition b = cluster_position(*e1, seq(*e1, {"4", "4", "4"}), 2);
    CHECK(b.count == 3);
    ClusterPosition d = cluster_position(*e1, seq(*e1, {"0", "4", "0", "4"}), 2);
    CHECK(d.count == 2);
    CHECK_THROWS_AS(cluster_position(*e1, {}, 2), Error);
}

TEST_CASE("accumulation and isolation on the dyadic grid") {
    Continuum grid = real_continuum(RealGrid{6, 1, 4});
    Class a(grid.carrier_size());
    for (const char* q : {"1/2", "1/4", "1/8", "1/16", "1/32", "0"}) {
        a.set(grid.require_position(q));
    }
    Class acc = accumulation_points(grid, a, 4);
    CHECK(acc.test(grid.require_position("0"))); // 1/32 sits inside every Z_n(0)
    Class iso = isolation_points(grid, a, 3);
    CHECK(iso.test(grid.require_position("1/2"))); // Z_3(1/2) meets no other member
    CHECK_FALSE(accumulation_points(grid, a, 3).test(grid.require_position("1/2")));
}

TEST_CASE("every position accumulates in a crowded class") {
    auto e1 = fixtures::e1();
    Class everything = e1->carrier().full_class();
    Class acc = accumulation_points(*e1, everything, 2);
    CHECK(acc == everything); // every Z_2(x) holds a distinct neighbor
}

TEST_CASE("convergence depth certified by tails") {
    Continuum grid = real_continuum(RealGrid{9, 1, 8});
    SequencePrefix terms;
    for (int i = 1; i <= 9; ++i) {
        terms.push_back(grid.require_position(Rational(1, 1LL << i).str()));
    }
    CHECK(converges_to(grid, terms, grid.require_position("0")) == 8);
    CHECK(tails_in_neighborhoods(grid, terms, grid.require_position("0"), 8));

    auto e1 = fixtures::e1();
    SequencePrefix constant = seq(*e1, {"3", "3", "3"});
    CHECK(converges_to(*e1, constant, e1->require_position("3")) == 2);

    SequencePrefix alternating = seq(*e1, {"0", "4", "0", "4"});
    CHECK(converges_to(*e1, alternating, e1->require_position("0")) == 0);
    CHECK_FALSE(tails_in_neighborhoods(*e1, alternating, e1->require_position("0"), 1));
    CHECK(tails_in_neighborhoods(*e1, alternating, e1->require_position("0"), 0));
}
