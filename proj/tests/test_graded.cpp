#include "tolspace/error.hpp"
#include "tolspace/fixtures.hpp"
#include "tolspace/graded.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace tolspace;
using oracle::set_of;

TEST_CASE("union of pi image families is pointwise") {
    auto e1 = fixtures::e1();
    GradedClass a = image_family(*e1, e1->require_position("0"));
    GradedClass b = image_family(*e1, e1->require_position("4"));
    GradedClass u = a.union_with(b);
    CHECK(u.kind() == GradedKind::pi);
    CHECK(oracle::ids(*e1, u.eval(0)) == set_of({"0", "1", "2", "3", "4"}));
    CHECK(oracle::ids(*e1, u.eval(1)) == set_of({"0", "1", "2", "3", "4"}));
    CHECK(oracle::ids(*e1, u.eval(2)) == set_of({"0", "1", "3", "4"}));
}

TEST_CASE("intersection with itself is the identity") {
    auto e1 = fixtures::e1();
    GradedClass a = image_family(*e1, e1->require_position("2"));
    CHECK(a.intersect_with(a) == a);
}

TEST_CASE("complements flip the kind and stack into sigma unions") {
    auto e1 = fixtures::e1();
    GradedClass a = image_family(*e1, e1->require_position("0"));
    GradedClass comp = a.complement();
    CHECK(comp.kind() == GradedKind::sigma);
    CHECK(oracle::ids(*e1, comp.eval(0)) == set_of({}));
    CHECK(oracle::ids(*e1, comp.eval(1)) == set_of({"3", "4"}));
    CHECK(oracle::ids(*e1, comp.eval(2)) == set_of({"2", "3", "4"}));
    CHECK(comp.complement() == a);

    GradedClass other = image_family(*e1, e1->require_position("4")).complement();
    GradedClass sigma_union = comp.union_with(other);
    CHECK(sigma_union.kind() == GradedKind::sigma);
    for (int n = 0; n <= 2; ++n) {
        CHECK(sigma_union.eval(n) == (comp.eval(n) | other.eval(n)));
    }
}

TEST_CASE("products and domains") {
    Class sing(1);
    sing.set(0);
    GradedClass a = GradedClass::pi({sing, sing, sing});
    GradedClass b = GradedClass::pi({sing, sing, sing});
    GradedClass prod = a.product_with(b);
    REQUIRE(prod.pair_shape().has_value());
    CHECK(prod.universe() == 1);
    for (int n = 0; n <= 2; ++n) CHECK(prod.eval(n).count() == 1);

    auto e1 = fixtures::e1();
    GradedClass left = image_family(*e1, e1->require_position("0"));
    GradedClass right = image_family(*e1, e1->require_position("4"));
    GradedClass dom = left.product_with(right).domain();
    for (int n = 0; n <= 2; ++n) {
        // domain of the product is the left side while the right is nonempty
        CHECK(dom.eval(n) == left.eval(n));
    }

    Class none(3);
    GradedClass empty_family = GradedClass::sigma({none, none});
    GradedClass dom_empty = empty_family.product_with(empty_family).domain();
    CHECK(dom_empty.eval(0).none());
    CHECK(dom_empty.eval(1).none());

    CHECK_THROWS_AS(left.domain(), Error); // not a pair universe
}

TEST_CASE("eval bounds and limits") {
    auto e1 = fixtures::e1();
    GradedClass fam = closure_family(*e1, e1->carrier().make_class(std::vector<std::string>{"0"}));
    CHECK(fam.eval(0) == e1->carrier().full_class());
    CHECK(oracle::ids(*e1, fam.limit()) == set_of({"0", "1"}));
    CHECK_THROWS_AS(fam.eval(3), Error);
    CHECK_THROWS_AS(fam.eval(-1), Error);
    GradedClass comp = fam.complement();
    CHECK(oracle::ids(*e1, comp.limit()) == set_of({"2", "3", "4"}));
}

TEST_CASE("kind and monotonicity are enforced") {
    Class a(3), b(3);
    a.set(0);
    b.set(0);
    b.set(1);
    CHECK_THROWS_AS(GradedClass::pi({a, b}), Error);    // ascending is not pi
    CHECK_THROWS_AS(GradedClass::sigma({b, a}), Error); // descending is not sigma
    GradedClass pi_ok = GradedClass::pi({b, a});
    GradedClass sigma_ok = GradedClass::sigma({a, b});
    CHECK_THROWS_AS(pi_ok.union_with(sigma_ok), Error); // kind mismatch
}
