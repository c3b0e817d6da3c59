#include <doctest.h>

#include "fixtures.hpp"
#include "sml/instance.hpp"

using namespace sml;

TEST_CASE("instance construction validates products") {
    CHECK_THROWS_AS(Instance({{"a", 1, 1.0, 0.0}}, 1.0), DomainError);  // utility must be > 0
    CHECK_THROWS_AS(Instance({{"a", 1, 1.0, -2.0}}, 1.0), DomainError);
    CHECK_THROWS_AS(Instance({{"a", 1, -1.0, 1.0}}, 1.0), DomainError); // revenue must be >= 0
    CHECK_THROWS_AS(Instance({{"a", 0, 1.0, 1.0}}, 1.0), DomainError);  // level must be >= 1
    CHECK_THROWS_AS(Instance({{"", 1, 1.0, 1.0}}, 1.0), DomainError);
    CHECK_THROWS_AS(Instance({{"a", 1, 1.0, 1.0}, {"a", 2, 1.0, 1.0}}, 1.0), DomainError);
    CHECK_THROWS_AS(Instance({{"a", 1, 1.0, 1.0}}, -0.5), DomainError); // u0 must be >= 0
    CHECK_NOTHROW(Instance({{"a", 1, 0.0, 1.0}}, 0.0)); // zero revenue and zero u0 are legal
}

TEST_CASE("canonical level order sorts by revenue desc then id asc") {
    Instance inst({{"c", 1, 5.0, 1.0},
                   {"a", 1, 5.0, 1.0},
                   {"b", 1, 7.0, 1.0},
                   {"z", 2, 1.0, 1.0}},
                  1.0);
    const auto& order = inst.level_order(1);
    REQUIRE(order.size() == 3);
    CHECK(inst[order[0]].id == "b"); // highest revenue first
    CHECK(inst[order[1]].id == "a"); // tie at 5.0 broken by id
    CHECK(inst[order[2]].id == "c");
    CHECK(inst.level_order(2).size() == 1);
    CHECK(inst.level_order(3).empty());
    CHECK(inst.levels() == std::vector<int>{1, 2});
    CHECK(inst.two_level());
    CHECK(inst.max_level() == 2);
}

TEST_CASE("id order and lookup") {
    Instance inst = fixtures::example3();
    const auto& order = inst.id_order();
    REQUIRE(order.size() == 3);
    CHECK(inst[order[0]].id == "x11");
    CHECK(inst[order[1]].id == "x21");
    CHECK(inst[order[2]].id == "x22");
    CHECK(inst.contains("x21"));
    CHECK_FALSE(inst.contains("nope"));
    CHECK_THROWS_AS(inst.index_of("nope"), InvalidAssortmentError);
    CHECK(inst.product("x22").utility == 3.0);
}

TEST_CASE("empty instance") {
    Instance inst;
    CHECK(inst.empty());
    CHECK(inst.two_level());
    CHECK(inst.max_level() == 0);
    CHECK(inst.levels().empty());
}

TEST_CASE("assortment is a sorted deduplicated id set") {
    Assortment a({"b", "a", "b", "c"});
    CHECK(a.ids() == std::vector<ProductId>{"a", "b", "c"});
    CHECK(a.size() == 3);
    CHECK(a.contains("b"));
    CHECK_FALSE(a.contains("d"));

    Assortment sub{"a", "c"};
    CHECK(sub.subset_of(a));
    CHECK_FALSE(a.subset_of(sub));
    CHECK(Assortment{}.subset_of(sub));
    CHECK(Assortment{} == Assortment{});
}

TEST_CASE("assortment from indices") {
    Instance inst = fixtures::example3();
    Assortment a = Assortment::from_indices(inst, {2, 0});
    CHECK(a == Assortment{"x11", "x22"});
}

TEST_CASE("probability clamps noise and rejects junk") {
    CHECK(Probability(1.0 + 1e-12).value() == 1.0);
    CHECK(Probability(-1e-12).value() == 0.0);
    CHECK(Probability(0.25).value() == 0.25);
    CHECK_THROWS_AS(Probability(1.1), DomainError);
    CHECK_THROWS_AS(Probability(-0.1), DomainError);
}
