#include <doctest.h>

#include "grconv/group.hpp"

using namespace grconv;

namespace {

int index_of_name(const GroupPtr& g, const std::string& nm) {
    for (int i = 0; i < g->order(); ++i)
        if (g->element_name(i) == nm) return i;
    return -1;
}

void check_group_axioms(const GroupPtr& g) {
    int n = g->order();
    for (int i = 0; i < n; ++i) {
        CHECK(g->mul(0, i) == i);
        CHECK(g->mul(i, 0) == i);
        CHECK(g->mul(i, g->inverse(i)) == 0);
        CHECK(g->mul(g->inverse(i), i) == 0);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                CHECK(g->mul(g->mul(i, j), k) == g->mul(i, g->mul(j, k)));
}

}  // namespace

TEST_CASE("cyclic groups") {
    auto c4 = Group::cyclic(4);
    CHECK(c4->mul(1, 3) == 0);  // a * a^3 = 1
    CHECK(c4->element_name(0) == "1");
    CHECK(c4->element_name(2) == "a^2");
    auto c2 = Group::cyclic(2);
    CHECK(c2->order() == 2);
    CHECK(c2->element_name(1) == "a");
}

TEST_CASE("S3 follows the fixed listing and composition") {
    auto s3 = Group::symmetric(3);
    std::vector<std::string> names = {"1", "(12)", "(13)", "(23)", "(123)", "(132)"};
    for (int i = 0; i < 6; ++i) CHECK(s3->element_name(i) == names[i]);

    // (12)*(13): apply (13) first, then (12); oracle composed by hand on points
    // 1->3->3, 2->2->1, 3->1->2, i.e. (132)
    GroupElement x{s3, 1}, y{s3, 2};
    CHECK(s3->element_name(g_mul(x, y).index) == "(132)");

    // full multiplication table in the form M[i][j] = listing[i]^-1 listing[j]
    std::vector<std::vector<std::string>> printed = {
        {"1", "(12)", "(13)", "(23)", "(123)", "(132)"},
        {"(12)", "1", "(132)", "(123)", "(23)", "(13)"},
        {"(13)", "(123)", "1", "(132)", "(12)", "(23)"},
        {"(23)", "(132)", "(123)", "1", "(13)", "(12)"},
        {"(132)", "(23)", "(12)", "(13)", "1", "(123)"},
        {"(123)", "(13)", "(23)", "(12)", "(132)", "1"},
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            CHECK(s3->element_name(s3->mul(s3->inverse(i), j)) == printed[i][j]);
}

TEST_CASE("direct products") {
    auto g = Group::parse("C4xC2");
    CHECK(g->order() == 8);
    int a = g->generators().at("a");
    int h = g->generators().at("h");
    CHECK(g->element_name(g->mul(a, h)) == "ha");  // componentwise product
    CHECK(g->mul(a, h) == g->mul(h, a));
    // the C2 part indexes the blocks: listing runs 1, a, a^2, a^3, h, ha, ...
    CHECK(g->element_name(0) == "1");
    CHECK(g->element_name(1) == "a");
    CHECK(g->element_name(4) == "h");
    CHECK(g->element_name(5) == "ha");

    auto c2c2 = Group::parse("C2xC2");
    CHECK(c2c2->element_name(1) == "a");
    CHECK(c2c2->element_name(2) == "b");
    CHECK(c2c2->element_name(3) == "ba");

    auto c3c3 = Group::parse("C3xC3");
    CHECK(c3c3->order() == 9);
    CHECK(index_of_name(c3c3, "g") == 1);
    CHECK(index_of_name(c3c3, "h") == 3);
}

TEST_CASE("group axioms hold exhaustively for every instantiated group") {
    check_group_axioms(Group::cyclic(4));
    check_group_axioms(Group::cyclic(14));
    check_group_axioms(Group::symmetric(3));
    check_group_axioms(Group::symmetric(4));
    check_group_axioms(Group::parse("C4xC2"));
    check_group_axioms(Group::parse("C2xC2"));
    check_group_axioms(Group::parse("C3xC3"));
}

TEST_CASE("abelianness and errors") {
    CHECK(Group::cyclic(6)->is_abelian());
    CHECK(!Group::symmetric(3)->is_abelian());
    CHECK_THROWS_AS(Group::symmetric(5), std::invalid_argument);
    CHECK_THROWS_AS(Group::parse("D4"), std::invalid_argument);
    GroupElement x{Group::cyclic(2), 1}, y{Group::cyclic(3), 1};
    CHECK_THROWS_AS(g_mul(x, y), group_mismatch_error);
    CHECK(listing(Group::cyclic(2)).size() == 2);
}
