#include <doctest.h>

#include <random>

#include "grconv/laurent.hpp"

using namespace grconv;

namespace {

GroupRingElem gf2_elem(const GroupPtr& g, std::initializer_list<int> exps) {
    auto f = Field::gf(2);
    GroupRingElem e(g, f);
    for (int i : exps) e.set_coeff(i, f->one());
    return e;
}

}  // namespace

TEST_CASE("basic products") {
    auto c2 = Group::cyclic(2);
    auto f = Field::gf(2);
    GroupRingElem alpha = gf2_elem(c2, {0, 1});  // 1+a
    LaurentPoly w(c2, f);
    w.set_coeff(0, alpha);
    w.set_coeff(1, GroupRingElem::one(c2, f));
    // (alpha + z)^2 = z^2
    LaurentPoly sq = w * w;
    CHECK(sq.terms().size() == 1);
    CHECK(sq.coeff(2).is_one());

    LaurentPoly one = LaurentPoly::one(c2, f);
    CHECK(w * one == w);
}

TEST_CASE("the GF(2)C8 chain element") {
    auto g = Group::cyclic(8, "g");
    auto f = Field::gf(2);
    LaurentPoly u(g, f);
    u.set_coeff(0, gf2_elem(g, {0, 1, 3}));
    u.set_coeff(1, gf2_elem(g, {0, 4}));
    u.set_coeff(2, gf2_elem(g, {0, 2}));
    u.set_coeff(3, gf2_elem(g, {0, 1}));
    LaurentPoly u2 = u * u;
    // squaring doubles every exponent in characteristic 2:
    // u^2 = a0^2 + (1+g^8)z^2 + (1+g^4)z^4 + (1+g^2)z^6, and 1+g^8 = 0
    CHECK(u2.coeff(0) == gf2_elem(g, {0, 1, 3}) * gf2_elem(g, {0, 1, 3}));
    CHECK(u2.coeff(2).is_zero());
    CHECK(u2.coeff(4) == gf2_elem(g, {0, 4}));
    CHECK(u2.coeff(6) == gf2_elem(g, {0, 2}));
    CHECK(u2.coeff(1).is_zero());
    LaurentPoly u4 = u2 * u2;
    CHECK(u4.coeff(12) == gf2_elem(g, {0, 4}));
    CHECK(lp_pow(u, 8) == LaurentPoly::one(g, f));
}

TEST_CASE("unit pair detection and shift normalization") {
    auto c4 = Group::cyclic(4);
    auto f = Field::gf(2);
    LaurentPoly w(c4, f);
    w.set_coeff(0, gf2_elem(c4, {1, 2, 3}));
    w.set_coeff(1, gf2_elem(c4, {0, 2}));
    w.set_coeff(2, gf2_elem(c4, {1, 3}));
    CHECK(is_unit_pair(w, w) == 0);

    auto c2 = Group::cyclic(2);
    LaurentPoly zmono = LaurentPoly::term(GroupRingElem::one(c2, f), 1);
    CHECK(is_unit_pair(zmono, zmono) == 2);

    LaurentPoly zd = LaurentPoly::term(gf2_elem(c2, {0, 1}), 0);
    CHECK(!is_unit_pair(zd, zd).has_value());

    LaurentPoly g = shift_normalize(zmono, 2);
    CHECK(g.min_exp() == -1);
    CHECK(shift_normalize(w, 0) == w);
    LaurentPoly z3 = LaurentPoly::term(GroupRingElem::one(c2, f), 3);
    CHECK(shift_normalize(z3, 3) == LaurentPoly::one(c2, f));
}

TEST_CASE("unit pairs shift multiplicatively under monomial factors") {
    auto c4 = Group::cyclic(4);
    auto f = Field::gf(2);
    LaurentPoly w(c4, f);
    w.set_coeff(0, gf2_elem(c4, {1, 2, 3}));
    w.set_coeff(1, gf2_elem(c4, {1, 3}));
    w.set_coeff(2, gf2_elem(c4, {1, 3}));
    REQUIRE(is_unit_pair(w, w) == 0);
    for (int s : {1, 2, 5}) {
        LaurentPoly ws = w.shifted(s);
        CHECK(is_unit_pair(ws, ws) == 2 * s);
    }
}

TEST_CASE("characteristic-2 square classification") {
    auto c2 = Group::cyclic(2);
    auto f = Field::gf(2);
    GroupRingElem alpha = gf2_elem(c2, {0, 1});
    GroupRingElem one = GroupRingElem::one(c2, f);

    LaurentPoly w(c2, f);
    w.set_coeff(0, alpha);
    w.set_coeff(1, one);
    w.set_coeff(3, alpha);
    w.set_coeff(4, alpha);
    auto cls = char2_square_classify(w);
    CHECK(cls.cls == SquareClass::shifted_square);
    CHECK(cls.t == 1);
    CHECK(lp_pow(w, 2) == LaurentPoly::term(one, 2));

    CHECK(char2_square_classify(LaurentPoly::one(c2, f)).cls == SquareClass::identity_square);

    LaurentPoly zd = LaurentPoly::term(alpha, 0);
    CHECK(char2_square_classify(zd).cls == SquareClass::neither);
}

TEST_CASE("square classification requires commuting coefficients") {
    auto s3 = Group::symmetric(3);
    auto f = Field::gf(2);
    GroupRingElem x(s3, f), y(s3, f);
    x.set_coeff(1, f->one());  // (12)
    y.set_coeff(2, f->one());  // (13)
    LaurentPoly w(s3, f);
    w.set_coeff(0, x);
    w.set_coeff(1, y);
    CHECK_THROWS_AS(char2_square_classify(w), std::invalid_argument);
}

TEST_CASE("characteristic-p power classification") {
    auto g = Group::parse("C3xC3");
    auto f = Field::gf(3);
    int gg = g->generators().at("g"), hh = g->generators().at("h");
    GroupRingElem alpha(g, f);
    alpha.set_coeff(0, f->one());
    alpha.set_coeff(hh, f->one());
    alpha.set_coeff(g->mul(hh, gg), f->one());
    GroupRingElem alpha0(g, f);
    alpha0.set_coeff(0, f->from_integer(2));
    alpha0.set_coeff(hh, f->from_integer(2));
    CHECK(gr_pow(alpha0, 3).is_one());

    LaurentPoly w(g, f);
    w.set_coeff(0, alpha);
    w.set_coeff(1, alpha0);
    w.set_coeff(2, alpha);
    auto cls = charp_power_classify(w, 3);
    CHECK(cls.is_pth_power);
    CHECK(cls.t == 1);
    CHECK(cls.gamma == f->one());
    CHECK(lp_pow(w, 3) == LaurentPoly::term(GroupRingElem::one(g, f), 3));

    auto one_cls = charp_power_classify(LaurentPoly::one(g, f), 3);
    CHECK(one_cls.is_pth_power);
    CHECK(one_cls.t == 0);
    CHECK(one_cls.gamma == f->one());

    CHECK(!charp_power_classify(LaurentPoly::term(alpha, 0), 3).is_pth_power);

    // nontrivial scalar gamma: (2z)^3 = 2 z^3 and 2 is its own cube root
    auto c3 = Group::cyclic(3);
    LaurentPoly two_z = LaurentPoly::term(GroupRingElem::monomial(c3, f, 0, f->from_integer(2)), 1);
    auto g_cls = charp_power_classify(two_z, 3);
    CHECK(g_cls.is_pth_power);
    CHECK(g_cls.t == 1);
    CHECK(g_cls.gamma == f->from_integer(2));
}

TEST_CASE("laurent multiplication is associative and distributive") {
    std::mt19937 rng(17);
    auto c4 = Group::cyclic(4);
    auto f = Field::gf(2);
    auto rand_poly = [&] {
        LaurentPoly p(c4, f);
        for (int e = -2; e <= 2; ++e) {
            GroupRingElem c(c4, f);
            for (int i = 0; i < 4; ++i) c.set_coeff(i, f->from_integer(rng() % 2));
            p.set_coeff(e, c);
        }
        return p;
    };
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("products of reversible units compose with reversed-order partners") {
    auto q4 = Field::cyclotomic(4);
    auto es = cyclic_idempotents(4, q4);
    auto c4 = es[0].group();
    auto make_f = [&](std::initializer_list<int> exps) {
        LaurentPoly p(c4, q4);
        int i = 0;
        for (int e : exps) p.set_coeff(e, p.coeff(e) + es[i++]);
        return p;
    };
    LaurentPoly f1 = make_f({0, 1, 2, 3});
    LaurentPoly f2 = make_f({2, 0, 1, 5});
    REQUIRE(is_unit_pair(f1, f1.reversed()) == 0);
    REQUIRE(is_unit_pair(f2, f2.reversed()) == 0);
    LaurentPoly h = f1 * f2;
    LaurentPoly h_hat = f2.reversed() * f1.reversed();
    CHECK(is_unit_pair(h, h_hat) == 0);
}
