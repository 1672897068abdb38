#include <doctest.h>

#include "grconv/constructions.hpp"
#include "grconv/serialize.hpp"
#include "grconv/specfile.hpp"

using namespace grconv;

static const char* kPrototypeSpec = R"(
# base (4,2) code
field = GF(2)
group = C4
alpha0 = a + a^2 + a^3
alpha1 = 1 + a^2
alpha2 = a + a^3
w = alpha0 + alpha1*z + alpha2*z^2
pair = self
t = 0
rows = 0,1
)";

TEST_CASE("parsing and building the base spec") {
    CodeSpecFile spec = parse_spec_text(kPrototypeSpec, "proto.spec");
    CHECK(spec.field->name() == "GF(2)");
    CHECK(spec.group->name() == "C4");
    CHECK(spec.elements.size() == 3);
    REQUIRE(spec.has_word);
    ConvCode code = build_from_spec(spec);
    ConvCode direct = prototype_4_2();
    CHECK(code.G == direct.G);
    CHECK(code.H == direct.H);
    CHECK(code.t == 0);
}

TEST_CASE("the alternative middle coefficient also squares away") {
    const char* text = R"(
field = GF(2)
group = C4
alpha0 = a + a^2 + a^3
alpha1 = a + a^3
w = alpha0 + alpha1*z + alpha1*z^2
rows = 0,1
)";
    CodeSpecFile spec = parse_spec_text(text);
    CHECK(is_unit_pair(spec.word, spec.word) == 0);
    CHECK_NOTHROW(build_from_spec(spec));
}

TEST_CASE("coefficient-list syntax") {
    const char* text = R"(
field = GF(2)
group = C4
alpha0 = 0,1,1,1
w = alpha0 + alpha0*z^2
rows = 0,1
)";
    CodeSpecFile spec = parse_spec_text(text);
    const GroupRingElem* a0 = spec.element("alpha0");
    REQUIRE(a0 != nullptr);
    CHECK(a0->coeff(0).is_zero());
    CHECK(a0->coeff(1).is_one());
    CHECK(a0->coeff(3).is_one());
}

TEST_CASE("expression features") {
    auto q4 = Field::cyclotomic(4);
    auto c4 = Group::cyclic(4);
    std::vector<std::pair<std::string, GroupRingElem>> env;
    LaurentPoly v = eval_expression("1/4 + 1/4*zeta*a - 1/4*a^2", c4, q4, env);
    CHECK(v.coeff(0).coeff(0) == q4->from_rationals({Rational(1, 4)}));
    CHECK(v.coeff(0).coeff(1) == q4->from_rationals({Rational(1, 4)}) * q4->generator());
    CHECK(v.coeff(0).coeff(2) == -q4->from_rationals({Rational(1, 4)}));

    auto g33 = Group::parse("C3xC3");
    auto f3 = Field::gf(3);
    LaurentPoly juxt = eval_expression("1 + h(1 + g)", g33, f3, env);
    CHECK(juxt.coeff(0).coeff(0).is_one());
    CHECK(juxt.coeff(0).coeff(g33->generators().at("h")).is_one());

    auto f2 = Field::gf(2);
    LaurentPoly zneg = eval_expression("z^-2 + z^(-1) + a^-1", c4, f2, env);
    CHECK(zneg.coeff(-2).is_one());
    CHECK(zneg.coeff(-1).is_one());
    CHECK(zneg.coeff(0).coeff(3).is_one());  // a^-1 = a^3

    auto f4 = Field::gf(4);
    auto c2 = Group::cyclic(2);
    LaurentPoly om = eval_expression("w + omega^2*a", c2, f4, env);
    CHECK(om.coeff(0).coeff(0) == f4->generator());
    CHECK(om.coeff(0).coeff(1) == f4->generator() * f4->generator());

    CHECK_THROWS(eval_expression("(1+a)^-1", c4, f2, env));   // non-monomial inverse
    CHECK_THROWS(eval_expression("1/(1+a)", c4, f2, env));    // non-scalar division
    CHECK_THROWS(eval_expression("mystery + 1", c4, f2, env));
}

TEST_CASE("parse errors carry line numbers") {
    const char* missing_name = "field = GF(2)\ngroup = C4\nw = nope + z\nrows = 0\n";
    try {
        parse_spec_text(missing_name, "bad.spec");
        FAIL("expected a parse error");
    } catch (const spec_parse_error& e) {
        CHECK(e.line_no == 3);
        CHECK(std::string(e.what()).find("bad.spec:3") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_spec_text("w = 1\n"), spec_parse_error);              // no ring
    CHECK_THROWS_AS(parse_spec_text("field = GF(2)\ngroup = C2\nx = z\n"), spec_parse_error);
    CHECK_THROWS_AS(parse_spec_text("field = GF(2)\ngroup = C2\n"), spec_parse_error);  // no word
    const char* dup = "field = GF(2)\ngroup = C2\nw = 1\nw = a\nrows = 0\n";
    CHECK_THROWS_AS(parse_spec_text(dup), spec_parse_error);
}

TEST_CASE("declared unit positions are checked") {
    const char* text = R"(
field = GF(2)
group = C2
alpha = 1 + a
w = alpha + z
t = 1
rows = 0
)";
    CodeSpecFile spec = parse_spec_text(text);
    CHECK_THROWS_WITH_AS(build_from_spec(spec),
                         doctest::Contains("declared unit position"), std::invalid_argument);
}

TEST_CASE("pair rules") {
    const char* power_text = R"(
field = GF(2)
group = C4
alpha = 1 + a
w = alpha + z + alpha*z^2
pair = power 3
rows = 0,1,2
)";
    CodeSpecFile spec = parse_spec_text(power_text);
    CHECK(is_unit_pair(spec.word, spec.pair) == 4);
    ConvCode code = build_from_spec(spec);
    CHECK(code.k == 3);

    const char* rev_text = R"(
field = Q
group = C2
e1 = 1/2 + 1/2*a
e2 = 1/2 - 1/2*a
check_family = e1, e2
w = e1 + e2*z^3
pair = reverse
rows = 0
)";
    CodeSpecFile rev = parse_spec_text(rev_text);
    CHECK(is_unit_pair(rev.word, rev.pair) == 0);
    CHECK(rev.family_check.size() == 2);

    const char* expr_text = R"(
field = GF(2)
group = C2
alpha = 1 + a
w = alpha + z
pair = w
rows = 0
)";
    CodeSpecFile ex = parse_spec_text(expr_text);
    CHECK(ex.pair == ex.word);
}

TEST_CASE("machine format round trip") {
    // six_one_deg2 has no control matrix (built from generator rows only)
    for (const char* name :
         {"prototype_4_2", "gf4_mds", "fourier_4_1_3", "two_one_deg2", "six_one_deg2"}) {
        ConvCode code = find_recipe(name)->build();
        std::string doc = serialize_code(code);
        ConvCode back = parse_code(doc);
        CHECK(codes_equal(code, back));
        // a second round trip is byte-identical
        CHECK(serialize_code(back) == doc);
    }
}
