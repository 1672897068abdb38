#include <doctest.h>

#include <random>

#include "grconv/code.hpp"
#include "grconv/constructions.hpp"
#include "grconv/distance.hpp"

using namespace grconv;

namespace {

Mat mat_rows(const FieldPtr& f, int rows, int cols, std::initializer_list<int> vals) {
    Mat m(f, rows, cols);
    auto it = vals.begin();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = f->from_integer(*it++);
    return m;
}

}  // namespace

TEST_CASE("the (4,2) base code reproduces the printed matrices") {
    ConvCode code = prototype_4_2();
    CHECK(code.n == 4);
    CHECK(code.k == 2);
    CHECK(code.t == 0);
    auto f = code.field;

    PolyMatrix G(f, 2, 4);
    G.set_coeff(0, mat_rows(f, 2, 4, {0, 1, 1, 1, 1, 0, 1, 1}));
    G.set_coeff(1, mat_rows(f, 2, 4, {1, 0, 1, 0, 0, 1, 0, 1}));
    G.set_coeff(2, mat_rows(f, 2, 4, {0, 1, 0, 1, 1, 0, 1, 0}));
    CHECK(code.G == G);

    PolyMatrix H(f, 4, 2);
    H.set_coeff(0, mat_rows(f, 4, 2, {1, 1, 1, 1, 0, 1, 1, 0}));
    H.set_coeff(1, mat_rows(f, 4, 2, {1, 0, 0, 1, 1, 0, 0, 1}));
    H.set_coeff(2, mat_rows(f, 4, 2, {0, 1, 1, 0, 0, 1, 1, 0}));
    CHECK(code.H == H);

    CHECK((code.G * code.H).is_zero());
    CHECK(verify_duality(code).all());
    CHECK(is_noncatastrophic(code).yes);
}

TEST_CASE("identity word gives a systematic trivial code") {
    auto c4 = Group::cyclic(4);
    auto f = Field::gf(2);
    LaurentPoly one = LaurentPoly::one(c4, f);
    ConvCode code = from_unit_pair(one, one, {0, 1});
    CHECK(code.G == PolyMatrix::identity(f, 4).select_rows({0, 1}));
    CHECK(code.H == PolyMatrix::identity(f, 4).select_cols({2, 3}));
    CHECK(verify_duality(code).all());
}

TEST_CASE("any row choice works") {
    auto c4 = Group::cyclic(4);
    auto f = Field::gf(2);
    GroupRingElem a0(c4, f), a1(c4, f), a2(c4, f);
    for (int i : {1, 2, 3}) a0.set_coeff(i, f->one());
    for (int i : {0, 2}) a1.set_coeff(i, f->one());
    for (int i : {1, 3}) a2.set_coeff(i, f->one());
    LaurentPoly w(c4, f);
    w.set_coeff(0, a0);
    w.set_coeff(1, a1);
    w.set_coeff(2, a2);
    ConvCode code = from_unit_pair(w, w, {2, 3});
    CHECK((code.G * code.H).is_zero());
    CHECK(verify_duality(code).all());
    CHECK(is_noncatastrophic(code).yes);
}

TEST_CASE("duality fails on a corrupted pair") {
    ConvCode code = prototype_4_2();
    // splice a column of the f side into the control side
    PolyMatrix corrupted = *code.full_g;
    for (const auto& [e, fm] : code.full_f->terms()) {
        Mat m = corrupted.coeff(e);
        for (int i = 0; i < code.n; ++i) m.at(i, 2) = fm.at(i, 0);
        corrupted.set_coeff(e, m);
    }
    code.full_g = corrupted;
    auto rep = verify_duality(code);
    CHECK(rep.checked);
    CHECK(!rep.f1g2_is_zero);
}

TEST_CASE("code degrees") {
    CHECK(code_degree(gf4_mds_code()) == 2);
    ConvCode constant = from_generator(PolyMatrix::identity(Field::gf(2), 3));
    CHECK(code_degree(constant) == 0);
}

TEST_CASE("noncatastrophicity") {
    auto f = Field::gf(2);
    // classic catastrophic single-row encoder (1+z, 1+z)
    PolyMatrix G(f, 1, 2);
    G.set_coeff(0, mat_rows(f, 1, 2, {1, 1}));
    G.set_coeff(1, mat_rows(f, 1, 2, {1, 1}));
    ConvCode bad = from_generator(G);
    auto rep = is_noncatastrophic(bad);
    CHECK(!rep.yes);
    CHECK(rep.gcd.weight() == 2);  // gcd = 1+z, not a monomial

    ConvCode idcode = from_generator(PolyMatrix::identity(f, 4).select_rows({0, 1}));
    CHECK(is_noncatastrophic(idcode).yes);
}

TEST_CASE("encoding") {
    ConvCode code = find_recipe("two_one_deg2")->build();
    auto f = code.field;
    std::vector<ScalarPoly> u = {ScalarPoly::constant(f->one())};
    auto c = encode(code, u);
    REQUIRE(c.size() == 2);
    CHECK(codeword_weight(c) == 5);
    CHECK(c[0] == ScalarPoly::constant(f->one()) + ScalarPoly::term(f->one(), 1) +
                      ScalarPoly::term(f->one(), 2));
    CHECK(c[1] == ScalarPoly::constant(f->one()) + ScalarPoly::term(f->one(), 2));

    std::vector<ScalarPoly> zero = {ScalarPoly(f)};
    CHECK(codeword_weight(encode(code, zero)) == 0);

    ConvCode proto = prototype_4_2();
    std::vector<ScalarPoly> e1 = {ScalarPoly::constant(proto.field->one()),
                                  ScalarPoly(proto.field)};
    auto row = encode(proto, e1);
    for (int j = 0; j < 4; ++j) CHECK(row[j] == proto.G.entry(0, j));
}

TEST_CASE("encoding is linear") {
    ConvCode code = prototype_4_2();
    auto f = code.field;
    std::mt19937 rng(23);
    auto rand_input = [&] {
        std::vector<ScalarPoly> u;
        for (int i = 0; i < code.k; ++i) {
            ScalarPoly p(f);
            for (int e = 0; e <= 3; ++e) p.set_coeff(e, f->from_integer(rng() % 2));
            u.push_back(p);
        }
        return u;
    };
    for (int trial = 0; trial < 25; ++trial) {
        auto u = rand_input(), v = rand_input();
        std::vector<ScalarPoly> sum;
        for (int i = 0; i < code.k; ++i) sum.push_back(u[i] + v[i]);
        auto cu = encode(code, u), cv = encode(code, v), cs = encode(code, sum);
        for (int j = 0; j < code.n; ++j) CHECK(cs[j] == cu[j] + cv[j]);
    }
}

TEST_CASE("full rank of G and H for unit-derived codes") {
    for (const char* name : {"prototype_4_2", "gf4_mds", "hamming_type_n1", "rate34_deg2"}) {
        ConvCode code = find_recipe(name)->build();
        bool g_full = false;
        for (const auto& m : full_size_minors(code.G))
            if (!m.is_zero()) g_full = true;
        CHECK(g_full);
        PolyMatrix Ht = code.H_poly;
        // rank H = n-k: transpose and take full-size minors
        PolyMatrix Htr(code.field, Ht.cols(), Ht.rows());
        for (const auto& [e, m] : Ht.terms()) Htr.set_coeff(e, m.transpose());
        bool h_full = false;
        for (const auto& m : full_size_minors(Htr))
            if (!m.is_zero()) h_full = true;
        CHECK(h_full);
    }
}

TEST_CASE("systematic form is offered only when polynomial row ops suffice") {
    auto f = Field::gf(2);
    // delay-free generator: systematic immediately
    PolyMatrix G(f, 2, 4);
    Mat m(f, 2, 4);
    m.at(0, 1) = f->one();
    m.at(0, 3) = f->one();
    m.at(1, 0) = f->one();
    m.at(1, 1) = f->one();
    G.set_coeff(0, m);
    Mat mz(f, 2, 4);
    mz.at(0, 0) = f->one();
    G.set_coeff(1, mz);
    ConvCode code = from_generator(G);
    auto sys = systematic_form(code);
    REQUIRE(sys.has_value());
    std::vector<int> left;
    for (int i = 0; i < code.k; ++i) left.push_back(i);
    CHECK(sys->generator.select_cols(left).is_identity());

    // every coordinate of the base (4,2) code carries delay, so no column
    // subset has a constant determinant and no polynomial-unimodular
    // reduction can produce a systematic generator
    CHECK(!systematic_form(prototype_4_2()).has_value());
}

TEST_CASE("laurent control matrices are z-cleared into polynomial form") {
    ConvCode code = find_recipe("two_one_deg2")->build();
    CHECK(code.t == 2);
    CHECK(code.H.min_exp() == -2);
    CHECK(code.h_shift == 2);
    CHECK(code.H_poly.min_exp() >= 0);
    CHECK((code.G * code.H).is_zero());
    CHECK((code.G * code.H_poly).is_zero());
}
