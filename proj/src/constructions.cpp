#include "grconv/constructions.hpp"

#include <numeric>

namespace grconv {

namespace {

GroupRingElem from_exponents(const GroupPtr& g, const FieldPtr& f,
                             const std::vector<int>& exps) {
    GroupRingElem e(g, f);
    for (int i : exps) e.set_coeff(i % g->order(), e.coeff(i % g->order()) + f->one());
    return e;
}

LaurentPoly word_from_pattern(const GroupPtr& g, const FieldPtr& f, const std::vector<int>& delta,
                              const GroupRingElem& unit, const GroupRingElem& nil, int t) {
    if (t < 0 || t >= (int)delta.size())
        throw invalid_ingredients_error("unit position t out of pattern range");
    LaurentPoly w(g, f);
    for (int i = 0; i < (int)delta.size(); ++i) {
        if (i == t)
            w.set_coeff(i, unit);
        else if (delta[i])
            w.set_coeff(i, nil);
    }
    return w;
}

std::vector<int> iota_rows(int k) {
    std::vector<int> rows(k);
    std::iota(rows.begin(), rows.end(), 0);
    return rows;
}

std::string pattern_str(const std::vector<int>& delta, int t) {
    std::string s;
    for (int i = 0; i < (int)delta.size(); ++i) {
        if (i) s += ",";
        s += i == t ? "u" : (delta[i] ? "1" : "0");
    }
    return s;
}

}  // namespace

ConvCode prototype_4_2() {
    auto f = Field::gf(2);
    auto g = Group::cyclic(4);
    GroupRingElem a0 = from_exponents(g, f, {1, 2, 3});
    GroupRingElem a1 = from_exponents(g, f, {0, 2});
    GroupRingElem a2 = from_exponents(g, f, {1, 3});
    LaurentPoly w(g, f);
    w.set_coeff(0, a0);
    w.set_coeff(1, a1);
    w.set_coeff(2, a2);
    return from_unit_pair(w, w, {0, 1},
                          "(4,2) over GF(2)C4: w = (a+a^2+a^3) + (1+a^2)z + (a+a^3)z^2, rows {0,1}");
}

ConvCode nilpotent_char2_word(const FieldPtr& field, const GroupPtr& group,
                              const std::vector<int>& delta, const GroupRingElem& square_one,
                              const GroupRingElem& square_zero, int t, std::vector<int> rows) {
    if (field->characteristic() != 2) throw invalid_ingredients_error("field must have characteristic 2");
    if (!(square_one * square_one).is_one())
        throw invalid_ingredients_error("square_one does not square to 1");
    if (!(square_zero * square_zero).is_zero())
        throw invalid_ingredients_error("square_zero does not square to 0");
    if (!elements_commute({square_one, square_zero}))
        throw invalid_ingredients_error("ingredients do not commute");
    LaurentPoly w = word_from_pattern(group, field, delta, square_one, square_zero, t);
    return from_unit_pair(w, w, std::move(rows),
                          "char-2 word over " + field->name() + group->name() + ", pattern (" +
                              pattern_str(delta, t) + ")");
}

Mat cyclic_generator_matrix(const std::vector<int>& gen, int n) {
    auto f = Field::gf(2);
    // gcd(gen, x^n - 1) over GF(2) via ScalarPoly
    ScalarPoly gp(f), xn1(f);
    for (int i = 0; i < (int)gen.size(); ++i)
        if (gen[i] % 2) gp.set_coeff(i, f->one());
    xn1.set_coeff(0, f->one());
    xn1.set_coeff(n, f->one());
    ScalarPoly d = poly_gcd(gp, xn1);
    int r = d.degree();
    int k = n - r;
    Mat m(f, k, n);
    for (int i = 0; i < k; ++i)
        for (const auto& [e, c] : d.terms()) m.at(i, (e + i) % n) = c;
    return m;
}

CyclicSeedInfo cyclic_seed_info(const std::vector<int>& gen, int n) {
    Mat m = cyclic_generator_matrix(gen, n);
    CyclicSeedInfo info;
    info.n = n;
    info.k = m.rows();
    info.d1 = block_min_distance(m);
    info.d2 = block_dual_distance(m);
    info.d = std::min(info.d1, info.d2);
    return info;
}

ConvCode two_one_from_cyclic(const std::vector<int>& gen, int t, bool* boundary_warning) {
    if (gen.empty() || gen.front() == 0 || gen.back() == 0)
        throw invalid_ingredients_error("generator polynomial needs nonzero first and last coefficients");
    auto f = Field::gf(2);
    auto g = Group::cyclic(2);
    GroupRingElem alpha = from_exponents(g, f, {0, 1});  // 1 + a
    GroupRingElem one = GroupRingElem::one(g, f);
    if (boundary_warning) *boundary_warning = (t == 0 || t == (int)gen.size() - 1);
    LaurentPoly w = word_from_pattern(g, f, gen, one, alpha, t);
    return from_unit_pair(w, w, {0},
                          "(2,1) over GF(2)C2, pattern (" + pattern_str(gen, t) + ")");
}

ConvCode rate_2m_1(int m, const std::vector<int>& delta, int t) {
    if (m < 1 || m % 2 == 0) throw invalid_ingredients_error("m must be odd");
    auto f = Field::gf(2);
    auto g = Group::cyclic(2 * m);
    std::vector<int> all, evens;
    for (int i = 0; i < 2 * m; ++i) {
        all.push_back(i);
        if (i % 2 == 0) evens.push_back(i);
    }
    GroupRingElem alpha = from_exponents(g, f, all);
    GroupRingElem alpha0 = from_exponents(g, f, evens);
    if (!(alpha * alpha).is_zero())
        throw invalid_ingredients_error("rate (2m,1) ingredient check failed");
    LaurentPoly w = word_from_pattern(g, f, delta, alpha0, alpha, t);
    std::string prov = "(" + std::to_string(2 * m) + ",1) over GF(2)C" + std::to_string(2 * m) +
                       ", pattern (" + pattern_str(delta, t) + ")";
    if ((alpha0 * alpha0).is_one())
        return from_unit_pair(w, w, {0}, prov);
    // for m > 1 the even-power sum is idempotent, not a square root of 1,
    // so the word has no Laurent inverse; the code comes straight from the
    // first embedded row
    int n = g->order();
    PolyMatrix G(f, 1, n);
    for (const auto& [e, c] : w.terms()) {
        Mat row(f, 1, n);
        for (int j = 0; j < n; ++j) row.at(0, j) = embed_matrix(c).at(0, j);
        G.set_coeff(e, row);
    }
    return from_generator(std::move(G), std::nullopt, prov + " (generator rows only)");
}

ConvCode rate_three_quarters(const std::vector<int>& delta, int t, bool* low_t_warning) {
    auto f = Field::gf(2);
    auto g = Group::cyclic(4);
    GroupRingElem alpha = from_exponents(g, f, {0, 1});  // 1 + a, alpha^4 = 0
    GroupRingElem one = GroupRingElem::one(g, f);
    if (nilpotency_index(alpha, 4) != std::optional<int>(4))
        throw invalid_ingredients_error("1+a should be nilpotent of index 4");
    if (low_t_warning) *low_t_warning = (t <= 1);
    LaurentPoly w = word_from_pattern(g, f, delta, one, alpha, t);
    return from_unit_pair(w, lp_pow(w, 3), {0, 1, 2},
                          "(4,3) over GF(2)C4, pattern (" + pattern_str(delta, t) + ")");
}

ConvCode hamming_type(const std::vector<int>& delta, int t) {
    auto f = Field::gf(2);
    auto g = Group::parse("C4xC2");
    int a = g->generators().at("a");
    int h = g->generators().at("h");
    auto mono = [&](std::initializer_list<std::pair<int, int>> words) {
        // each pair = (power of a, power of h)
        GroupRingElem e(g, f);
        for (auto [pa, ph] : words) {
            int idx = 0;
            for (int i = 0; i < pa; ++i) idx = g->mul(idx, a);
            for (int i = 0; i < ph; ++i) idx = g->mul(idx, h);
            e.set_coeff(idx, e.coeff(idx) + f->one());
        }
        return e;
    };
    GroupRingElem alpha0 = mono({{0, 0}, {0, 1}, {2, 1}});           // 1 + h(1 + a^2)
    GroupRingElem alpha = mono({{0, 0}, {1, 1}, {2, 1}, {3, 1}});    // 1 + h(a + a^2 + a^3)
    LaurentPoly w = word_from_pattern(g, f, delta, alpha0, alpha, t);
    return from_unit_pair(w, w, {0, 1, 2, 3},
                          "(8,4) Hamming-type over GF(2)(C4xC2), pattern (" + pattern_str(delta, t) +
                              ")");
}

ConvCode char_p_word(long long p, const GroupPtr& group, const GroupRingElem& alpha,
                     const GroupRingElem& alpha0, const std::vector<int>& delta, int t,
                     std::vector<int> rows) {
    const auto& f = alpha.field();
    if (f->characteristic() != p) throw invalid_ingredients_error("field characteristic must equal p");
    if (!gr_pow(alpha, p).is_zero()) throw invalid_ingredients_error("alpha^p != 0");
    if (!gr_pow(alpha0, p).is_one()) throw invalid_ingredients_error("alpha0^p != 1");
    if (!elements_commute({alpha, alpha0})) throw invalid_ingredients_error("ingredients do not commute");
    if (rows.empty()) rows = iota_rows(gr_rank(alpha));
    LaurentPoly w = word_from_pattern(group, f, delta, alpha0, alpha, t);
    return from_unit_pair(w, lp_pow(w, p - 1), std::move(rows),
                          "char-" + std::to_string(p) + " word over " + f->name() + group->name() +
                              ", pattern (" + pattern_str(delta, t) + ")");
}

ConvCode idempotent_code(const std::vector<GroupRingElem>& es, const std::vector<int>& signs,
                         const std::vector<int>& exps, std::vector<int> rows) {
    if (es.empty() || es.size() != signs.size() || es.size() != exps.size())
        throw invalid_ingredients_error("family, signs and exponents must have equal size");
    if (!is_complete_orthogonal_family(es))
        throw invalid_ingredients_error("not a complete orthogonal idempotent family");
    LaurentPoly fz(es[0].group(), es[0].field());
    for (size_t i = 0; i < es.size(); ++i) {
        GroupRingElem c = signs[i] >= 0 ? es[i] : -es[i];
        fz.set_coeff(exps[i], fz.coeff(exps[i]) + c);
    }
    LaurentPoly gz = fz.reversed();
    return from_unit_pair(fz, gz, std::move(rows),
                          "idempotent code over " + es[0].field()->name() + es[0].group()->name() +
                              " from " + std::to_string(es.size()) + " idempotents");
}

std::vector<GroupRingElem> nilpotent_generators_c2n(int n) {
    auto f = Field::gf(2);
    auto g = Group::cyclic(2 * n, "g");
    std::vector<GroupRingElem> ws;
    for (int i = 0; i < n; ++i) ws.push_back(from_exponents(g, f, {i, n + i}));
    return ws;
}

GroupRingElem direct_product_nilpotent(const GroupRingElem& beta, const std::string& outer_gen) {
    if (beta.field()->characteristic() != 2)
        throw invalid_ingredients_error("direct product nilpotents require characteristic 2");
    if (beta.group()->generators().count(outer_gen))
        throw invalid_ingredients_error("outer generator name collides: " + outer_gen);
    auto prod = Group::product({Group::cyclic(2, outer_gen), beta.group()});
    int inner = beta.group()->order();
    GroupRingElem out(prod, beta.field());
    for (int i = 0; i < inner; ++i) {
        if (beta.coeff(i).is_zero()) continue;
        out.set_coeff(i, beta.coeff(i));          // beta * 1
        out.set_coeff(inner + i, beta.coeff(i));  // beta * s
    }
    if (!(out * out).is_zero()) throw std::logic_error("beta(1+s) should square to zero");
    return out;
}

ConvCode z2c8_chain(std::optional<GroupRingElem> alpha0) {
    auto f = Field::gf(2);
    auto g = Group::cyclic(8, "g");
    GroupRingElem a0 = alpha0 ? *alpha0 : from_exponents(g, f, {0, 1, 3});
    if (!gr_pow(a0, 8).is_one()) throw invalid_ingredients_error("alpha0^8 != 1");
    LaurentPoly u(g, f);
    u.set_coeff(0, a0);
    u.set_coeff(1, from_exponents(g, f, {0, 4}));
    u.set_coeff(2, from_exponents(g, f, {0, 2}));
    u.set_coeff(3, from_exponents(g, f, {0, 1}));
    return from_unit_pair(u, lp_pow(u, 7), {0, 1, 2, 3},
                          "(8,4) over GF(2)C8 from u = a0 + (1+g^4)z + (1+g^2)z^2 + (1+g)z^3");
}

ConvCode fc14_rate_half() {
    auto f = Field::gf(2);
    auto g = Group::cyclic(14, "g");
    GroupRingElem w0 = from_exponents(g, f, {0, 5, 6, 12, 13});
    GroupRingElem w1 = from_exponents(g, f, {0, 2, 5, 7, 9, 12});
    GroupRingElem w2 = from_exponents(g, f, {0, 1, 3, 7, 8, 10});
    LaurentPoly p(g, f);
    p.set_coeff(0, w0);
    p.set_coeff(1, w1);
    p.set_coeff(2, w2);
    if (!(p * p == LaurentPoly::one(g, f))) throw invalid_ingredients_error("p^2 != 1");
    return from_unit_pair(p, p, {0, 1, 2, 3, 4, 5, 6},
                          "(14,7) over GF(2)C14 from p = w0 + w1 z + w2 z^2");
}

LaurentPoly gf2n_c2_word(int n, const std::vector<int>& pattern, int t) {
    std::vector<long long> trinomial(n + 1, 0);
    trinomial[0] = trinomial[1] = trinomial[n] = 1;
    if (!Field::is_irreducible(trinomial, 2))
        throw invalid_ingredients_error("x^" + std::to_string(n) +
                                        " + x + 1 is reducible; no such field presentation");
    auto f = Field::finite(2, n, trinomial);
    auto g = Group::cyclic(2);
    FieldElement omega = f->generator();
    GroupRingElem w0(g, f);
    w0.set_coeff(0, omega);
    w0.set_coeff(1, field_pow(omega, n));
    if (!(w0 * w0).is_one()) throw invalid_ingredients_error("w0^2 != 1");
    LaurentPoly w(g, f);
    for (int j = 0; j < (int)pattern.size(); ++j) {
        if (j == t) {
            w.set_coeff(j, w0);
        } else if (pattern[j] > 0) {
            GroupRingElem wi(g, f);
            wi.set_coeff(0, field_pow(omega, pattern[j]));
            wi.set_coeff(1, field_pow(omega, pattern[j]));
            w.set_coeff(j, wi);
        }
    }
    if (t < 0 || t >= (int)pattern.size()) throw invalid_ingredients_error("t out of range");
    return w;
}

ConvCode gf4_mds_code() {
    auto f = Field::gf(4);
    auto g = Group::cyclic(2, "g");
    FieldElement om = f->generator();
    FieldElement om2 = om * om;
    auto elem = [&](const FieldElement& c0, const FieldElement& c1) {
        GroupRingElem e(g, f);
        e.set_coeff(0, c0);
        e.set_coeff(1, c1);
        return e;
    };
    LaurentPoly w(g, f);
    w.set_coeff(0, elem(om, om2));
    w.set_coeff(1, elem(om, om));
    w.set_coeff(2, elem(om2, om2));
    return from_unit_pair(w, w, {0},
                          "(2,1) over GF(4)C2: w = (w+w^2 g) + (w+w g)z + (w^2+w^2 g)z^2");
}

ConvCode higher_nilpotent_86(const std::vector<int>& delta, int t, EightSixUnit alpha0_choice) {
    auto f = Field::gf(2);
    auto g = Group::cyclic(8);
    GroupRingElem alpha = from_exponents(g, f, {1, 7});
    GroupRingElem alpha0(g, f);
    switch (alpha0_choice) {
        case EightSixUnit::one: alpha0 = GroupRingElem::one(g, f); break;
        case EightSixUnit::one_a_a3: alpha0 = from_exponents(g, f, {0, 1, 3}); break;
        case EightSixUnit::one_a_a7: alpha0 = from_exponents(g, f, {0, 1, 7}); break;
    }
    if (!gr_pow(alpha, 4).is_zero()) throw invalid_ingredients_error("(a+a^7)^4 != 0");
    if (!gr_pow(alpha0, 4).is_one()) throw invalid_ingredients_error("alpha0^4 != 1");
    LaurentPoly w = word_from_pattern(g, f, delta, alpha0, alpha, t);
    return from_unit_pair(w, lp_pow(w, 3), {0, 1, 2, 3, 4, 5},
                          "(8,6) over GF(2)C8, pattern (" + pattern_str(delta, t) + ")");
}

namespace {

std::vector<Recipe> build_catalog() {
    std::vector<Recipe> cat;
    auto add = [&cat](Recipe r) { cat.push_back(std::move(r)); };

    add({"prototype_4_2", "(4,2) base code over GF(2)C4", [] { return prototype_4_2(); }, 6, false,
         std::nullopt, std::nullopt});
    add({"nilpotent_4_2_deg4", "(4,2) degree-4 word over GF(2)C4",
         [] {
             auto f = Field::gf(2);
             auto g = Group::cyclic(4);
             GroupRingElem a0 = from_exponents(g, f, {1, 2, 3});
             GroupRingElem nil = from_exponents(g, f, {1, 3});
             return nilpotent_char2_word(f, g, {1, 1, 0, 1, 1}, a0, nil, 0, {0, 1});
         },
         8, false, std::nullopt, std::nullopt});

    add({"two_one_deg2", "(2,1) degree-2 code, G = (1,1)+(1,0)z+(1,1)z^2",
         [] { return two_one_from_cyclic({1, 1, 1}, 1); }, 5, false, std::nullopt, std::nullopt});
    add({"two_one_deg3", "(2,1) degree-3 code", [] { return two_one_from_cyclic({1, 1, 1, 1}, 1); }, 6,
         false, std::nullopt, std::nullopt});
    add({"two_one_deg4", "(2,1) degree-4 code", [] { return two_one_from_cyclic({1, 1, 0, 1, 1}, 1); },
         7, false, std::nullopt, std::nullopt});
    add({"two_one_deg5", "(2,1) degree-5 code",
         [] { return two_one_from_cyclic({1, 1, 0, 1, 1, 1}, 1); }, 8, false, std::nullopt,
         std::nullopt});
    add({"two_one_deg6", "(2,1) degree-6 code",
         [] { return two_one_from_cyclic({1, 0, 1, 1, 1, 1, 1}, 4); }, 10, false, std::nullopt,
         std::nullopt});
    add({"two_one_golay_mimic", "(2,1) degree-12 word shaped like a (23,12) generator",
         [] { return two_one_from_cyclic({1, 0, 1, 0, 1, 1, 1, 0, 0, 1, 1, 1, 1}, 9); }, std::nullopt,
         true, std::nullopt, std::nullopt});

    add({"six_one_deg2", "(6,1) degree-2 code over GF(2)C6",
         [] { return rate_2m_1(3, {1, 1, 1}, 1); }, 15, false, std::nullopt, std::nullopt});
    add({"six_one_deg4", "(6,1) degree-4 code over GF(2)C6",
         [] { return rate_2m_1(3, {1, 1, 0, 1, 1}, 1); }, 21, false, std::nullopt, std::nullopt});

    add({"gf4_mds", "(2,1) code over GF(4)C2 meeting the degree-2 distance bound",
         [] { return gf4_mds_code(); }, 6, false, 2, std::nullopt});

    add({"rate34_deg2", "(4,3) degree-2 code over GF(2)C4",
         [] { return rate_three_quarters({1, 1, 1}, 1); }, 5, false, std::nullopt, std::nullopt});
    add({"rate34_deg3", "(4,3) degree-3 code", [] { return rate_three_quarters({1, 1, 1, 1}, 1); }, 6,
         false, std::nullopt, std::nullopt});
    add({"rate34_deg4", "(4,3) degree-4 code",
         [] { return rate_three_quarters({1, 1, 0, 1, 1}, 1); }, 7, false, std::nullopt,
         std::nullopt});

    add({"hamming_type_n1", "(8,4) Hamming-type code, two blocks",
         [] { return hamming_type({1, 1}, 0); }, 6, false, std::nullopt, std::nullopt});
    add({"hamming_type_bab", "(8,4) Hamming-type code, (I,B)+(I,A)z+(I,B)z^2",
         [] { return hamming_type({1, 1, 1}, 1); }, 10, false, std::nullopt, std::nullopt});

    add({"eight_four_product", "(8,4) from u = 1+h(a+a^2+a^3) in GF(2)(C4xC2)",
         [] {
             auto f = Field::gf(2);
             auto g = Group::parse("C4xC2");
             int a = g->generators().at("a");
             int h = g->generators().at("h");
             GroupRingElem u(g, f);
             u.set_coeff(0, f->one());
             int apow = 0;
             for (int pw = 1; pw <= 3; ++pw) {
                 apow = g->mul(apow, a);
                 u.set_coeff(g->mul(h, apow), f->one());
             }
             GroupRingElem one = GroupRingElem::one(g, f);
             LaurentPoly w(g, f);
             w.set_coeff(0, u);
             w.set_coeff(1, one);
             w.set_coeff(2, u);
             return from_unit_pair(w, w, {0, 1, 2, 3},
                                   "(8,4) over GF(2)(C4xC2): w = u + z + u z^2, u = 1+h(a+a^2+a^3)");
         },
         9, false, 8, std::nullopt});

    add({"z2c8_chain", "(8,4) chain code over GF(2)C8", [] { return z2c8_chain(); }, 9, false, 6,
         std::nullopt});

    add({"eight_six_deg1", "(8,6) degree-1 code over GF(2)C8",
         [] { return higher_nilpotent_86({1, 1}, 1); }, 4, false, std::nullopt, std::nullopt});
    add({"eight_six_deg2", "(8,6) degree-2 code", [] { return higher_nilpotent_86({1, 1, 1}, 1); }, 6,
         false, std::nullopt, std::nullopt});
    add({"eight_six_deg3", "(8,6) degree-3 code",
         [] { return higher_nilpotent_86({1, 1, 1, 1}, 1); }, 6, false, std::nullopt, std::nullopt});
    add({"eight_six_deg4", "(8,6) degree-4 code",
         [] { return higher_nilpotent_86({1, 1, 0, 1, 1}, 1); }, 8, false, std::nullopt,
         std::nullopt});
    add({"eight_six_deg5", "(8,6) degree-5 code (distance measured)",
         [] { return higher_nilpotent_86({1, 1, 0, 1, 1, 1}, 1); }, std::nullopt, true, std::nullopt,
         std::nullopt});
    add({"eight_six_deg6", "(8,6) degree-6 code (distance measured)",
         [] { return higher_nilpotent_86({1, 0, 1, 1, 1, 1, 1}, 4); }, std::nullopt, true,
         std::nullopt, std::nullopt});

    add({"char3_96_deg2", "(9,6) characteristic-3 code over GF(3)(C3xC3)",
         [] {
             auto f = Field::gf(3);
             auto g = Group::parse("C3xC3");
             int gg = g->generators().at("g");
             int hh = g->generators().at("h");
             GroupRingElem alpha(g, f);
             alpha.set_coeff(0, f->one());
             alpha.set_coeff(hh, f->one());
             alpha.set_coeff(g->mul(hh, gg), f->one());
             GroupRingElem alpha0(g, f);
             alpha0.set_coeff(0, f->from_integer(2));
             alpha0.set_coeff(hh, f->from_integer(2));
             return char_p_word(3, g, alpha, alpha0, {1, 1, 1}, 1, {0, 1, 2, 3, 4, 5});
         },
         8, false, std::nullopt, std::nullopt});
    add({"char3_96_deg4", "(9,6) characteristic-3 code, degree-4 word",
         [] {
             auto f = Field::gf(3);
             auto g = Group::parse("C3xC3");
             int gg = g->generators().at("g");
             int hh = g->generators().at("h");
             GroupRingElem alpha(g, f);
             alpha.set_coeff(0, f->one());
             alpha.set_coeff(hh, f->one());
             alpha.set_coeff(g->mul(hh, gg), f->one());
             GroupRingElem alpha0(g, f);
             alpha0.set_coeff(0, f->from_integer(2));
             alpha0.set_coeff(hh, f->from_integer(2));
             return char_p_word(3, g, alpha, alpha0, {1, 1, 0, 1, 1}, 1, {0, 1, 2, 3, 4, 5});
         },
         11, false, std::nullopt, std::nullopt});

    add({"fourier_4_1_3", "(4,1,3) code from the C4 idempotents over Q(zeta_4)",
         [] {
             auto es = cyclic_idempotents(4, Field::cyclotomic(4));
             auto code = idempotent_code(es, {1, 1, 1, 1}, {0, 1, 2, 3}, {0});
             code.specialization_prime = 5;
             return code;
         },
         14, false, 3, 5});
    add({"real_4_1_2", "(4,1,2) code from the merged real C4 idempotents",
         [] {
             auto es = combine_conjugate_idempotents(cyclic_idempotents(4, Field::cyclotomic(4)));
             auto code = idempotent_code(es, {1, 1, 1}, {0, 1, 2}, {0});
             code.specialization_prime = 5;
             return code;
         },
         10, false, 2, 5});
    add({"klein_4_1_3", "(4,1,3) code from the C2xC2 idempotents (distance measured)",
         [] {
             auto es = builtin_idempotents(Group::parse("C2xC2"), Field::rationals());
             auto code = idempotent_code(es, {1, 1, 1, 1}, {0, 1, 2, 3}, {0});
             code.specialization_prime = 5;
             return code;
         },
         std::nullopt, true, std::nullopt, 5});

    add({"fc14_rate_half", "(14,7) code over GF(2)C14 (distance measured)",
         [] { return fc14_rate_half(); }, std::nullopt, true, std::nullopt, std::nullopt});

    return cat;
}

}  // namespace

const std::vector<Recipe>& catalog() {
    static const std::vector<Recipe> cat = build_catalog();
    return cat;
}

const Recipe* find_recipe(const std::string& name) {
    for (const auto& r : catalog())
        if (r.name == name) return &r;
    return nullptr;
}

}  // namespace grconv
