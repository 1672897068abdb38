#include "grconv/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace grconv {

namespace {

PolyMatrix embed_laurent(const LaurentPoly& w) {
    int n = w.group()->order();
    PolyMatrix m(w.field(), n, n);
    for (const auto& [e, c] : w.terms()) m.set_coeff(e, embed_matrix(c));
    return m;
}

std::vector<int> complement(int n, const std::vector<int>& rows) {
    std::vector<bool> in(n, false);
    for (int r : rows) in[r] = true;
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (!in[i]) out.push_back(i);
    return out;
}

}  // namespace

ConvCode from_unit_pair(const LaurentPoly& f, const LaurentPoly& g, std::vector<int> rows,
                        std::string provenance) {
    auto t = is_unit_pair(f, g);
    if (!t) throw std::invalid_argument("f*g is not z^t: not a unit pair");
    int n = f.group()->order();
    std::sort(rows.begin(), rows.end());
    for (int r : rows)
        if (r < 0 || r >= n) throw std::invalid_argument("row index out of range");
    if (rows.empty() || std::adjacent_find(rows.begin(), rows.end()) != rows.end())
        throw std::invalid_argument("row set must be nonempty and duplicate-free");

    LaurentPoly g_norm = shift_normalize(g, *t);
    PolyMatrix full_f = embed_laurent(f);
    PolyMatrix full_g = embed_laurent(g_norm);

    ConvCode code;
    code.n = n;
    code.k = (int)rows.size();
    code.field = f.field();
    code.rows = rows;
    code.t = *t;
    code.G = full_f.select_rows(rows);
    code.H = full_g.delete_cols(rows);
    code.h_shift = code.H.is_zero() ? 0 : std::max(0, -code.H.min_exp());
    code.H_poly = code.H.shifted(code.h_shift);
    code.full_f = full_f;
    code.full_g = full_g;
    code.provenance = std::move(provenance);
    return code;
}

ConvCode from_generator(PolyMatrix G, std::optional<PolyMatrix> H, std::string provenance) {
    ConvCode code;
    code.n = G.cols();
    code.k = G.rows();
    code.field = G.field();
    code.G = std::move(G);
    if (H) {
        code.H = *H;
        code.h_shift = code.H.is_zero() ? 0 : std::max(0, -code.H.min_exp());
        code.H_poly = code.H.shifted(code.h_shift);
    } else {
        code.H = PolyMatrix(code.field, code.n, 0);
        code.H_poly = code.H;
    }
    for (int i = 0; i < code.k; ++i) code.rows.push_back(i);
    code.provenance = std::move(provenance);
    return code;
}

DualityReport verify_duality(const ConvCode& code) {
    DualityReport rep;
    if (!code.full_f || !code.full_g) return rep;
    rep.checked = true;
    std::vector<int> comp = complement(code.n, code.rows);
    PolyMatrix f1 = code.full_f->select_rows(code.rows);
    PolyMatrix f2 = code.full_f->select_rows(comp);
    PolyMatrix g1 = code.full_g->select_cols(code.rows);
    PolyMatrix g2 = code.full_g->select_cols(comp);
    rep.f1g1_is_identity = (f1 * g1).is_identity();
    rep.f1g2_is_zero = (f1 * g2).is_zero();
    rep.f2g1_is_zero = (f2 * g1).is_zero();
    rep.f2g2_is_identity = (f2 * g2).is_identity();
    return rep;
}

int code_degree(const ConvCode& code) {
    PolyMatrix G = code.G;
    if (!G.is_zero() && G.min_exp() < 0) G = G.shifted(-G.min_exp());
    return max_minor_degree(G);
}

NoncatResult is_noncatastrophic(const ConvCode& code) {
    NoncatResult res;
    res.gcd = minor_gcd(code.G);
    bool structural = !res.gcd.is_zero() && res.gcd.is_monomial();

    bool existential = structural;  // default when no unit pair stored
    if (code.full_f && code.full_g) {
        PolyMatrix f1 = code.full_f->select_rows(code.rows);
        PolyMatrix g1 = code.full_g->select_cols(code.rows);
        existential = (f1 * g1).is_identity();
        if (existential != structural)
            throw std::logic_error("noncatastrophicity routes disagree");
        res.right_inverse = existential;
    }
    res.yes = structural && existential;
    res.detail = res.yes ? "minor gcd is the monomial " + res.gcd.str()
                         : "minor gcd " + res.gcd.str() + " is not a monomial";
    return res;
}

std::vector<ScalarPoly> encode(const ConvCode& code, const std::vector<ScalarPoly>& u) {
    if ((int)u.size() != code.k) throw std::invalid_argument("input length must equal k");
    std::vector<ScalarPoly> out(code.n, ScalarPoly(code.field));
    for (int j = 0; j < code.n; ++j)
        for (int i = 0; i < code.k; ++i) out[j] = out[j] + u[i] * code.G.entry(i, j);
    return out;
}

int codeword_weight(const std::vector<ScalarPoly>& w) {
    int wt = 0;
    for (const auto& p : w) wt += p.weight();
    return wt;
}

namespace {

Mat drop_row_col(const Mat& m, int row, int col) {
    Mat out(m.field(), m.rows() - 1, m.cols() - 1);
    for (int i = 0, oi = 0; i < m.rows(); ++i) {
        if (i == row) continue;
        for (int j = 0, oj = 0; j < m.cols(); ++j) {
            if (j == col) continue;
            out.at(oi, oj) = m.at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

PolyMatrix minor_matrix(const PolyMatrix& m, int row, int col) {
    PolyMatrix out(m.field(), m.rows() - 1, m.cols() - 1);
    for (const auto& [e, mat] : m.terms()) out.set_coeff(e, drop_row_col(mat, row, col));
    return out;
}

}  // namespace

std::optional<SystematicForm> systematic_form(const ConvCode& code) {
    const PolyMatrix& G = code.G;
    int k = code.k, n = code.n;
    if (G.is_zero() || G.min_exp() < 0) return std::nullopt;

    std::vector<int> cols;
    PolyMatrix sub;
    ScalarPoly det;
    bool found = false;
    for (uint32_t mask = 0; mask < (1u << n) && !found; ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<int> cand;
        for (int j = 0; j < n; ++j)
            if (mask & (1u << j)) cand.push_back(j);
        PolyMatrix s = G.select_cols(cand);
        ScalarPoly d = poly_det(s);
        // unimodular over F[z]: a nonzero constant determinant
        if (!d.is_zero() && d.degree() == 0 && d.min_exp() == 0) {
            cols = cand;
            sub = s;
            det = d;
            found = true;
        }
    }
    if (!found) return std::nullopt;

    FieldElement det_inv = field_inv(det.coeff(0));
    PolyMatrix inverse(code.field, k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            ScalarPoly cof = poly_det(minor_matrix(sub, j, i));
            if ((i + j) % 2 == 1) cof = ScalarPoly(code.field) - cof;
            cof = det_inv * cof;
            for (const auto& [e, c] : cof.terms()) {
                Mat m = inverse.coeff(e);
                m.at(i, j) = c;
                inverse.set_coeff(e, m);
            }
        }
    }

    SystematicForm out;
    out.column_order = cols;
    for (int j = 0; j < n; ++j)
        if (std::find(cols.begin(), cols.end(), j) == cols.end()) out.column_order.push_back(j);
    out.generator = (inverse * G).select_cols(out.column_order);
    return out;
}

}  // namespace grconv
