#include "grconv/polymatrix.hpp"

#include <stdexcept>

namespace grconv {

ScalarPoly ScalarPoly::constant(const FieldElement& c) { return term(c, 0); }

ScalarPoly ScalarPoly::term(const FieldElement& c, int exponent) {
    ScalarPoly p(c.field());
    if (!c.is_zero()) p.t_[exponent] = c;
    return p;
}

FieldElement ScalarPoly::coeff(int e) const {
    auto it = t_.find(e);
    if (it != t_.end()) return it->second;
    return f_->zero();
}

void ScalarPoly::set_coeff(int e, const FieldElement& c) {
    if (c.is_zero())
        t_.erase(e);
    else
        t_[e] = c;
}

int ScalarPoly::degree() const { return t_.empty() ? -1 : t_.rbegin()->first; }

int ScalarPoly::min_exp() const {
    if (t_.empty()) throw std::invalid_argument("min_exp of zero polynomial");
    return t_.begin()->first;
}

ScalarPoly ScalarPoly::shifted(int s) const {
    ScalarPoly p(f_);
    for (const auto& [e, c] : t_) p.t_[e + s] = c;
    return p;
}

ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly r = a;
    if (!r.f_) r.f_ = b.f_;
    for (const auto& [e, c] : b.t_) r.set_coeff(e, r.coeff(e) + c);
    return r;
}

ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly r = a;
    if (!r.f_) r.f_ = b.f_;
    for (const auto& [e, c] : b.t_) r.set_coeff(e, r.coeff(e) - c);
    return r;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly r(a.f_ ? a.f_ : b.f_);
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) {
            FieldElement prod = ca * cb;
            if (prod.is_zero()) continue;
            r.set_coeff(ea + eb, r.coeff(ea + eb) + prod);
        }
    return r;
}

ScalarPoly operator*(const FieldElement& c, const ScalarPoly& a) {
    ScalarPoly r(a.f_);
    for (const auto& [e, x] : a.t_) {
        FieldElement prod = c * x;
        if (!prod.is_zero()) r.t_[e] = prod;
    }
    return r;
}

bool operator==(const ScalarPoly& a, const ScalarPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (const auto& [e, c] : a.t_) {
        auto it = b.t_.find(e);
        if (it == b.t_.end() || !(it->second == c)) return false;
    }
    return true;
}

std::string ScalarPoly::str(const std::string& var) const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : t_) {
        std::string cs = c.str();
        bool compound = cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos;
        std::string t;
        if (e == 0) {
            t = cs;
        } else {
            if (cs == "1")
                t = "";
            else
                t = (compound ? "(" + cs + ")" : cs) + "*";
            t += var;
            if (e != 1) t += "^" + std::to_string(e);
        }
        if (out.empty()) {
            out = t;
        } else if (t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

ScalarPoly poly_gcd(const ScalarPoly& a, const ScalarPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const FieldPtr& f = a.field();
    // work with nonnegative exponents; the common monomial factor carries the
    // min of the two valuations
    int shift = std::min(a.min_exp(), b.min_exp());
    auto to_vec = [&](const ScalarPoly& p) {
        std::vector<FieldElement> v(p.degree() - shift + 1, f->zero());
        for (const auto& [e, c] : p.terms()) v[e - shift] = c;
        return v;
    };
    int va = a.min_exp() - shift, vb = b.min_exp() - shift;
    int common_val = std::min(va, vb);
    auto strip = [&](std::vector<FieldElement> v, int val) {
        v.erase(v.begin(), v.begin() + val);
        return v;
    };
    std::vector<FieldElement> r0 = strip(to_vec(a), a.min_exp() - shift);
    std::vector<FieldElement> r1 = strip(to_vec(b), b.min_exp() - shift);
    auto trim = [](std::vector<FieldElement>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        // r0 mod r1
        FieldElement lead_inv = field_inv(r1.back());
        while (r0.size() >= r1.size() && !r0.empty()) {
            FieldElement c = r0.back() * lead_inv;
            size_t off = r0.size() - r1.size();
            for (size_t i = 0; i < r1.size(); ++i) r0[off + i] = r0[off + i] - c * r1[i];
            trim(r0);
        }
        std::swap(r0, r1);
    }
    ScalarPoly g(f);
    if (r0.empty()) return g;
    FieldElement lead_inv = field_inv(r0.back());
    for (size_t i = 0; i < r0.size(); ++i) {
        FieldElement c = r0[i] * lead_inv;
        if (!c.is_zero()) g.set_coeff((int)i + common_val + shift, c);
    }
    return g;
}

PolyMatrix::PolyMatrix(FieldPtr field, int rows, int cols)
    : f_(std::move(field)), rows_(rows), cols_(cols) {}

PolyMatrix PolyMatrix::identity(const FieldPtr& field, int n) {
    PolyMatrix m(field, n, n);
    m.t_[0] = Mat::identity(field, n);
    return m;
}

Mat PolyMatrix::coeff(int e) const {
    auto it = t_.find(e);
    if (it != t_.end()) return it->second;
    return Mat(f_, rows_, cols_);
}

void PolyMatrix::set_coeff(int e, const Mat& m) {
    if (m.rows() != rows_ || m.cols() != cols_) throw std::invalid_argument("coefficient size mismatch");
    if (m.is_zero())
        t_.erase(e);
    else
        t_[e] = m;
}

void PolyMatrix::add_term(int e, const Mat& m) { set_coeff(e, coeff(e) + m); }

ScalarPoly PolyMatrix::entry(int i, int j) const {
    ScalarPoly p(f_);
    for (const auto& [e, m] : t_)
        if (!m.at(i, j).is_zero()) p.set_coeff(e, m.at(i, j));
    return p;
}

bool PolyMatrix::is_identity() const {
    return t_.size() == 1 && t_.count(0) == 1 && t_.at(0).is_identity();
}

int PolyMatrix::max_exp() const { return t_.empty() ? 0 : t_.rbegin()->first; }
int PolyMatrix::min_exp() const { return t_.empty() ? 0 : t_.begin()->first; }

PolyMatrix PolyMatrix::shifted(int s) const {
    PolyMatrix m(f_, rows_, cols_);
    for (const auto& [e, mat] : t_) m.t_[e + s] = mat;
    return m;
}

PolyMatrix PolyMatrix::select_rows(const std::vector<int>& idx) const {
    PolyMatrix m(f_, (int)idx.size(), cols_);
    for (const auto& [e, mat] : t_) m.set_coeff(e, mat.select_rows(idx));
    return m;
}

PolyMatrix PolyMatrix::select_cols(const std::vector<int>& idx) const {
    PolyMatrix m(f_, rows_, (int)idx.size());
    for (const auto& [e, mat] : t_) m.set_coeff(e, mat.select_cols(idx));
    return m;
}

PolyMatrix PolyMatrix::delete_cols(const std::vector<int>& idx) const {
    std::vector<bool> drop(cols_, false);
    for (int j : idx) drop[j] = true;
    std::vector<int> keep;
    for (int j = 0; j < cols_; ++j)
        if (!drop[j]) keep.push_back(j);
    return select_cols(keep);
}

void PolyMatrix::normalize() {
    for (auto it = t_.begin(); it != t_.end();) {
        if (it->second.is_zero())
            it = t_.erase(it);
        else
            ++it;
    }
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("polynomial matrix size mismatch");
    PolyMatrix r = a;
    for (const auto& [e, m] : b.t_) r.add_term(e, m);
    return r;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("polynomial matrix size mismatch in product");
    PolyMatrix r(a.f_, a.rows_, b.cols_);
    for (const auto& [ea, ma] : a.t_)
        for (const auto& [eb, mb] : b.t_) r.add_term(ea + eb, ma * mb);
    r.normalize();
    return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    if (a.t_.size() != b.t_.size()) return false;
    for (const auto& [e, m] : a.t_) {
        auto it = b.t_.find(e);
        if (it == b.t_.end() || !(it->second == m)) return false;
    }
    return true;
}

std::string PolyMatrix::str() const {
    std::string out;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out += "[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + entry(i, j).str() + "\n";
    return out;
}

namespace {

// determinants of all column-subset minors (rows taken in order 0..|S|-1),
// computed by subset dynamic programming
std::vector<ScalarPoly> subset_minors(const PolyMatrix& m, int k) {
    int n = m.cols();
    std::vector<std::vector<ScalarPoly>> by_size(k + 1);
    std::vector<std::vector<uint32_t>> masks(k + 1);
    std::vector<ScalarPoly> table(1u << n);
    ScalarPoly one = ScalarPoly::constant(m.field()->one());
    table[0] = one;
    // enumerate masks by popcount to fill rows progressively
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size > k) continue;
        int row = size - 1;
        ScalarPoly det(m.field());
        int sign_toggle = 0;
        // expand along the last row of the submatrix
        int pos = 0;
        for (int c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            ScalarPoly e = m.entry(row, c);
            if (!e.is_zero()) {
                ScalarPoly sub = table[mask & ~(1u << c)];
                ScalarPoly contrib = e * sub;
                // sign (-1)^(row + pos); row parity is fixed per mask size
                if ((row + pos) % 2 == 1) contrib = ScalarPoly(m.field()) - contrib;
                det = det + contrib;
            }
            ++pos;
        }
        (void)sign_toggle;
        table[mask] = det;
    }
    std::vector<ScalarPoly> out;
    for (uint32_t mask = 0; mask < (1u << n); ++mask)
        if (__builtin_popcount(mask) == k) out.push_back(table[mask]);
    return out;
}

}  // namespace

ScalarPoly poly_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    auto minors = subset_minors(m, m.rows());
    return minors.back();  // the full mask is the last one of size k = n
}

std::vector<ScalarPoly> full_size_minors(const PolyMatrix& m) {
    if (m.rows() > m.cols()) throw std::invalid_argument("more rows than columns");
    return subset_minors(m, m.rows());
}

int max_minor_degree(const PolyMatrix& m) {
    int best = 0;
    for (const auto& d : full_size_minors(m))
        if (!d.is_zero()) best = std::max(best, d.degree());
    return best;
}

ScalarPoly minor_gcd(const PolyMatrix& m) {
    ScalarPoly g(m.field());
    for (const auto& d : full_size_minors(m)) {
        if (d.is_zero()) continue;
        g = poly_gcd(g, d);
        if (g.is_monomial() && g.min_exp() == 0) break;  // gcd already 1ish
    }
    return g;
}

}  // namespace grconv
