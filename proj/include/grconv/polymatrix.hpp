#pragma once

#include <map>

#include "grconv/matrix.hpp"

namespace grconv {

/// Univariate Laurent polynomial over a field; exponents may be negative.
class ScalarPoly {
public:
    ScalarPoly() = default;
    explicit ScalarPoly(FieldPtr field) : f_(std::move(field)) {}
    static ScalarPoly constant(const FieldElement& c);
    static ScalarPoly term(const FieldElement& c, int exponent);

    const FieldPtr& field() const { return f_; }
    const std::map<int, FieldElement>& terms() const { return t_; }
    FieldElement coeff(int e) const;
    void set_coeff(int e, const FieldElement& c);

    bool is_zero() const { return t_.empty(); }
    bool is_monomial() const { return t_.size() == 1; }
    int degree() const;   // max exponent, -1 for zero
    int min_exp() const;  // throws on zero
    ScalarPoly shifted(int s) const;
    /// Hamming weight: number of nonzero coefficients.
    int weight() const { return (int)t_.size(); }

    friend ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b);
    friend ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b);
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
    friend ScalarPoly operator*(const FieldElement& c, const ScalarPoly& a);
    friend bool operator==(const ScalarPoly& a, const ScalarPoly& b);
    friend bool operator!=(const ScalarPoly& a, const ScalarPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "z") const;

private:
    FieldPtr f_;
    std::map<int, FieldElement> t_;
};

/// Monic gcd over F[z] by the Euclidean algorithm (inputs are shifted to
/// ordinary polynomials first; a monomial factor z^l is preserved).
ScalarPoly poly_gcd(const ScalarPoly& a, const ScalarPoly& b);

/// Matrix of univariate polynomials, stored as one coefficient matrix per
/// exponent: M(z) = sum_e M_e z^e.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(FieldPtr field, int rows, int cols);
    static PolyMatrix identity(const FieldPtr& field, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return f_; }
    const std::map<int, Mat>& terms() const { return t_; }

    Mat coeff(int e) const;
    void set_coeff(int e, const Mat& m);
    void add_term(int e, const Mat& m);
    ScalarPoly entry(int i, int j) const;

    bool is_zero() const { return t_.empty(); }
    bool is_identity() const;
    int max_exp() const;  // 0 for zero matrix
    int min_exp() const;

    PolyMatrix shifted(int s) const;
    PolyMatrix select_rows(const std::vector<int>& idx) const;
    PolyMatrix select_cols(const std::vector<int>& idx) const;
    PolyMatrix delete_cols(const std::vector<int>& idx) const;

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

    std::string str() const;

private:
    void normalize();

    FieldPtr f_;
    int rows_ = 0, cols_ = 0;
    std::map<int, Mat> t_;
};

/// Determinant by expansion with memoization over column subsets.
ScalarPoly poly_det(const PolyMatrix& m);

/// All k x k minors of a k x n polynomial matrix (k = rows), one per
/// column subset, in mask order.
std::vector<ScalarPoly> full_size_minors(const PolyMatrix& m);

/// Max degree over the full-size minors; requires nonnegative exponents.
int max_minor_degree(const PolyMatrix& m);

/// Monic gcd of all nonzero full-size minors (zero if all minors vanish).
ScalarPoly minor_gcd(const PolyMatrix& m);

}  // namespace grconv
