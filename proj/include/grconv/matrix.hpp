#pragma once

#include <optional>
#include <vector>

#include "grconv/field.hpp"

namespace grconv {

/// Dense matrix of exact field elements. Rank and inverse use exact
/// Gaussian elimination (any nonzero entry is a valid pivot).
class Mat {
public:
    Mat() = default;
    Mat(FieldPtr field, int rows, int cols);
    static Mat identity(const FieldPtr& field, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return f_; }

    FieldElement& at(int i, int j) { return e_[i * cols_ + j]; }
    const FieldElement& at(int i, int j) const { return e_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_identity() const;

    Mat select_rows(const std::vector<int>& idx) const;
    Mat select_cols(const std::vector<int>& idx) const;
    Mat delete_cols(const std::vector<int>& idx) const;
    Mat transpose() const;

    int rank() const;
    std::optional<Mat> inverse() const;
    /// Basis of the right null space {v : M v = 0}, one column per vector.
    std::vector<std::vector<FieldElement>> null_space() const;

    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator*(const FieldElement& c, const Mat& a);
    friend bool operator==(const Mat& a, const Mat& b);
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    std::string str() const;

private:
    FieldPtr f_;
    int rows_ = 0, cols_ = 0;
    std::vector<FieldElement> e_;
};

}  // namespace grconv
