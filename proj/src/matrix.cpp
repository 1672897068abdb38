#include "grconv/matrix.hpp"

#include <stdexcept>

namespace grconv {

Mat::Mat(FieldPtr field, int rows, int cols) : f_(std::move(field)), rows_(rows), cols_(cols) {
    e_.assign((size_t)rows * cols, f_->zero());
}

Mat Mat::identity(const FieldPtr& field, int n) {
    Mat m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

Mat Mat::select_rows(const std::vector<int>& idx) const {
    Mat m(f_, (int)idx.size(), cols_);
    for (size_t r = 0; r < idx.size(); ++r)
        for (int j = 0; j < cols_; ++j) m.at((int)r, j) = at(idx[r], j);
    return m;
}

Mat Mat::select_cols(const std::vector<int>& idx) const {
    Mat m(f_, rows_, (int)idx.size());
    for (int i = 0; i < rows_; ++i)
        for (size_t c = 0; c < idx.size(); ++c) m.at(i, (int)c) = at(i, idx[c]);
    return m;
}

Mat Mat::delete_cols(const std::vector<int>& idx) const {
    std::vector<bool> drop(cols_, false);
    for (int j : idx) drop[j] = true;
    std::vector<int> keep;
    for (int j = 0; j < cols_; ++j)
        if (!drop[j]) keep.push_back(j);
    return select_cols(keep);
}

Mat Mat::transpose() const {
    Mat m(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

int Mat::rank() const {
    Mat w = *this;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (!w.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(w.at(pivot, j), w.at(rank, j));
        FieldElement inv = field_inv(w.at(rank, col));
        for (int j = col; j < cols_; ++j) w.at(rank, j) = w.at(rank, j) * inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || w.at(r, col).is_zero()) continue;
            FieldElement c = w.at(r, col);
            for (int j = col; j < cols_; ++j) w.at(r, j) = w.at(r, j) - c * w.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::optional<Mat> Mat::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Mat w = *this;
    Mat inv = identity(f_, rows_);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int r = col; r < rows_; ++r)
            if (!w.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        for (int j = 0; j < cols_; ++j) {
            std::swap(w.at(pivot, j), w.at(col, j));
            std::swap(inv.at(pivot, j), inv.at(col, j));
        }
        FieldElement s = field_inv(w.at(col, col));
        for (int j = 0; j < cols_; ++j) {
            w.at(col, j) = w.at(col, j) * s;
            inv.at(col, j) = inv.at(col, j) * s;
        }
        for (int r = 0; r < rows_; ++r) {
            if (r == col || w.at(r, col).is_zero()) continue;
            FieldElement c = w.at(r, col);
            for (int j = 0; j < cols_; ++j) {
                w.at(r, j) = w.at(r, j) - c * w.at(col, j);
                inv.at(r, j) = inv.at(r, j) - c * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::vector<std::vector<FieldElement>> Mat::null_space() const {
    Mat w = *this;
    std::vector<int> pivot_col_of_row;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (!w.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(w.at(pivot, j), w.at(rank, j));
        FieldElement inv = field_inv(w.at(rank, col));
        for (int j = col; j < cols_; ++j) w.at(rank, j) = w.at(rank, j) * inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || w.at(r, col).is_zero()) continue;
            FieldElement c = w.at(r, col);
            for (int j = col; j < cols_; ++j) w.at(r, j) = w.at(r, j) - c * w.at(rank, j);
        }
        pivot_col_of_row.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivot_col_of_row) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (int free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<FieldElement> v(cols_, f_->zero());
        v[free_col] = f_->one();
        for (int r = 0; r < rank; ++r) v[pivot_col_of_row[r]] = -w.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix size mismatch");
    Mat m = a;
    for (size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = m.e_[i] + b.e_[i];
    return m;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch in product");
    Mat m(a.f_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                m.at(i, j) = m.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return m;
}

Mat operator*(const FieldElement& c, const Mat& a) {
    Mat m = a;
    for (auto& x : m.e_) x = c * x;
    return m;
}

bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::string Mat::str() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) out += " ";
            out += at(i, j).str();
        }
        out += "\n";
    }
    return out;
}

}  // namespace grconv
