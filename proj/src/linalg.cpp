#include "orex/linalg.hpp"

#include <stdexcept>

namespace orex {

unsigned rref_in_place(Mat& m) {
    if (m.empty()) return 0;
    const size_t cols = m[0].size();
    for (const auto& row : m) {
        if (row.size() != cols) {
            throw std::invalid_argument("ragged matrix");
        }
    }
    unsigned rank = 0;
    for (size_t col = 0; col < cols && rank < m.size(); ++col) {
        size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        const Scalar inv = m[rank][col].inverse();
        for (size_t j = col; j < cols; ++j) m[rank][j] = inv * m[rank][j];
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            const Scalar f = m[i][col];
            for (size_t j = col; j < cols; ++j) {
                m[i][j] = m[i][j] - f * m[rank][j];
            }
        }
        ++rank;
    }
    return rank;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    const size_t rows = a.size();
    if (rows != b.size()) {
        throw std::invalid_argument("matrix/vector size mismatch");
    }
    const size_t cols = rows == 0 ? 0 : a[0].size();
    Mat aug(rows, Vec(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        if (a[i].size() != cols) {
            throw std::invalid_argument("ragged matrix");
        }
        for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    rref_in_place(aug);

    Vec x(cols, Scalar(0));
    for (size_t i = 0; i < rows; ++i) {
        size_t lead = cols + 1;
        for (size_t j = 0; j <= cols; ++j) {
            if (!aug[i][j].is_zero()) {
                lead = j;
                break;
            }
        }
        if (lead == cols + 1) continue;   // zero row
        if (lead == cols) return std::nullopt;  // 0 = nonzero
        x[lead] = aug[i][cols];
    }
    return x;
}

Vec RowSpace::reduce(Vec v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        const Scalar f = c;
        for (size_t j = 0; j < v.size(); ++j) {
            v[j] = v[j] - f * rows_[r][j];
        }
    }
    return v;
}

bool RowSpace::insert(Vec v) {
    if (!rows_.empty() && v.size() != rows_[0].size()) {
        throw std::invalid_argument("row length mismatch");
    }
    v = reduce(std::move(v));
    size_t pivot = v.size();
    for (size_t j = 0; j < v.size(); ++j) {
        if (!v[j].is_zero()) {
            pivot = j;
            break;
        }
    }
    if (pivot == v.size()) return false;
    const Scalar inv = v[pivot].inverse();
    for (auto& c : v) c = inv * c;
    // Clear the new pivot column in the existing rows to stay reduced.
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar f = rows_[r][pivot];
        if (f.is_zero()) continue;
        for (size_t j = 0; j < v.size(); ++j) {
            rows_[r][j] = rows_[r][j] - f * v[j];
        }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

bool RowSpace::contains(Vec v) const {
    if (rows_.empty()) {
        for (const auto& c : v) {
            if (!c.is_zero()) return false;
        }
        return true;
    }
    if (v.size() != rows_[0].size()) {
        throw std::invalid_argument("row length mismatch");
    }
    v = reduce(std::move(v));
    for (const auto& c : v) {
        if (!c.is_zero()) return false;
    }
    return true;
}

}  // namespace orex
