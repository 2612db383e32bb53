// Copyright 2026 The kuni Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kuni/matrix.h"

#include <istream>
#include <ostream>
#include <sstream>

#include "kuni/error.h"
#include "kuni/limits.h"

namespace kuni {

FFMatrix::FFMatrix(FieldPtr spec, size_t rows, size_t cols)
    : spec_(std::move(spec)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
}

FFMatrix::FFMatrix(FieldPtr spec, size_t rows, size_t cols, std::vector<uint32_t> entries)
    : spec_(std::move(spec)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error(ErrorKind::ShapeMismatch, "entry count does not match rows * cols");
    }
    for (auto e : entries_) {
        if (e >= spec_->q()) {
            throw Error(ErrorKind::OutOfRange, "matrix entry " + std::to_string(e) + " outside " + spec_->name());
        }
    }
}

FFMatrix FFMatrix::identity(FieldPtr spec, size_t n) {
    FFMatrix m(std::move(spec), n, n);
    for (size_t i = 0; i < n; i++) {
        m.entries_[i * n + i] = 1;
    }
    return m;
}

FFMatrix FFMatrix::from_rows(FieldPtr spec, const std::vector<std::vector<uint32_t>> &rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows[0].size();
    std::vector<uint32_t> entries;
    entries.reserve(r * c);
    for (const auto &row : rows) {
        if (row.size() != c) {
            throw Error(ErrorKind::ShapeMismatch, "ragged rows");
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return FFMatrix(std::move(spec), r, c, std::move(entries));
}

void FFMatrix::set(size_t r, size_t c, uint32_t value) {
    if (value >= spec_->q()) {
        throw Error(ErrorKind::OutOfRange, "matrix entry outside field");
    }
    entries_[r * cols_ + c] = value;
}

FFMatrix FFMatrix::transpose() const {
    FFMatrix t(spec_, cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            t.entries_[c * rows_ + r] = at(r, c);
        }
    }
    return t;
}

FFMatrix FFMatrix::operator*(const FFMatrix &other) const {
    if (cols_ != other.rows_) {
        throw Error(ErrorKind::ShapeMismatch, "matrix product dimensions");
    }
    const FieldSpec &f = *spec_;
    FFMatrix out(spec_, rows_, other.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t k = 0; k < cols_; k++) {
            uint32_t a = at(r, k);
            if (a == 0) {
                continue;
            }
            for (size_t c = 0; c < other.cols_; c++) {
                uint32_t &dst = out.entries_[r * other.cols_ + c];
                dst = f.add(dst, f.mul(a, other.at(k, c)));
            }
        }
    }
    return out;
}

FFMatrix FFMatrix::select_columns(std::span<const size_t> columns) const {
    FFMatrix out(spec_, rows_, columns.size());
    for (size_t r = 0; r < rows_; r++) {
        for (size_t j = 0; j < columns.size(); j++) {
            out.entries_[r * columns.size() + j] = at(r, columns[j]);
        }
    }
    return out;
}

FFMatrix FFMatrix::select_rows(std::span<const size_t> rows) const {
    FFMatrix out(spec_, rows.size(), cols_);
    for (size_t i = 0; i < rows.size(); i++) {
        for (size_t c = 0; c < cols_; c++) {
            out.entries_[i * cols_ + c] = at(rows[i], c);
        }
    }
    return out;
}

FFMatrix FFMatrix::delete_column(size_t column) const {
    std::vector<size_t> keep;
    for (size_t c = 0; c < cols_; c++) {
        if (c != column) {
            keep.push_back(c);
        }
    }
    return select_columns(keep);
}

FFMatrix FFMatrix::delete_row(size_t row) const {
    std::vector<size_t> keep;
    for (size_t r = 0; r < rows_; r++) {
        if (r != row) {
            keep.push_back(r);
        }
    }
    return select_rows(keep);
}

FFMatrix FFMatrix::hstack(const FFMatrix &other) const {
    if (rows_ != other.rows_) {
        throw Error(ErrorKind::ShapeMismatch, "hstack row counts differ");
    }
    FFMatrix out(spec_, rows_, cols_ + other.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out.entries_[r * out.cols_ + c] = at(r, c);
        }
        for (size_t c = 0; c < other.cols_; c++) {
            out.entries_[r * out.cols_ + cols_ + c] = other.at(r, c);
        }
    }
    return out;
}

std::vector<uint32_t> FFMatrix::left_multiply(std::span<const uint32_t> v) const {
    if (v.size() != rows_) {
        throw Error(ErrorKind::ShapeMismatch, "vector length does not match matrix rows");
    }
    const FieldSpec &f = *spec_;
    std::vector<uint32_t> out(cols_, 0);
    for (size_t r = 0; r < rows_; r++) {
        if (v[r] == 0) {
            continue;
        }
        for (size_t c = 0; c < cols_; c++) {
            out[c] = f.add(out[c], f.mul(v[r], at(r, c)));
        }
    }
    return out;
}

bool FFMatrix::operator==(const FFMatrix &other) const {
    return spec_->q() == other.spec_->q() && rows_ == other.rows_ && cols_ == other.cols_ &&
           entries_ == other.entries_;
}

RrefResult matrix_rref(const FFMatrix &m) {
    const FieldSpec &f = *m.spec();
    std::vector<uint32_t> a = m.entries();
    size_t rows = m.rows();
    size_t cols = m.cols();
    std::vector<size_t> pivots;
    size_t pivot_row = 0;
    for (size_t c = 0; c < cols && pivot_row < rows; c++) {
        size_t sel = rows;
        for (size_t r = pivot_row; r < rows; r++) {
            if (a[r * cols + c] != 0) {
                sel = r;
                break;
            }
        }
        if (sel == rows) {
            continue;
        }
        if (sel != pivot_row) {
            for (size_t j = 0; j < cols; j++) {
                std::swap(a[sel * cols + j], a[pivot_row * cols + j]);
            }
        }
        uint32_t inv = f.inv(a[pivot_row * cols + c]);
        for (size_t j = 0; j < cols; j++) {
            a[pivot_row * cols + j] = f.mul(a[pivot_row * cols + j], inv);
        }
        for (size_t r = 0; r < rows; r++) {
            uint32_t factor = a[r * cols + c];
            if (r == pivot_row || factor == 0) {
                continue;
            }
            for (size_t j = 0; j < cols; j++) {
                a[r * cols + j] = f.sub(a[r * cols + j], f.mul(factor, a[pivot_row * cols + j]));
            }
        }
        pivots.push_back(c);
        pivot_row++;
    }
    return {FFMatrix(m.spec(), rows, cols, std::move(a)), pivots.size(), pivots};
}

size_t matrix_rank(const FFMatrix &m) {
    return matrix_rref(m).rank;
}

DetInverse matrix_det_inv(const FFMatrix &m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::NotSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    const FieldSpec &f = *m.spec();
    size_t n = m.rows();
    // Eliminate on [M | I]; the determinant is the product of the pivots
    // times the sign of the row swaps.
    FFMatrix aug = m.hstack(FFMatrix::identity(m.spec(), n));
    std::vector<uint32_t> a = aug.entries();
    size_t w = 2 * n;
    uint32_t det = 1;
    for (size_t c = 0; c < n; c++) {
        size_t sel = n;
        for (size_t r = c; r < n; r++) {
            if (a[r * w + c] != 0) {
                sel = r;
                break;
            }
        }
        if (sel == n) {
            return {FieldElement(m.spec(), 0), std::nullopt};
        }
        if (sel != c) {
            for (size_t j = 0; j < w; j++) {
                std::swap(a[sel * w + j], a[c * w + j]);
            }
            det = f.neg(det);
        }
        uint32_t pivot = a[c * w + c];
        det = f.mul(det, pivot);
        uint32_t inv = f.inv(pivot);
        for (size_t j = 0; j < w; j++) {
            a[c * w + j] = f.mul(a[c * w + j], inv);
        }
        for (size_t r = 0; r < n; r++) {
            uint32_t factor = a[r * w + c];
            if (r == c || factor == 0) {
                continue;
            }
            for (size_t j = 0; j < w; j++) {
                a[r * w + j] = f.sub(a[r * w + j], f.mul(factor, a[c * w + j]));
            }
        }
    }
    FFMatrix inverse(m.spec(), n, n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            inverse.set(r, c, a[r * w + n + c]);
        }
    }
    return {FieldElement(m.spec(), det), std::move(inverse)};
}

FFMatrix left_kernel(const FFMatrix &m) {
    // v M = 0  <=>  M^T v^T = 0.
    const FieldSpec &f = *m.spec();
    RrefResult red = matrix_rref(m.transpose());
    size_t n = m.rows();
    std::vector<bool> is_pivot(n, false);
    for (auto p : red.pivots) {
        is_pivot[p] = true;
    }
    std::vector<uint32_t> basis;
    size_t dim = 0;
    for (size_t free_col = 0; free_col < n; free_col++) {
        if (is_pivot[free_col]) {
            continue;
        }
        std::vector<uint32_t> v(n, 0);
        v[free_col] = 1;
        for (size_t i = 0; i < red.pivots.size(); i++) {
            v[red.pivots[i]] = f.neg(red.rref.at(i, free_col));
        }
        basis.insert(basis.end(), v.begin(), v.end());
        dim++;
    }
    return FFMatrix(m.spec(), dim, n, std::move(basis));
}

std::optional<std::vector<uint32_t>> solve_left(const FFMatrix &m, std::span<const uint32_t> target) {
    if (target.size() != m.cols()) {
        throw Error(ErrorKind::ShapeMismatch, "target length does not match matrix columns");
    }
    // Solve M^T x = target via RREF of [M^T | target].
    FFMatrix rhs(m.spec(), m.cols(), 1, std::vector<uint32_t>(target.begin(), target.end()));
    RrefResult red = matrix_rref(m.transpose().hstack(rhs));
    size_t n = m.rows();
    std::vector<uint32_t> x(n, 0);
    for (size_t i = 0; i < red.pivots.size(); i++) {
        if (red.pivots[i] == n) {
            return std::nullopt;
        }
        x[red.pivots[i]] = red.rref.at(i, n);
    }
    return x;
}

size_t column_subset_rank(const FFMatrix &m, std::span<const size_t> columns, std::vector<uint32_t> &scratch) {
    const FieldSpec &f = *m.spec();
    size_t rows = m.rows();
    size_t cols = columns.size();
    scratch.resize(rows * cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t j = 0; j < cols; j++) {
            scratch[r * cols + j] = m.at(r, columns[j]);
        }
    }
    uint32_t *a = scratch.data();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; c++) {
        size_t sel = rows;
        for (size_t r = rank; r < rows; r++) {
            if (a[r * cols + c] != 0) {
                sel = r;
                break;
            }
        }
        if (sel == rows) {
            continue;
        }
        if (sel != rank) {
            for (size_t j = c; j < cols; j++) {
                std::swap(a[sel * cols + j], a[rank * cols + j]);
            }
        }
        uint32_t inv = f.inv(a[rank * cols + c]);
        for (size_t r = rank + 1; r < rows; r++) {
            uint32_t factor = a[r * cols + c];
            if (factor == 0) {
                continue;
            }
            factor = f.mul(factor, inv);
            for (size_t j = c; j < cols; j++) {
                a[r * cols + j] = f.sub(a[r * cols + j], f.mul(factor, a[rank * cols + j]));
            }
        }
        rank++;
    }
    return rank;
}

void write_matrix(std::ostream &out, const FFMatrix &m) {
    out << m.rows() << ' ' << m.cols() << ' ' << m.spec()->p() << ' ' << m.spec()->m() << '\n';
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            if (c) {
                out << ' ';
            }
            out << m.at(r, c);
        }
        out << '\n';
    }
}

std::string format_matrix(const FFMatrix &m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

FFMatrix read_matrix(std::istream &in) {
    size_t rows = 0;
    size_t cols = 0;
    uint32_t p = 0;
    uint32_t m = 0;
    if (!(in >> rows >> cols >> p >> m)) {
        throw Error(ErrorKind::ParseError, "expected matrix header 'rows cols p m'");
    }
    if (!is_prime(p) || m == 0) {
        throw Error(ErrorKind::ParseError, "matrix header names no valid field");
    }
    FieldPtr spec = make_field_of_order(checked_pow(p, m));
    std::vector<uint32_t> entries(rows * cols);
    for (auto &e : entries) {
        long long v = 0;
        if (!(in >> v)) {
            throw Error(ErrorKind::ParseError, "matrix body truncated");
        }
        if (v < 0 || static_cast<unsigned long long>(v) >= spec->q()) {
            throw Error(ErrorKind::ParseError, "matrix entry " + std::to_string(v) + " outside " + spec->name());
        }
        e = static_cast<uint32_t>(v);
    }
    return FFMatrix(spec, rows, cols, std::move(entries));
}

FFMatrix parse_matrix(const std::string &text) {
    std::istringstream in(text);
    return read_matrix(in);
}

}  // namespace kuni
