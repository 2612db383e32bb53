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

#ifndef KUNI_MATRIX_H
#define KUNI_MATRIX_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kuni/field.h"

namespace kuni {

/// Dense row-major matrix over one GF(q). Entries are stored as element
/// reprs; every entry shares the matrix's FieldSpec.
class FFMatrix {
   public:
    FFMatrix(FieldPtr spec, size_t rows, size_t cols);
    FFMatrix(FieldPtr spec, size_t rows, size_t cols, std::vector<uint32_t> entries);

    static FFMatrix identity(FieldPtr spec, size_t n);
    static FFMatrix from_rows(FieldPtr spec, const std::vector<std::vector<uint32_t>> &rows);

    const FieldPtr &spec() const {
        return spec_;
    }
    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    uint32_t at(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }
    void set(size_t r, size_t c, uint32_t value);
    FieldElement element(size_t r, size_t c) const {
        return {spec_, at(r, c)};
    }
    std::span<const uint32_t> row(size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    const std::vector<uint32_t> &entries() const {
        return entries_;
    }

    FFMatrix transpose() const;
    FFMatrix operator*(const FFMatrix &other) const;
    FFMatrix select_columns(std::span<const size_t> columns) const;
    FFMatrix select_rows(std::span<const size_t> rows) const;
    FFMatrix delete_column(size_t column) const;
    FFMatrix delete_row(size_t row) const;
    /// [this | other]
    FFMatrix hstack(const FFMatrix &other) const;
    /// Row vector times matrix: v (length rows) -> v * M (length cols).
    std::vector<uint32_t> left_multiply(std::span<const uint32_t> v) const;

    bool operator==(const FFMatrix &other) const;

   private:
    FieldPtr spec_;
    size_t rows_;
    size_t cols_;
    std::vector<uint32_t> entries_;
};

struct RrefResult {
    FFMatrix rref;
    size_t rank;
    std::vector<size_t> pivots;
};

/// Reduced row-echelon form with first-nonzero pivoting.
RrefResult matrix_rref(const FFMatrix &m);
size_t matrix_rank(const FFMatrix &m);

struct DetInverse {
    FieldElement det;
    std::optional<FFMatrix> inverse;
};

/// Determinant by Gaussian elimination; the inverse is present iff det != 0.
/// Errors: NotSquare.
DetInverse matrix_det_inv(const FFMatrix &m);

/// Basis of the left kernel {v : v M = 0}, one vector per row of the result
/// (rows x dim). The basis is the standard one read off the RREF of M^T.
FFMatrix left_kernel(const FFMatrix &m);

/// Some v with v M = target, or nullopt when target is not in the image of
/// v -> v M.
std::optional<std::vector<uint32_t>> solve_left(const FFMatrix &m, std::span<const uint32_t> target);

/// Rank of the submatrix formed by the given columns. `scratch` is reused
/// between calls to keep hot loops allocation-free.
size_t column_subset_rank(const FFMatrix &m, std::span<const size_t> columns, std::vector<uint32_t> &scratch);

/// Text format: "rows cols p m" then one line per row of space-separated
/// reprs. Parsing builds the field with its default modulus.
std::string format_matrix(const FFMatrix &m);
void write_matrix(std::ostream &out, const FFMatrix &m);
FFMatrix read_matrix(std::istream &in);
FFMatrix parse_matrix(const std::string &text);

}  // namespace kuni

#endif
