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

#ifndef KUNI_SINGLETON_H
#define KUNI_SINGLETON_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kuni/linear_code.h"

namespace kuni {

/// Triangular Cauchy-type array over GF(q): row 0 and column 0 are all ones,
/// entry (r, c) for r, c >= 1 is a_{r+c-1} with a_i = 1 / (1 - gamma^i), and
/// row r holds q - r entries (row 0 holds q). Every square submatrix lying
/// inside the triangle is nonsingular.
class SingletonArray {
   public:
    explicit SingletonArray(FieldPtr spec);

    const FieldPtr &spec() const {
        return spec_;
    }
    uint32_t gamma() const {
        return gamma_;
    }
    size_t size() const {
        return spec_->q();
    }
    size_t row_length(size_t r) const {
        return r == 0 ? size() : size() - r;
    }
    bool contains(size_t r, size_t c) const {
        return r < size() && c < row_length(r);
    }
    uint32_t at(size_t r, size_t c) const;
    /// a_i for 1 <= i <= q - 2.
    uint32_t a(size_t i) const;

    /// Top-left rows x cols block. Errors: OutOfRange if it leaves the triangle.
    FFMatrix block(size_t rows, size_t cols) const;

   private:
    FieldPtr spec_;
    uint32_t gamma_;
    std::vector<uint32_t> a_;
};

SingletonArray singleton_array(FieldPtr spec);

/// Every square submatrix of the rows x cols top-left block is nonsingular.
/// Returns the number of determinants checked; throws CertificationFailed
/// naming the first singular one.
uint64_t verify_singleton_block(const SingletonArray &array, size_t rows, size_t cols);

/// MDS [n, k]_q code with G = [I_k | A], A the top-left k x (n - k) block of
/// the Singleton array, certified before return.
/// Errors: OutOfRange (n > q + 1, k == 0 or k > n), TooLarge (certification
/// beyond caps).
LinearCode mds_from_singleton(size_t n, size_t k, const FieldPtr &spec);

/// [q + 2, 3]_q code of a hyperoval for even q: columns (1, t, t^2) for all t
/// plus (0, 1, 0) and (0, 0, 1).
LinearCode hyperoval_code(const FieldPtr &spec);

/// Any MDS [n, k]_q code in the known existence intervals: repetition and
/// parity codes, Singleton-array codes for n <= q + 1, and the hyperoval code
/// (or its dual) for n = q + 2 with even q. Errors: OutOfRange.
LinearCode mds_code(size_t n, size_t k, const FieldPtr &spec);

}  // namespace kuni

#endif
