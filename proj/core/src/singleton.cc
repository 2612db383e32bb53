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

#include "kuni/singleton.h"

#include <string>

#include "kuni/combinatorics.h"
#include "kuni/error.h"
#include "kuni/limits.h"

namespace kuni {

SingletonArray::SingletonArray(FieldPtr spec) : spec_(std::move(spec)), gamma_(spec_->primitive()) {
    const FieldSpec &f = *spec_;
    a_.assign(f.q() > 2 ? f.q() - 1 : 1, 0);
    for (size_t i = 1; i + 1 < f.q(); i++) {
        a_[i] = f.inv(f.sub(1, f.pow(gamma_, i)));
    }
}

uint32_t SingletonArray::at(size_t r, size_t c) const {
    if (!contains(r, c)) {
        throw Error(ErrorKind::OutOfRange,
                    "(" + std::to_string(r) + "," + std::to_string(c) + ") outside the Singleton array");
    }
    if (r == 0 || c == 0) {
        return 1;
    }
    return a_[r + c - 1];
}

uint32_t SingletonArray::a(size_t i) const {
    if (i == 0 || i + 1 >= size()) {
        throw Error(ErrorKind::OutOfRange, "a_" + std::to_string(i) + " undefined");
    }
    return a_[i];
}

FFMatrix SingletonArray::block(size_t rows, size_t cols) const {
    FFMatrix out(spec_, rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            out.set(r, c, at(r, c));
        }
    }
    return out;
}

SingletonArray singleton_array(FieldPtr spec) {
    return SingletonArray(std::move(spec));
}

uint64_t verify_singleton_block(const SingletonArray &array, size_t rows, size_t cols) {
    FFMatrix a = array.block(rows, cols);
    uint64_t checks = 0;
    std::vector<uint32_t> scratch;
    for (size_t t = 1; t <= std::min(rows, cols); t++) {
        std::vector<size_t> rsel(t);
        for (size_t i = 0; i < t; i++) {
            rsel[i] = i;
        }
        do {
            FFMatrix sub = a.select_rows(rsel);
            std::vector<size_t> csel(t);
            for (size_t i = 0; i < t; i++) {
                csel[i] = i;
            }
            do {
                checks++;
                if (column_subset_rank(sub, csel, scratch) != t) {
                    throw Error(ErrorKind::CertificationFailed, "singular square submatrix in Singleton array block");
                }
            } while (next_combination(csel, cols));
        } while (next_combination(rsel, rows));
    }
    return checks;
}

namespace {

void certify_or_throw(const LinearCode &code) {
    size_t n = code.n();
    size_t k = code.k();
    MdsMethod method = binomial(n, k) <= kMaxDeterminants ? MdsMethod::Columns : MdsMethod::Distance;
    if (!is_mds(code, method).is_mds) {
        throw Error(ErrorKind::CertificationFailed, "constructed code is not MDS");
    }
}

}  // namespace

LinearCode mds_from_singleton(size_t n, size_t k, const FieldPtr &spec) {
    if (k == 0 || k > n || n > static_cast<size_t>(spec->q()) + 1) {
        throw Error(ErrorKind::OutOfRange, "[" + std::to_string(n) + "," + std::to_string(k) + "]_" +
                                               std::to_string(spec->q()) + " is outside the Singleton construction");
    }
    SingletonArray array(spec);
    FFMatrix g = FFMatrix::identity(spec, k).hstack(array.block(k, n - k));
    LinearCode code(std::move(g));
    certify_or_throw(code);
    return code;
}

LinearCode hyperoval_code(const FieldPtr &spec) {
    const FieldSpec &f = *spec;
    if (f.p() != 2) {
        throw Error(ErrorKind::OutOfRange, "hyperovals exist only in characteristic 2");
    }
    size_t n = f.q() + 2;
    FFMatrix g(spec, 3, n);
    for (uint32_t t = 0; t < f.q(); t++) {
        g.set(0, t, 1);
        g.set(1, t, t);
        g.set(2, t, f.mul(t, t));
    }
    g.set(1, f.q(), 1);
    g.set(2, f.q() + 1, 1);
    LinearCode code(std::move(g));
    certify_or_throw(code);
    return code;
}

LinearCode mds_code(size_t n, size_t k, const FieldPtr &spec) {
    uint32_t q = spec->q();
    if (!mds_exists(n, k, q)) {
        throw Error(ErrorKind::OutOfRange, "no known MDS [" + std::to_string(n) + "," + std::to_string(k) + "]_" +
                                               std::to_string(q) + " code");
    }
    if (n <= static_cast<size_t>(q) + 1) {
        return mds_from_singleton(n, k, spec);
    }
    if (k == n) {
        return LinearCode(FFMatrix::identity(spec, n));
    }
    if (k == 1) {
        return LinearCode(FFMatrix(spec, 1, n, std::vector<uint32_t>(n, 1)));
    }
    if (k == n - 1) {
        FFMatrix g = FFMatrix::identity(spec, k).hstack(FFMatrix(spec, k, 1, std::vector<uint32_t>(k, spec->neg(1))));
        return LinearCode(std::move(g));
    }
    // Remaining case: even q, n = q + 2, k in {3, q - 1}.
    LinearCode hyper = hyperoval_code(spec);
    return k == 3 ? hyper : dual_code(hyper);
}

}  // namespace kuni
