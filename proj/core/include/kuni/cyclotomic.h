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

#ifndef KUNI_CYCLOTOMIC_H
#define KUNI_CYCLOTOMIC_H

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace kuni {

/// Element of Z[w_L], w_L = exp(2 pi i / L), stored as the length-L integer
/// coefficient vector of sum_t c_t w_L^t. The representation is not unique;
/// zero testing reduces modulo the cyclotomic polynomial Phi_L.
class Cyclotomic {
   public:
    explicit Cyclotomic(uint32_t order);
    Cyclotomic(uint32_t order, std::vector<int64_t> coeffs);

    /// w_L^t
    static Cyclotomic root(uint32_t order, uint64_t t);
    static Cyclotomic integer(uint32_t order, int64_t value);

    uint32_t order() const {
        return static_cast<uint32_t>(coeffs_.size());
    }
    const std::vector<int64_t> &coeffs() const {
        return coeffs_;
    }

    Cyclotomic operator+(const Cyclotomic &other) const;
    Cyclotomic operator-(const Cyclotomic &other) const;
    Cyclotomic operator*(const Cyclotomic &other) const;
    Cyclotomic operator-() const;
    Cyclotomic &operator+=(const Cyclotomic &other);
    Cyclotomic &operator-=(const Cyclotomic &other);

    /// Complex conjugate: coefficient t moves to L - t mod L.
    Cyclotomic conj() const;

    /// Exact: true iff Phi_L divides sum_t c_t x^t.
    bool is_zero() const;
    /// is_zero(*this - other).
    bool equals(const Cyclotomic &other) const;

    /// Rational integer value when the element reduces to one.
    std::optional<int64_t> as_integer() const;

    std::complex<long double> to_complex() const;
    std::string to_string() const;

   private:
    void require_order(const Cyclotomic &other) const;
    std::vector<int64_t> coeffs_;
};

/// Phi_L with integer coefficients (low to high), computed by dividing
/// x^L - 1 by Phi_d for every proper divisor d of L. Cached per L.
std::shared_ptr<const std::vector<int64_t>> cyclotomic_polynomial(uint32_t order);

/// Remainder of the coefficient vector modulo Phi_L (length deg Phi_L).
std::vector<int64_t> reduce_mod_cyclotomic(std::span<const int64_t> coeffs, uint32_t order);

bool cyclotomic_is_zero(std::span<const int64_t> coeffs, uint32_t order);

/// dst += a * conj(b), all three of length L.
void accumulate_product_conj(std::span<int64_t> dst, std::span<const int64_t> a, std::span<const int64_t> b);

enum class CycOp { Add, Sub, Mul, ConjOfA, IsZeroOfA };

/// Errors: OrderMismatch for binary ops on different orders.
std::variant<Cyclotomic, bool> cyc_op(const Cyclotomic &a, const Cyclotomic &b, CycOp op);

}  // namespace kuni

#endif
