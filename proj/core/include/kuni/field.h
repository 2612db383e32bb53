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

#ifndef KUNI_FIELD_H
#define KUNI_FIELD_H

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace kuni {

/// GF(p^m) with elements encoded as integers in [0, q): the coefficient
/// vector (c_0, ..., c_{m-1}) of the polynomial basis maps to
/// c_0 + c_1 p + ... + c_{m-1} p^{m-1}. For GF(4) with x^2 = x + 1 this gives
/// {0, 1, x, 1 + x} -> {0, 1, 2, 3}.
///
/// Immutable once built; share through FieldPtr.
class FieldSpec {
   public:
    uint32_t p() const {
        return p_;
    }
    uint32_t m() const {
        return m_;
    }
    uint32_t q() const {
        return q_;
    }
    /// Monic modulus, low-to-high coefficients, length m + 1.
    const std::vector<uint32_t> &modulus() const {
        return modulus_;
    }
    bool is_prime_field() const {
        return m_ == 1;
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        if (p_ == 2) {
            return a ^ b;
        }
        if (m_ == 1) {
            uint32_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (!add_table_.empty()) {
            return add_table_[static_cast<size_t>(a) * q_ + b];
        }
        return add_digits(a, b);
    }
    uint32_t neg(uint32_t a) const;
    uint32_t sub(uint32_t a, uint32_t b) const {
        return add(a, neg(b));
    }
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) {
            return 0;
        }
        return exp_[log_[a] + log_[b]];
    }
    /// Throws DivisionByZero for a == 0.
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const;
    uint32_t pow(uint32_t a, uint64_t exponent) const;

    /// Least-repr generator of the multiplicative group.
    uint32_t primitive() const {
        return primitive_;
    }
    /// Multiplicative order of a nonzero element.
    uint64_t order(uint32_t a) const;

    std::string name() const;

   private:
    friend std::shared_ptr<const FieldSpec> make_field(uint32_t, uint32_t, std::optional<std::vector<uint32_t>>);
    FieldSpec(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);

    uint32_t add_digits(uint32_t a, uint32_t b) const;
    uint32_t poly_mul(uint32_t a, uint32_t b) const;

    uint32_t p_;
    uint32_t m_;
    uint32_t q_;
    std::vector<uint32_t> modulus_;
    uint32_t primitive_ = 1;
    std::vector<uint32_t> exp_;
    std::vector<uint32_t> log_;
    std::vector<uint32_t> neg_;
    std::vector<uint16_t> add_table_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

bool is_prime(uint64_t n);

/// Builds GF(p^m). Without an explicit modulus the built-in table is used
/// (x^2+x+1, x^3+x+1, x^2+1, x^4+x+1 for q = 4, 8, 9, 16), falling back to
/// the lexicographically least irreducible monic polynomial. Every modulus
/// is checked for irreducibility.
///
/// Errors: NonPrimeP, ReducibleModulus, UnsupportedSize (q > 2^16),
/// OutOfRange (malformed modulus or m == 0).
FieldPtr make_field(uint32_t p, uint32_t m, std::optional<std::vector<uint32_t>> modulus = std::nullopt);

/// GF(q) for a prime power q with the default modulus.
FieldPtr make_field_of_order(uint64_t q);

/// Lexicographically least monic irreducible polynomial of degree m over
/// GF(p), ordered by c_0 + c_1 p + ... + c_{m-1} p^{m-1}.
std::vector<uint32_t> least_irreducible(uint32_t p, uint32_t m);

bool is_irreducible(uint32_t p, const std::vector<uint32_t> &monic);

/// Prime power decomposition, nullopt when q is not a prime power.
std::optional<std::pair<uint32_t, uint32_t>> prime_power(uint64_t q);

class FieldElement {
   public:
    FieldElement(FieldPtr spec, uint32_t repr);

    const FieldPtr &spec() const {
        return spec_;
    }
    uint32_t repr() const {
        return repr_;
    }
    bool is_zero() const {
        return repr_ == 0;
    }

    FieldElement operator+(const FieldElement &other) const;
    FieldElement operator-(const FieldElement &other) const;
    FieldElement operator*(const FieldElement &other) const;
    FieldElement operator/(const FieldElement &other) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(uint64_t exponent) const;

    bool operator==(const FieldElement &other) const;

   private:
    void require_same(const FieldElement &other) const;

    FieldPtr spec_;
    uint32_t repr_;
};

enum class FieldOp { Add, Sub, Mul, Div, Pow };

/// Binary field operation; Pow reads b's repr as a nonnegative integer
/// exponent. Errors: DivisionByZero, SpecMismatch.
FieldElement element_op(const FieldElement &a, const FieldElement &b, FieldOp op);

FieldElement primitive_element(const FieldPtr &spec);

}  // namespace kuni

#endif
