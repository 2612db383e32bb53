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

#include "kuni/cyclotomic.h"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "kuni/error.h"
#include "kuni/field.h"

namespace kuni {

namespace {

// Exact division of integer polynomials by a monic divisor; the remainder is
// required to vanish.
std::vector<int64_t> exact_divide(std::vector<int64_t> num, const std::vector<int64_t> &den) {
    size_t dd = den.size() - 1;
    std::vector<int64_t> quot(num.size() - dd, 0);
    for (size_t i = num.size(); i-- > dd;) {
        int64_t c = num[i];
        quot[i - dd] = c;
        if (c != 0) {
            for (size_t j = 0; j <= dd; j++) {
                num[i - dd + j] -= c * den[j];
            }
        }
    }
    return quot;
}

std::vector<int64_t> compute_cyclotomic(uint32_t order) {
    std::vector<int64_t> poly(order + 1, 0);
    poly[0] = -1;
    poly[order] = 1;
    for (uint32_t d = 1; d < order; d++) {
        if (order % d == 0) {
            poly = exact_divide(poly, *cyclotomic_polynomial(d));
        }
    }
    return poly;
}

}  // namespace

std::shared_ptr<const std::vector<int64_t>> cyclotomic_polynomial(uint32_t order) {
    if (order == 0) {
        throw Error(ErrorKind::OutOfRange, "cyclotomic order must be positive");
    }
    thread_local std::map<uint32_t, std::shared_ptr<const std::vector<int64_t>>> local;
    auto hit = local.find(order);
    if (hit != local.end()) {
        return hit->second;
    }
    static std::recursive_mutex mutex;
    static std::map<uint32_t, std::shared_ptr<const std::vector<int64_t>>> shared;
    std::shared_ptr<const std::vector<int64_t>> result;
    {
        std::lock_guard<std::recursive_mutex> lock(mutex);
        auto it = shared.find(order);
        if (it != shared.end()) {
            result = it->second;
        } else {
            result = std::make_shared<const std::vector<int64_t>>(compute_cyclotomic(order));
            shared.emplace(order, result);
        }
    }
    local.emplace(order, result);
    return result;
}

std::vector<int64_t> reduce_mod_cyclotomic(std::span<const int64_t> coeffs, uint32_t order) {
    auto phi = cyclotomic_polynomial(order);
    size_t deg = phi->size() - 1;
    std::vector<int64_t> r(coeffs.begin(), coeffs.end());
    for (size_t i = r.size(); i-- > deg;) {
        int64_t c = r[i];
        if (c == 0) {
            continue;
        }
        for (size_t j = 0; j <= deg; j++) {
            r[i - deg + j] -= c * (*phi)[j];
        }
    }
    r.resize(deg);
    return r;
}

bool cyclotomic_is_zero(std::span<const int64_t> coeffs, uint32_t order) {
    bool all_zero = true;
    for (auto c : coeffs) {
        if (c != 0) {
            all_zero = false;
            break;
        }
    }
    if (all_zero) {
        return true;
    }
    if (order > 1 && is_prime(order)) {
        // Phi_p = 1 + x + ... + x^{p-1}: zero iff all coefficients agree.
        for (auto c : coeffs) {
            if (c != coeffs[0]) {
                return false;
            }
        }
        return true;
    }
    for (auto c : reduce_mod_cyclotomic(coeffs, order)) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

void accumulate_product_conj(std::span<int64_t> dst, std::span<const int64_t> a, std::span<const int64_t> b) {
    size_t order = dst.size();
    for (size_t i = 0; i < order; i++) {
        if (a[i] == 0) {
            continue;
        }
        for (size_t j = 0; j < order; j++) {
            if (b[j] == 0) {
                continue;
            }
            // w^i * conj(w^j) = w^{i - j}
            size_t t = i >= j ? i - j : i + order - j;
            dst[t] += a[i] * b[j];
        }
    }
}

Cyclotomic::Cyclotomic(uint32_t order) : coeffs_(order, 0) {
    if (order == 0) {
        throw Error(ErrorKind::OutOfRange, "cyclotomic order must be positive");
    }
}

Cyclotomic::Cyclotomic(uint32_t order, std::vector<int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    if (order == 0 || coeffs_.size() != order) {
        throw Error(ErrorKind::OrderMismatch, "coefficient vector length must equal the order");
    }
}

Cyclotomic Cyclotomic::root(uint32_t order, uint64_t t) {
    Cyclotomic c(order);
    c.coeffs_[t % order] = 1;
    return c;
}

Cyclotomic Cyclotomic::integer(uint32_t order, int64_t value) {
    Cyclotomic c(order);
    c.coeffs_[0] = value;
    return c;
}

void Cyclotomic::require_order(const Cyclotomic &other) const {
    if (order() != other.order()) {
        throw Error(ErrorKind::OrderMismatch,
                    "orders " + std::to_string(order()) + " and " + std::to_string(other.order()));
    }
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic &other) const {
    Cyclotomic out = *this;
    out += other;
    return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic &other) const {
    Cyclotomic out = *this;
    out -= other;
    return out;
}

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &other) {
    require_order(other);
    for (size_t i = 0; i < coeffs_.size(); i++) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

Cyclotomic &Cyclotomic::operator-=(const Cyclotomic &other) {
    require_order(other);
    for (size_t i = 0; i < coeffs_.size(); i++) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic &other) const {
    require_order(other);
    size_t order = coeffs_.size();
    Cyclotomic out(static_cast<uint32_t>(order));
    for (size_t i = 0; i < order; i++) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (size_t j = 0; j < order; j++) {
            if (other.coeffs_[j] == 0) {
                continue;
            }
            size_t t = i + j;
            out.coeffs_[t >= order ? t - order : t] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto &c : out.coeffs_) {
        c = -c;
    }
    return out;
}

Cyclotomic Cyclotomic::conj() const {
    size_t order = coeffs_.size();
    Cyclotomic out(static_cast<uint32_t>(order));
    for (size_t t = 0; t < order; t++) {
        out.coeffs_[(order - t) % order] = coeffs_[t];
    }
    return out;
}

bool Cyclotomic::is_zero() const {
    return cyclotomic_is_zero(coeffs_, order());
}

bool Cyclotomic::equals(const Cyclotomic &other) const {
    return (*this - other).is_zero();
}

std::optional<int64_t> Cyclotomic::as_integer() const {
    std::vector<int64_t> r = reduce_mod_cyclotomic(coeffs_, order());
    for (size_t i = 1; i < r.size(); i++) {
        if (r[i] != 0) {
            return std::nullopt;
        }
    }
    return r.empty() ? 0 : r[0];
}

std::complex<long double> Cyclotomic::to_complex() const {
    std::complex<long double> sum = 0;
    long double l = static_cast<long double>(order());
    for (size_t t = 0; t < coeffs_.size(); t++) {
        if (coeffs_[t] == 0) {
            continue;
        }
        long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(t) / l;
        sum += static_cast<long double>(coeffs_[t]) * std::complex<long double>(std::cos(angle), std::sin(angle));
    }
    return sum;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (size_t t = 0; t < coeffs_.size(); t++) {
        int64_t c = coeffs_[t];
        if (c == 0) {
            continue;
        }
        if (!first) {
            out << (c > 0 ? " + " : " - ");
        } else if (c < 0) {
            out << "-";
        }
        first = false;
        int64_t mag = c < 0 ? -c : c;
        if (t == 0) {
            out << mag;
        } else {
            if (mag != 1) {
                out << mag << "*";
            }
            out << "w^" << t;
        }
    }
    if (first) {
        out << "0";
    }
    return out.str();
}

std::variant<Cyclotomic, bool> cyc_op(const Cyclotomic &a, const Cyclotomic &b, CycOp op) {
    switch (op) {
        case CycOp::Add:
            return a + b;
        case CycOp::Sub:
            return a - b;
        case CycOp::Mul:
            return a * b;
        case CycOp::ConjOfA:
            return a.conj();
        case CycOp::IsZeroOfA:
            return a.is_zero();
    }
    return false;
}

}  // namespace kuni
