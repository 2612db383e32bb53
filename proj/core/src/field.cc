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

#include "kuni/field.h"

#include <map>
#include <mutex>
#include <sstream>

#include "kuni/error.h"
#include "kuni/limits.h"

namespace kuni {

namespace {

using Poly = std::vector<uint32_t>;

void trim(Poly &a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

// Remainder of a modulo the monic polynomial b over GF(p).
Poly poly_mod(Poly a, const Poly &b, uint32_t p) {
    trim(a);
    size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        uint32_t lead = a.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i <= db; i++) {
            uint64_t sub = static_cast<uint64_t>(lead) * b[i] % p;
            a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly to_digits(uint32_t v, uint32_t p, uint32_t m) {
    Poly d(m);
    for (uint32_t i = 0; i < m; i++) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

uint32_t from_digits(const Poly &d, uint32_t p) {
    uint32_t v = 0;
    for (size_t i = d.size(); i-- > 0;) {
        v = v * p + d[i];
    }
    return v;
}

const std::map<std::pair<uint32_t, uint32_t>, Poly> &default_moduli() {
    static const std::map<std::pair<uint32_t, uint32_t>, Poly> table{
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{3, 2}, {1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
    };
    return table;
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (uint64_t d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::optional<std::pair<uint32_t, uint32_t>> prime_power(uint64_t q) {
    if (q < 2) {
        return std::nullopt;
    }
    uint64_t p = 2;
    while (q % p != 0) {
        p++;
    }
    uint32_t m = 0;
    uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        m++;
    }
    if (rest != 1) {
        return std::nullopt;
    }
    return std::make_pair(static_cast<uint32_t>(p), m);
}

bool is_irreducible(uint32_t p, const std::vector<uint32_t> &monic) {
    size_t m = monic.size() - 1;
    if (m <= 1) {
        return m == 1;
    }
    // Exhaustive trial division by every monic polynomial of degree <= m/2.
    for (size_t d = 1; d <= m / 2; d++) {
        uint64_t count = checked_pow(p, d);
        for (uint64_t c = 0; c < count; c++) {
            Poly f = to_digits(static_cast<uint32_t>(c), p, static_cast<uint32_t>(d));
            f.push_back(1);
            if (poly_mod(monic, f, p).empty()) {
                return false;
            }
        }
    }
    return true;
}

std::vector<uint32_t> least_irreducible(uint32_t p, uint32_t m) {
    uint64_t count = checked_pow(p, m);
    for (uint64_t c = 0; c < count; c++) {
        Poly f = to_digits(static_cast<uint32_t>(c), p, m);
        f.push_back(1);
        if (is_irreducible(p, f)) {
            return f;
        }
    }
    throw Error(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
}

FieldSpec::FieldSpec(uint32_t p, uint32_t m, std::vector<uint32_t> modulus)
    : p_(p), m_(m), q_(static_cast<uint32_t>(checked_pow(p, m))), modulus_(std::move(modulus)) {
    neg_.resize(q_);
    for (uint32_t a = 0; a < q_; a++) {
        Poly d = to_digits(a, p_, m_);
        for (auto &c : d) {
            c = (p_ - c) % p_;
        }
        neg_[a] = from_digits(d, p_);
    }
    if (p_ != 2 && m_ > 1 && q_ <= 1024) {
        add_table_.resize(static_cast<size_t>(q_) * q_);
        for (uint32_t a = 0; a < q_; a++) {
            for (uint32_t b = 0; b < q_; b++) {
                add_table_[static_cast<size_t>(a) * q_ + b] = static_cast<uint16_t>(add_digits(a, b));
            }
        }
    }

    // Least-repr primitive element and the exp/log tables built from it.
    log_.assign(q_, 0);
    exp_.assign(2 * static_cast<size_t>(q_), 0);
    if (q_ == 2) {
        primitive_ = 1;
        exp_[0] = exp_[1] = exp_[2] = 1;
        return;
    }
    for (uint32_t g = 2; g < q_; g++) {
        uint32_t x = 1;
        uint64_t ord = 0;
        do {
            x = poly_mul(x, g);
            ord++;
        } while (x != 1 && ord < q_);
        if (ord == q_ - 1) {
            primitive_ = g;
            break;
        }
    }
    uint32_t x = 1;
    for (uint32_t i = 0; i < q_ - 1; i++) {
        exp_[i] = x;
        exp_[i + q_ - 1] = x;
        log_[x] = i;
        x = poly_mul(x, primitive_);
    }
}

uint32_t FieldSpec::add_digits(uint32_t a, uint32_t b) const {
    uint32_t result = 0;
    uint32_t scale = 1;
    for (uint32_t i = 0; i < m_; i++) {
        uint32_t da = a % p_;
        uint32_t db = b % p_;
        a /= p_;
        b /= p_;
        result += ((da + db) % p_) * scale;
        scale *= p_;
    }
    return result;
}

uint32_t FieldSpec::poly_mul(uint32_t a, uint32_t b) const {
    if (m_ == 1) {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    }
    Poly da = to_digits(a, p_, m_);
    Poly db = to_digits(b, p_, m_);
    Poly prod(2 * m_ - 1, 0);
    for (uint32_t i = 0; i < m_; i++) {
        for (uint32_t j = 0; j < m_; j++) {
            prod[i + j] = static_cast<uint32_t>((prod[i + j] + static_cast<uint64_t>(da[i]) * db[j]) % p_);
        }
    }
    Poly r = poly_mod(prod, modulus_, p_);
    r.resize(m_, 0);
    return from_digits(r, p_);
}

uint32_t FieldSpec::neg(uint32_t a) const {
    return neg_[a];
}

uint32_t FieldSpec::inv(uint32_t a) const {
    if (a == 0) {
        throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + name());
    }
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

uint32_t FieldSpec::div(uint32_t a, uint32_t b) const {
    return mul(a, inv(b));
}

uint32_t FieldSpec::pow(uint32_t a, uint64_t exponent) const {
    if (exponent == 0) {
        return 1;
    }
    if (a == 0) {
        return 0;
    }
    return exp_[(static_cast<uint64_t>(log_[a]) * (exponent % (q_ - 1))) % (q_ - 1)];
}

uint64_t FieldSpec::order(uint32_t a) const {
    if (a == 0) {
        throw Error(ErrorKind::DivisionByZero, "zero has no multiplicative order");
    }
    uint64_t ord = 1;
    uint32_t x = a;
    while (x != 1) {
        x = mul(x, a);
        ord++;
    }
    return ord;
}

std::string FieldSpec::name() const {
    std::ostringstream out;
    out << "GF(" << q_ << ")";
    return out.str();
}

FieldPtr make_field(uint32_t p, uint32_t m, std::optional<std::vector<uint32_t>> modulus) {
    if (!is_prime(p)) {
        throw Error(ErrorKind::NonPrimeP, std::to_string(p) + " is not prime");
    }
    if (m == 0) {
        throw Error(ErrorKind::OutOfRange, "extension degree must be >= 1");
    }
    if (checked_pow(p, m) > kMaxFieldOrder) {
        throw Error(ErrorKind::UnsupportedSize, "field order exceeds 2^16");
    }
    Poly mod;
    if (modulus.has_value()) {
        mod = *modulus;
        if (mod.size() != m + 1 || mod.back() != 1) {
            throw Error(ErrorKind::OutOfRange, "modulus must be monic of degree " + std::to_string(m));
        }
        for (auto c : mod) {
            if (c >= p) {
                throw Error(ErrorKind::OutOfRange, "modulus coefficient out of range");
            }
        }
        if (!is_irreducible(p, mod)) {
            throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
        }
    } else if (m == 1) {
        mod = {0, 1};
    } else {
        auto it = default_moduli().find({p, m});
        mod = it != default_moduli().end() ? it->second : least_irreducible(p, m);
        if (!is_irreducible(p, mod)) {
            throw Error(ErrorKind::ReducibleModulus, "default modulus table entry is reducible");
        }
    }
    return std::shared_ptr<const FieldSpec>(new FieldSpec(p, m, std::move(mod)));
}

FieldPtr make_field_of_order(uint64_t q) {
    auto pm = prime_power(q);
    if (!pm) {
        throw Error(ErrorKind::NonPrimeP, std::to_string(q) + " is not a prime power");
    }
    if (q > kMaxFieldOrder) {
        throw Error(ErrorKind::UnsupportedSize, "field order exceeds 2^16");
    }
    // Fields are immutable, so one instance per order is shared.
    static std::mutex mutex;
    static std::map<uint64_t, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(q);
    if (it != cache.end()) {
        return it->second;
    }
    auto field = make_field(pm->first, pm->second);
    cache.emplace(q, field);
    return field;
}

FieldElement::FieldElement(FieldPtr spec, uint32_t repr) : spec_(std::move(spec)), repr_(repr) {
    if (repr_ >= spec_->q()) {
        throw Error(ErrorKind::OutOfRange, "element repr " + std::to_string(repr) + " outside " + spec_->name());
    }
}

void FieldElement::require_same(const FieldElement &other) const {
    if (spec_ != other.spec_ &&
        (spec_->p() != other.spec_->p() || spec_->m() != other.spec_->m() ||
         spec_->modulus() != other.spec_->modulus())) {
        throw Error(ErrorKind::SpecMismatch, spec_->name() + " vs " + other.spec_->name());
    }
}

FieldElement FieldElement::operator+(const FieldElement &other) const {
    require_same(other);
    return {spec_, spec_->add(repr_, other.repr_)};
}

FieldElement FieldElement::operator-(const FieldElement &other) const {
    require_same(other);
    return {spec_, spec_->sub(repr_, other.repr_)};
}

FieldElement FieldElement::operator*(const FieldElement &other) const {
    require_same(other);
    return {spec_, spec_->mul(repr_, other.repr_)};
}

FieldElement FieldElement::operator/(const FieldElement &other) const {
    require_same(other);
    return {spec_, spec_->div(repr_, other.repr_)};
}

FieldElement FieldElement::operator-() const {
    return {spec_, spec_->neg(repr_)};
}

FieldElement FieldElement::inverse() const {
    return {spec_, spec_->inv(repr_)};
}

FieldElement FieldElement::pow(uint64_t exponent) const {
    return {spec_, spec_->pow(repr_, exponent)};
}

bool FieldElement::operator==(const FieldElement &other) const {
    require_same(other);
    return repr_ == other.repr_;
}

FieldElement element_op(const FieldElement &a, const FieldElement &b, FieldOp op) {
    switch (op) {
        case FieldOp::Add:
            return a + b;
        case FieldOp::Sub:
            return a - b;
        case FieldOp::Mul:
            return a * b;
        case FieldOp::Div:
            return a / b;
        case FieldOp::Pow:
            return a.pow(b.repr());
    }
    return a;
}

FieldElement primitive_element(const FieldPtr &spec) {
    return {spec, spec->primitive()};
}

}  // namespace kuni
