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

#include <gtest/gtest.h>

#include "kuni/error.h"

using namespace kuni;

namespace {

// Schoolbook arithmetic on base-p digit vectors, reduced by the modulus.
struct PolyOracle {
    uint32_t p;
    std::vector<uint32_t> modulus;

    std::vector<uint32_t> digits(uint32_t v) const {
        std::vector<uint32_t> d(modulus.size() - 1);
        for (auto &x : d) {
            x = v % p;
            v /= p;
        }
        return d;
    }
    uint32_t pack(const std::vector<uint32_t> &d) const {
        uint32_t v = 0;
        for (size_t i = d.size(); i-- > 0;) {
            v = v * p + d[i];
        }
        return v;
    }
    uint32_t add(uint32_t a, uint32_t b) const {
        auto x = digits(a);
        auto y = digits(b);
        for (size_t i = 0; i < x.size(); i++) {
            x[i] = (x[i] + y[i]) % p;
        }
        return pack(x);
    }
    uint32_t mul(uint32_t a, uint32_t b) const {
        size_t m = modulus.size() - 1;
        auto x = digits(a);
        auto y = digits(b);
        std::vector<uint32_t> prod(2 * m, 0);
        for (size_t i = 0; i < m; i++) {
            for (size_t j = 0; j < m; j++) {
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
            }
        }
        for (size_t i = prod.size(); i-- > m;) {
            uint32_t c = prod[i];
            for (size_t j = 0; j <= m; j++) {
                prod[i - m + j] = (prod[i - m + j] + (p - c) * modulus[j]) % p;
            }
        }
        prod.resize(m);
        return pack(prod);
    }
};

std::vector<FieldPtr> small_fields() {
    std::vector<FieldPtr> out;
    for (uint32_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        out.push_back(make_field_of_order(q));
    }
    return out;
}

}  // namespace

TEST(field, gf4_multiplication_table) {
    FieldPtr f = make_field(2, 2, std::vector<uint32_t>{1, 1, 1});
    EXPECT_EQ(f->q(), 4u);
    EXPECT_EQ(f->mul(2, 2), 3u);
    EXPECT_EQ(f->mul(2, 3), 1u);
    EXPECT_EQ(f->mul(3, 3), 2u);
    EXPECT_EQ(f->add(2, 3), 1u);
}

TEST(field, default_moduli) {
    EXPECT_EQ(make_field(2, 2)->modulus(), (std::vector<uint32_t>{1, 1, 1}));
    EXPECT_EQ(make_field(2, 3)->modulus(), (std::vector<uint32_t>{1, 1, 0, 1}));
    EXPECT_EQ(make_field(3, 2)->modulus(), (std::vector<uint32_t>{1, 0, 1}));
    EXPECT_EQ(make_field(2, 4)->modulus(), (std::vector<uint32_t>{1, 1, 0, 0, 1}));
    for (auto [p, m] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
        EXPECT_EQ(make_field(p, m)->modulus(), least_irreducible(p, m));
    }
}

TEST(field, gf9_reduction) {
    FieldPtr f = make_field(3, 2);
    // x * x = -1 = 2 under x^2 + 1.
    EXPECT_EQ(f->mul(3, 3), 2u);
    for (uint32_t a = 0; a < 9; a++) {
        for (uint32_t b = 0; b < 9; b++) {
            EXPECT_LT(f->mul(a, b), 9u);
        }
    }
}

TEST(field, prime_field_construction) {
    FieldPtr f = make_field(17, 1);
    EXPECT_EQ(f->q(), 17u);
    EXPECT_EQ(f->mul(5, 7), 35u % 17);
}

TEST(field, construction_errors) {
    auto kind = [](auto fn) {
        try {
            fn();
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::ParseError;
    };
    EXPECT_EQ(kind([] { make_field(4, 1); }), ErrorKind::NonPrimeP);
    EXPECT_EQ(kind([] { make_field(2, 2, std::vector<uint32_t>{1, 0, 1}); }), ErrorKind::ReducibleModulus);
    EXPECT_EQ(kind([] { make_field(2, 17); }), ErrorKind::UnsupportedSize);
    EXPECT_EQ(kind([] { make_field(257, 2); }), ErrorKind::UnsupportedSize);
}

TEST(field, matches_polynomial_oracle) {
    for (const FieldPtr &f : small_fields()) {
        PolyOracle oracle{f->p(), f->modulus()};
        for (uint32_t a = 0; a < f->q(); a++) {
            for (uint32_t b = 0; b < f->q(); b++) {
                ASSERT_EQ(f->add(a, b), oracle.add(a, b)) << f->name();
                ASSERT_EQ(f->mul(a, b), oracle.mul(a, b)) << f->name();
            }
        }
    }
}

TEST(field, axioms_exhaustive) {
    for (const FieldPtr &f : small_fields()) {
        uint32_t q = f->q();
        for (uint32_t a = 0; a < q; a++) {
            EXPECT_EQ(f->add(a, 0), a);
            EXPECT_EQ(f->mul(a, 1), a);
            EXPECT_EQ(f->add(a, f->neg(a)), 0u);
            if (a != 0) {
                EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
            }
            for (uint32_t b = 0; b < q; b++) {
                // Frobenius
                EXPECT_EQ(f->pow(f->add(a, b), f->p()), f->add(f->pow(a, f->p()), f->pow(b, f->p())));
                for (uint32_t c = 0; c < q; c++) {
                    ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
                    ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
                    ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
    }
}

TEST(field, element_ops) {
    FieldPtr gf4 = make_field_of_order(4);
    FieldElement x(gf4, 2);
    EXPECT_EQ(element_op(x, x, FieldOp::Mul).repr(), 3u);
    FieldPtr gf5 = make_field_of_order(5);
    FieldElement one(gf5, 1);
    FieldElement two(gf5, 2);
    EXPECT_EQ(element_op(one, element_op(one, two, FieldOp::Sub), FieldOp::Div).repr(), 4u);
    EXPECT_EQ(element_op(two, FieldElement(gf5, 3), FieldOp::Pow).repr(), 3u);
    try {
        element_op(one, FieldElement(gf5, 0), FieldOp::Div);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
    }
    try {
        element_op(one, FieldElement(gf4, 1), FieldOp::Add);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::SpecMismatch);
    }
}

TEST(field, primitive_elements) {
    auto order_of = [](const FieldSpec &f, uint32_t a) {
        uint32_t x = a;
        uint64_t k = 1;
        while (x != 1) {
            x = f.mul(x, a);
            k++;
        }
        return k;
    };
    EXPECT_EQ(primitive_element(make_field_of_order(2)).repr(), 1u);
    EXPECT_EQ(primitive_element(make_field_of_order(5)).repr(), 2u);
    EXPECT_EQ(primitive_element(make_field_of_order(4)).repr(), 2u);
    for (const FieldPtr &f : small_fields()) {
        uint32_t g = f->primitive();
        EXPECT_EQ(order_of(*f, g), f->q() - 1);
        for (uint32_t a = 1; a < g; a++) {
            EXPECT_LT(order_of(*f, a), f->q() - 1) << f->name() << " has a smaller generator " << a;
        }
    }
}

TEST(field, irreducibility_by_root_search) {
    // Degree 2 and 3 polynomials are irreducible iff they have no root.
    for (uint32_t p : {2, 3, 5}) {
        for (uint32_t m : {2, 3}) {
            std::vector<uint32_t> poly(m + 1, 0);
            poly[m] = 1;
            uint32_t count = 1;
            for (uint32_t i = 0; i < m; i++) {
                count *= p;
            }
            for (uint32_t code = 0; code < count; code++) {
                uint32_t c = code;
                for (uint32_t i = 0; i < m; i++) {
                    poly[i] = c % p;
                    c /= p;
                }
                bool has_root = false;
                for (uint32_t x = 0; x < p; x++) {
                    uint64_t v = 0;
                    for (size_t i = poly.size(); i-- > 0;) {
                        v = (v * x + poly[i]) % p;
                    }
                    has_root = has_root || v == 0;
                }
                EXPECT_EQ(is_irreducible(p, poly), !has_root);
            }
        }
    }
}
