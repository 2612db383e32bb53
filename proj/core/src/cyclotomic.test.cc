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

#include <gtest/gtest.h>

#include <random>

#include "kuni/error.h"

using namespace kuni;

TEST(cyclotomic, documented_zeros) {
    Cyclotomic w2 = Cyclotomic::root(2, 1);
    EXPECT_TRUE((w2 + Cyclotomic::integer(2, 1)).is_zero());
    Cyclotomic s5(5, {1, 1, 1, 1, 1});
    EXPECT_TRUE(s5.is_zero());
    EXPECT_TRUE((Cyclotomic::root(4, 2) + Cyclotomic::integer(4, 1)).is_zero());
    EXPECT_FALSE(Cyclotomic::root(4, 1).is_zero());
    EXPECT_FALSE(Cyclotomic(6, {1, 0, 0, 0, 0, 0}).is_zero());
}

TEST(cyclotomic, polynomial_table) {
    EXPECT_EQ(*cyclotomic_polynomial(1), (std::vector<int64_t>{-1, 1}));
    EXPECT_EQ(*cyclotomic_polynomial(2), (std::vector<int64_t>{1, 1}));
    EXPECT_EQ(*cyclotomic_polynomial(4), (std::vector<int64_t>{1, 0, 1}));
    EXPECT_EQ(*cyclotomic_polynomial(6), (std::vector<int64_t>{1, -1, 1}));
    EXPECT_EQ(*cyclotomic_polynomial(8), (std::vector<int64_t>{1, 0, 0, 0, 1}));
    EXPECT_EQ(*cyclotomic_polynomial(9), (std::vector<int64_t>{1, 0, 0, 1, 0, 0, 1}));
    EXPECT_EQ(*cyclotomic_polynomial(12), (std::vector<int64_t>{1, 0, -1, 0, 1}));
}

TEST(cyclotomic, arithmetic_matches_complex_values) {
    std::mt19937_64 rng(3);
    for (uint32_t L : {2u, 3u, 4u, 5u, 6u, 8u, 9u, 12u, 16u}) {
        for (int trial = 0; trial < 50; trial++) {
            std::vector<int64_t> a(L);
            std::vector<int64_t> b(L);
            for (uint32_t i = 0; i < L; i++) {
                a[i] = static_cast<int64_t>(rng() % 7) - 3;
                b[i] = static_cast<int64_t>(rng() % 7) - 3;
            }
            Cyclotomic x(L, a);
            Cyclotomic y(L, b);
            auto cx = x.to_complex();
            auto cy = y.to_complex();
            EXPECT_LT(std::abs((x * y).to_complex() - cx * cy), 1e-9L);
            EXPECT_LT(std::abs((x + y).to_complex() - (cx + cy)), 1e-9L);
            EXPECT_LT(std::abs(x.conj().to_complex() - std::conj(cx)), 1e-9L);
            EXPECT_EQ(x.is_zero(), std::abs(cx) < 1e-9L);
        }
    }
}

TEST(cyclotomic, conj_maps_exponents) {
    Cyclotomic x(5, {0, 2, 0, 0, 7});
    EXPECT_EQ(x.conj().coeffs(), (std::vector<int64_t>{0, 7, 0, 0, 2}));
}

TEST(cyclotomic, as_integer) {
    EXPECT_EQ(Cyclotomic(5, {3, 1, 1, 1, 1}).as_integer(), std::optional<int64_t>(2));
    EXPECT_FALSE(Cyclotomic::root(4, 1).as_integer().has_value());
}

TEST(cyclotomic, cyc_op_dispatch) {
    Cyclotomic a = Cyclotomic::root(3, 1);
    Cyclotomic b = Cyclotomic::root(3, 2);
    auto sum = std::get<Cyclotomic>(cyc_op(a, b, CycOp::Add));
    EXPECT_EQ(sum.as_integer(), std::optional<int64_t>(-1));
    EXPECT_EQ(std::get<Cyclotomic>(cyc_op(a, b, CycOp::Mul)).as_integer(), std::optional<int64_t>(1));
    EXPECT_TRUE(std::get<Cyclotomic>(cyc_op(a, a, CycOp::Sub)).is_zero());
    EXPECT_EQ(std::get<Cyclotomic>(cyc_op(a, b, CycOp::ConjOfA)).coeffs(), b.coeffs());
    EXPECT_FALSE(std::get<bool>(cyc_op(a, b, CycOp::IsZeroOfA)));
    try {
        cyc_op(a, Cyclotomic::root(4, 1), CycOp::Add);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::OrderMismatch);
    }
}
