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

#include "kuni/sparse_state.h"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "kuni/constructions.h"
#include "kuni/error.h"

using namespace kuni;

namespace {

using Terms = std::map<std::vector<uint16_t>, std::vector<int64_t>>;

SparseState from_terms(const FieldPtr &f, size_t n, const Terms &terms) {
    StateBuilder b(f, n);
    for (const auto &[basis, coeffs] : terms) {
        b.add(basis, coeffs);
    }
    return b.build();
}

std::vector<int64_t> root(uint32_t L, uint64_t t, int64_t c = 1) {
    std::vector<int64_t> v(L, 0);
    v[t % L] = c;
    return v;
}

SparseState bell_seed(uint32_t q) {
    return ghz_state(make_field_of_order(q), 2);
}

// Dense evaluation of a Weyl word, one amplitude per basis index.
std::vector<Cyclotomic> dense_apply(const SparseState &s, const WeylWord &w) {
    const FieldSpec &f = *s.spec();
    uint32_t q = s.q();
    size_t total = 1;
    for (size_t i = 0; i < s.n(); i++) {
        total *= q;
    }
    std::vector<Cyclotomic> out(total, Cyclotomic(q));
    for (size_t t = 0; t < s.support(); t++) {
        auto b = s.basis(t);
        size_t index = 0;
        uint64_t phase = 0;
        for (size_t site = 0; site < s.n(); site++) {
            phase += static_cast<uint64_t>(w.z(site)) * b[site];
            index = index * q + f.add(b[site], w.x(site));
        }
        out[index] += Cyclotomic::root(q, phase) * s.amplitude(t);
    }
    return out;
}

}  // namespace

TEST(sparse_state, builder_merges_and_drops_zeros) {
    FieldPtr f = make_field_of_order(2);
    StateBuilder b(f, 2);
    b.add_root(std::vector<uint16_t>{1, 1}, 0);
    b.add_root(std::vector<uint16_t>{0, 0}, 0);
    b.add_root(std::vector<uint16_t>{0, 0}, 1);
    b.add_root(std::vector<uint16_t>{1, 1}, 0);
    SparseState s = b.build();
    ASSERT_EQ(s.support(), 1u);
    EXPECT_EQ(std::vector<uint16_t>(s.basis(0).begin(), s.basis(0).end()), (std::vector<uint16_t>{1, 1}));
    EXPECT_EQ(s.amplitude(0).as_integer(), std::optional<int64_t>(2));
}

TEST(sparse_state, weyl_examples) {
    FieldPtr f = make_field_of_order(2);
    SparseState bell = bell_seed(2);
    EXPECT_EQ(apply_weyl(bell, WeylWord(2, 2)), bell);
    WeylWord x1(2, 2);
    x1.set_x(1, 1);
    EXPECT_EQ(apply_weyl(bell, x1), from_terms(f, 2, {{{0, 1}, root(2, 0)}, {{1, 0}, root(2, 0)}}));
    WeylWord z0(2, 2);
    z0.set_z(0, 1);
    EXPECT_EQ(apply_weyl(bell, z0), from_terms(f, 2, {{{0, 0}, root(2, 0)}, {{1, 1}, root(2, 0, -1)}}));
    try {
        apply_weyl(bell, WeylWord(2, 3));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::LayoutMismatch);
    }
}

TEST(sparse_state, weyl_matches_dense_oracle) {
    std::mt19937_64 rng(9);
    for (uint32_t q : {3, 4, 5}) {
        FieldPtr f = make_field_of_order(q);
        for (int trial = 0; trial < 20; trial++) {
            StateBuilder b(f, 3);
            for (int t = 0; t < 6; t++) {
                std::vector<uint16_t> basis = {static_cast<uint16_t>(rng() % q), static_cast<uint16_t>(rng() % q),
                                               static_cast<uint16_t>(rng() % q)};
                b.add_root(basis, rng() % q, 1 + static_cast<int64_t>(rng() % 3));
            }
            SparseState s = b.build();
            WeylWord w(q, 3);
            for (size_t site = 0; site < 3; site++) {
                w.set_x(site, static_cast<uint32_t>(rng() % q));
                w.set_z(site, static_cast<uint32_t>(rng() % q));
            }
            SparseState got = apply_weyl(s, w);
            std::vector<Cyclotomic> dense = dense_apply(s, w);
            size_t nonzero = 0;
            for (size_t index = 0; index < dense.size(); index++) {
                std::vector<uint16_t> basis = {static_cast<uint16_t>(index / (q * q)),
                                               static_cast<uint16_t>(index / q % q), static_cast<uint16_t>(index % q)};
                auto at = got.find(basis);
                if (dense[index].is_zero()) {
                    EXPECT_FALSE(at.has_value());
                } else {
                    nonzero++;
                    ASSERT_TRUE(at.has_value());
                    EXPECT_TRUE(got.amplitude(*at).equals(dense[index]));
                }
            }
            EXPECT_EQ(got.support(), nonzero);
            EXPECT_EQ(got.support(), s.support());
        }
    }
}

TEST(sparse_state, inner_products) {
    FieldPtr f = make_field_of_order(2);
    SparseState ghz = ghz_state(f, 3);
    EXPECT_EQ(inner_product(ghz, ghz).as_integer(), std::optional<int64_t>(2));
    WeylWord z(2, 3);
    z.set_z(0, 1);
    EXPECT_TRUE(inner_product(ghz, apply_weyl(ghz, z)).is_zero());
    try {
        inner_product(ghz, bell_seed(2));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
    }
}

TEST(sparse_state, inner_product_is_conjugate_linear_in_first_argument) {
    FieldPtr f = make_field_of_order(5);
    SparseState a = from_terms(f, 1, {{{0}, root(5, 1)}});
    SparseState b = from_terms(f, 1, {{{0}, root(5, 3)}});
    EXPECT_EQ(inner_product(a, b).coeffs(), root(5, 2));
}

TEST(sparse_state, tensor_products) {
    FieldPtr f = make_field_of_order(2);
    SparseState zero = basis_state(f, std::vector<uint16_t>{0});
    SparseState t = tensor(zero, ghz_state(f, 3));
    EXPECT_EQ(t, from_terms(f, 4, {{{0, 0, 0, 0}, root(2, 0)}, {{0, 1, 1, 1}, root(2, 0)}}));
    EXPECT_EQ(tensor(bell_seed(2), bell_seed(2)).support(), 4u);
    SparseState psi_plus = from_terms(f, 2, {{{0, 1}, root(2, 0)}, {{1, 0}, root(2, 0)}});
    SparseState word = basis_state(f, std::vector<uint16_t>{0, 1, 1});
    EXPECT_EQ(tensor(word, psi_plus),
              from_terms(f, 5, {{{0, 1, 1, 0, 1}, root(2, 0)}, {{0, 1, 1, 1, 0}, root(2, 0)}}));
    try {
        tensor(zero, ghz_state(make_field_of_order(3), 2));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::SpecMismatch);
    }
}

TEST(sparse_state, local_fourier_examples) {
    FieldPtr f = make_field_of_order(2);
    SparseState zero = basis_state(f, std::vector<uint16_t>{0});
    std::vector<size_t> site0 = {0};
    EXPECT_EQ(local_fourier(zero, site0), from_terms(f, 1, {{{0}, root(2, 0)}, {{1}, root(2, 0)}}));
    std::vector<size_t> all = {0, 1, 2};
    SparseState even = local_fourier(ghz_state(f, 3), all);
    EXPECT_EQ(even, from_terms(f, 3,
                               {{{0, 0, 0}, root(2, 0, 2)},
                                {{0, 1, 1}, root(2, 0, 2)},
                                {{1, 0, 1}, root(2, 0, 2)},
                                {{1, 1, 0}, root(2, 0, 2)}}));
}

TEST(sparse_state, file_round_trip) {
    SparseState s = ame_7_4();
    std::string text = format_state(s);
    EXPECT_EQ(text.substr(0, 10), "STATE 7 4\n");
    SparseState back = parse_state(text);
    EXPECT_EQ(back, s);
    EXPECT_EQ(format_state(back), text);
    try {
        parse_state("STATE 2 2\n0 1 : 1\n");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    }
}
