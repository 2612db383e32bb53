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

#include "kuni/constructions.h"

#include <gtest/gtest.h>

#include <set>

#include "kuni/error.h"
#include "kuni/singleton.h"

using namespace kuni;

namespace {

SparseState terms(const FieldPtr &f, size_t n, const std::vector<std::pair<std::vector<uint16_t>, int64_t>> &list) {
    StateBuilder b(f, n);
    for (const auto &[basis, sign] : list) {
        b.add_root(basis, 0, sign);
    }
    return b.build();
}

SparseState permute_sites(const SparseState &s, const std::vector<size_t> &from) {
    StateBuilder b(s.spec(), s.n());
    std::vector<uint16_t> word(s.n());
    for (size_t t = 0; t < s.support(); t++) {
        auto src = s.basis(t);
        for (size_t i = 0; i < s.n(); i++) {
            word[i] = src[from[i]];
        }
        b.add(word, s.coeffs(t));
    }
    return b.build();
}

ErrorKind kind_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::ParseError;
}

}  // namespace

TEST(constructions, state_from_code_examples) {
    FieldPtr f2 = make_field_of_order(2);
    LinearCode rep = code_from_generator(FFMatrix::from_rows(f2, {{1, 1, 1}}));
    EXPECT_EQ(state_from_code(rep), ghz_state(f2, 3));

    for (uint32_t q : {2, 3, 4, 5}) {
        FieldPtr f = make_field_of_order(q);
        LinearCode c = code_from_generator(FFMatrix::from_rows(f, {{1, 0, 1}, {0, 1, 1}}));
        SparseState s = state_from_code(c);
        EXPECT_EQ(s.support(), static_cast<size_t>(q) * q);
        for (uint32_t l = 0; l < q; l++) {
            for (uint32_t m = 0; m < q; m++) {
                std::vector<uint16_t> w = {static_cast<uint16_t>(l), static_cast<uint16_t>(m),
                                           static_cast<uint16_t>(f->add(l, m))};
                EXPECT_TRUE(s.find(w).has_value());
            }
        }
    }
    FieldPtr f3 = make_field_of_order(3);
    EXPECT_EQ(state_from_code(code_from_generator(FFMatrix::from_rows(f3, {{1, 0, 1, 1}, {0, 1, 1, 2}}))).support(),
              9u);
}

TEST(constructions, weyl_basis_over_bell_is_bell_basis) {
    for (uint32_t q : {2, 3, 4}) {
        FieldPtr f = make_field_of_order(q);
        WeylBasis basis(ghz_state(f, 2), 1);
        EXPECT_EQ(basis.size(), static_cast<uint64_t>(q) * q);
        EXPECT_EQ(basis.at(0), ghz_state(f, 2));
        for (uint64_t i = 0; i < basis.size(); i++) {
            std::vector<uint32_t> v = basis.word(i);
            // Z^{v0} (x) X^{v1} on sum |r,r> is X^{v1} (x) Z^{v0} with the sites swapped.
            EXPECT_EQ(permute_sites(basis.at(i), {1, 0}), bell_state(f, v[1], v[0]));
        }
    }
}

TEST(constructions, clq_matches_qubit_closed_form) {
    FieldPtr f = make_field_of_order(2);
    LinearCode c = mds_from_singleton(3, 2, f);
    SparseState s = cl_plus_q(c, ghz_state(f, 2));
    // |000>phi+ + |011>psi+ + |101>phi- + |110>psi-, psi- = |01> - |10>
    SparseState expect = terms(f, 5,
                               {{{0, 0, 0, 0, 0}, 1},
                                {{0, 0, 0, 1, 1}, 1},
                                {{0, 1, 1, 0, 1}, 1},
                                {{0, 1, 1, 1, 0}, 1},
                                {{1, 0, 1, 0, 0}, 1},
                                {{1, 0, 1, 1, 1}, -1},
                                {{1, 1, 0, 0, 1}, 1},
                                {{1, 1, 0, 1, 0}, -1}});
    EXPECT_EQ(s, expect);
    EXPECT_EQ(s.support(), 8u);
}

TEST(constructions, clq_equals_bell_closed_form_after_relabeling) {
    for (uint32_t q : {2, 3, 4, 5}) {
        FieldPtr f = make_field_of_order(q);
        LinearCode c = code_from_generator(FFMatrix::from_rows(f, {{1, 0, 1}, {0, 1, 1}}));
        SparseState s = cl_plus_q(c, ghz_state(f, 2));
        EXPECT_EQ(permute_sites(s, {1, 0, 2, 4, 3}), ame_5_q(f)) << q;
        EXPECT_EQ(s.support(), static_cast<size_t>(q) * q * q);
    }
}

TEST(constructions, clq_size_checks) {
    FieldPtr f = make_field_of_order(2);
    LinearCode c = mds_from_singleton(3, 2, f);
    EXPECT_EQ(kind_of([&] { cl_plus_q(c, ghz_state(f, 3)); }), ErrorKind::SizeMismatch);
    FieldPtr f3 = make_field_of_order(3);
    LinearCode c3 = mds_from_singleton(4, 2, f3);
    SparseState s = cl_plus_q(c3, ghz_state(f3, 2));
    EXPECT_EQ(s.n(), 6u);
    EXPECT_EQ(s.support(), 27u);
}

TEST(constructions, clq_dual_variant) {
    FieldPtr f = make_field_of_order(2);
    LinearCode rep = code_from_generator(FFMatrix::from_rows(f, {{1, 1, 1}}));
    SparseState s = cl_plus_q(rep, ghz_state(f, 2), ClqVariant::Dual);
    EXPECT_EQ(s.n(), 5u);
    EXPECT_EQ(s.support(), 8u);
    EXPECT_EQ(kind_of([&] { cl_plus_q(rep, ghz_state(f, 2)); }), ErrorKind::SizeMismatch);
}

TEST(constructions, repetition_gf5) {
    GQPair pair = construct_G_Q(make_field_of_order(5));
    SparseState s = cl_plus_q_repetition(pair.g, pair.q);
    EXPECT_EQ(s.n(), 7u);
    EXPECT_EQ(s.support(), 625u);
}

TEST(constructions, repetition_gf4_equals_closed_form) {
    GQPair pair = construct_G_Q(make_field_of_order(4));
    SparseState s = cl_plus_q_repetition(pair.g, pair.q);
    EXPECT_EQ(s.support(), 256u);
    EXPECT_EQ(s, ame_7_4());
}

TEST(constructions, repetition_caps_and_certification) {
    GQPair p17 = ame_19_17_matrices();
    EXPECT_EQ(kind_of([&] { cl_plus_q_repetition(p17.g, p17.q); }), ErrorKind::TooLarge);
    GQPair p5 = construct_G_Q(make_field_of_order(5));
    QMatrix bad(FFMatrix::from_rows(p5.g.spec(), {{1, 0}, {0, 1}, {0, 0}}));
    EXPECT_EQ(kind_of([&] { cl_plus_q_repetition(p5.g, bad); }), ErrorKind::CertificationMissing);
}

TEST(constructions, builtins) {
    FieldPtr f2 = make_field_of_order(2);
    auto ghz = std::get<SparseState>(builtin_state({"ghz", 2, 3}));
    EXPECT_EQ(ghz, terms(f2, 3, {{{0, 0, 0}, 1}, {{1, 1, 1}, 1}}));
    EXPECT_EQ(std::get<SparseState>(builtin_state({"bell", 2, 0, 0, 0})), terms(f2, 2, {{{0, 0}, 1}, {{1, 1}, 1}}));
    // X (x) Z on |00> + |11> is |10> - |01>, i.e. -(|01> - |10>).
    EXPECT_EQ(std::get<SparseState>(builtin_state({"bell", 2, 0, 1, 1})), terms(f2, 2, {{{0, 1}, -1}, {{1, 0}, 1}}));
    EXPECT_EQ(std::get<SparseState>(builtin_state({"ame_7_4"})).support(), 256u);
    EXPECT_EQ(std::get<GQPair>(builtin_state({"ame_19_17_matrices"})).g.cols(), 17u);
    EXPECT_EQ(std::get<GQPair>(builtin_state({"ame_21_19_matrices"})).g.cols(), 19u);
    EXPECT_EQ(std::get<SparseState>(builtin_state({"ame_5_q", 3})).support(), 27u);
    EXPECT_EQ(kind_of([] { builtin_state({"ame_6_2"}); }), ErrorKind::UnknownName);
}

TEST(constructions, ame_7_4_first_coset) {
    SparseState s = ame_7_4();
    FieldPtr f = s.spec();
    SparseState phi00 = bell_state(f, 0, 0);
    std::set<std::vector<uint16_t>> words;
    for (size_t t = 0; t < s.support(); t++) {
        auto b = s.basis(t);
        std::vector<uint16_t> prefix(b.begin(), b.begin() + 5);
        std::vector<uint16_t> tail(b.begin() + 5, b.end());
        auto at = phi00.find(tail);
        // Words whose Bell part is phi_00 carry exactly its four terms.
        if (at && phi00.amplitude(*at).equals(s.amplitude(t))) {
            size_t match = 0;
            for (size_t u = 0; u < phi00.support(); u++) {
                std::vector<uint16_t> full = prefix;
                full.insert(full.end(), phi00.basis(u).begin(), phi00.basis(u).end());
                auto hit = s.find(full);
                match += hit && s.amplitude(*hit).equals(phi00.amplitude(u));
            }
            if (match == 4) {
                words.insert(prefix);
            }
        }
    }
    EXPECT_EQ(words, (std::set<std::vector<uint16_t>>{{0, 0, 0, 0, 0}, {1, 1, 3, 3, 1}, {2, 2, 1, 1, 2}, {3, 3, 2, 2, 3}}));
}
