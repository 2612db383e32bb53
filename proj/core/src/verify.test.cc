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

#include "kuni/verify.h"

#include <gtest/gtest.h>

#include <random>

#include "kuni/combinatorics.h"
#include "kuni/constructions.h"
#include "kuni/error.h"
#include "kuni/limits.h"
#include "kuni/singleton.h"

using namespace kuni;

namespace {

ErrorKind kind_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::ParseError;
}

SparseState ame_5_2_state() {
    FieldPtr f = make_field_of_order(2);
    return cl_plus_q(mds_from_singleton(3, 2, f), ghz_state(f, 2));
}

// Dense reduced density matrix from explicit sums, for cross-checking.
std::vector<Cyclotomic> dense_reduction(const SparseState &s, const std::vector<size_t> &subset) {
    uint32_t q = s.q();
    size_t dim = 1;
    for (size_t i = 0; i < subset.size(); i++) {
        dim *= q;
    }
    std::vector<Cyclotomic> rho(dim * dim, Cyclotomic(q));
    for (size_t a = 0; a < s.support(); a++) {
        for (size_t b = 0; b < s.support(); b++) {
            bool same_rest = true;
            for (size_t site = 0; site < s.n(); site++) {
                bool in = std::find(subset.begin(), subset.end(), site) != subset.end();
                if (!in && s.basis(a)[site] != s.basis(b)[site]) {
                    same_rest = false;
                }
            }
            if (!same_rest) {
                continue;
            }
            size_t r = 0;
            size_t c = 0;
            for (size_t site : subset) {
                r = r * q + s.basis(a)[site];
                c = c * q + s.basis(b)[site];
            }
            rho[r * dim + c] += s.amplitude(a) * s.amplitude(b).conj();
        }
    }
    return rho;
}

}  // namespace

TEST(verify, bell_single_site) {
    SparseState bell = ghz_state(make_field_of_order(2), 2);
    std::vector<size_t> s = {0};
    ReducedDensity rho = reduced_density(bell, s);
    EXPECT_EQ(rho.dim(), 2u);
    EXPECT_EQ(rho.entry(0, 0).as_integer(), std::optional<int64_t>(1));
    EXPECT_EQ(rho.entry(1, 1).as_integer(), std::optional<int64_t>(1));
    EXPECT_TRUE(rho.entry(0, 1).is_zero());
    EXPECT_TRUE(is_maximally_mixed(rho).maximally_mixed);
}

TEST(verify, ghz_two_site_witness) {
    SparseState ghz = ghz_state(make_field_of_order(2), 3);
    std::vector<size_t> s = {0, 1};
    ReducedDensity rho = reduced_density(ghz, s);
    EXPECT_EQ(rho.entry(0, 0).as_integer(), std::optional<int64_t>(1));
    EXPECT_TRUE(rho.entry(1, 1).is_zero());
    MixednessResult m = is_maximally_mixed(rho);
    EXPECT_FALSE(m.maximally_mixed);
    EXPECT_EQ(m.violation, MixednessViolation::Diagonal);
    EXPECT_EQ(m.row, 0u);
    EXPECT_EQ(m.col, 1u);
}

TEST(verify, ame_5_2_two_site_reductions) {
    SparseState s = ame_5_2_state();
    for (size_t a = 0; a < 5; a++) {
        for (size_t b = a + 1; b < 5; b++) {
            std::vector<size_t> subset = {a, b};
            ReducedDensity rho = reduced_density(s, subset);
            EXPECT_EQ(rho.entries().size(), 4u);
            for (uint64_t i = 0; i < 4; i++) {
                EXPECT_EQ(rho.entry(i, i).as_integer(), std::optional<int64_t>(2));
            }
        }
    }
}

TEST(verify, reduction_matches_dense_oracle) {
    std::vector<SparseState> states = {ame_5_2_state(), ame_5_q(make_field_of_order(3)),
                                       ghz_state(make_field_of_order(4), 3)};
    for (const SparseState &s : states) {
        for (size_t size = 1; size <= 2; size++) {
            std::vector<size_t> subset(size);
            for (size_t i = 0; i < size; i++) {
                subset[i] = i;
            }
            do {
                ReducedDensity rho = reduced_density(s, subset);
                std::vector<Cyclotomic> dense = dense_reduction(s, subset);
                for (uint64_t r = 0; r < rho.dim(); r++) {
                    for (uint64_t c = 0; c < rho.dim(); c++) {
                        ASSERT_TRUE(rho.entry(r, c).equals(dense[r * rho.dim() + c]));
                    }
                }
                EXPECT_TRUE(rho.is_hermitian());
                EXPECT_TRUE(rho.trace().equals(inner_product(s, s)));
            } while (next_combination(subset, s.n()));
        }
    }
}

TEST(verify, maximally_mixed_diagonal_constant) {
    SparseState s = tensor(ghz_state(make_field_of_order(2), 2), ghz_state(make_field_of_order(2), 2));
    std::vector<size_t> subset = {0, 2};
    ReducedDensity rho = reduced_density(s, subset);
    EXPECT_TRUE(is_maximally_mixed(rho).maximally_mixed);
}

TEST(verify, ame_7_4_three_site_reductions) {
    SparseState s = ame_7_4();
    std::vector<size_t> subset = {0, 1, 2};
    size_t count = 0;
    do {
        EXPECT_TRUE(is_maximally_mixed(reduced_density(s, subset)).maximally_mixed);
        count++;
    } while (next_combination(subset, 7));
    EXPECT_EQ(count, 35u);
}

TEST(verify, uniformity_examples) {
    for (uint32_t q : {2, 3}) {
        UniformityReport three = uniformity(ghz_state(make_field_of_order(q), 3));
        EXPECT_TRUE(three.is_ame());
        EXPECT_FALSE(three.first_failure.has_value());
        for (size_t n : {4, 5}) {
            UniformityReport r = uniformity(ghz_state(make_field_of_order(q), n));
            EXPECT_EQ(r.max_verified_k, 1u);
            ASSERT_TRUE(r.first_failure.has_value());
            EXPECT_EQ(*r.first_failure, (std::vector<size_t>{0, 1}));
        }
    }
    UniformityReport b = uniformity(ame_5_2_state());
    EXPECT_EQ(b.max_verified_k, 2u);
    EXPECT_TRUE(b.is_ame());
    EXPECT_TRUE(b.certifying());
    EXPECT_EQ(b.sizes.size(), 2u);
    EXPECT_EQ(b.sizes[0].checked + b.sizes[1].checked, 15u);

    GQPair pair = construct_G_Q(make_field_of_order(5));
    UniformityReport r7 = uniformity(cl_plus_q_repetition(pair.g, pair.q));
    EXPECT_EQ(r7.max_verified_k, 3u);
    EXPECT_EQ(r7.sizes[0].checked + r7.sizes[1].checked + r7.sizes[2].checked, 63u);
}

TEST(verify, uniformity_case_tallies) {
    UniformityOptions opts;
    opts.classical_sites = 3;
    UniformityReport r = uniformity(ame_5_2_state(), opts);
    ASSERT_EQ(r.sizes.size(), 2u);
    const SizeTally &two = r.sizes[1];
    EXPECT_EQ(two.classical.checked, 3u);
    EXPECT_EQ(two.quantum.checked, 1u);
    EXPECT_EQ(two.split.checked, 6u);
    EXPECT_EQ(two.classical.passed + two.quantum.passed + two.split.passed, 10u);
}

TEST(verify, sampled_sweeps_are_seeded) {
    UniformityOptions opts;
    opts.sampled = true;
    opts.sample_count = 4;
    opts.seed = 17;
    SparseState s = ame_7_4();
    UniformityReport a = uniformity(s, opts);
    UniformityReport b = uniformity(s, opts);
    EXPECT_FALSE(a.certifying());
    EXPECT_EQ(a.max_verified_k, 3u);
    for (const SizeTally &t : a.sizes) {
        EXPECT_EQ(t.checked, std::min<uint64_t>(4, t.total_subsets));
    }
    EXPECT_EQ(a.sizes.size(), b.sizes.size());
    opts.sample_count = 0;
    EXPECT_EQ(kind_of([&] { uniformity(s, opts); }), ErrorKind::OutOfRange);
}

TEST(verify, weyl_words_preserve_uniformity) {
    std::mt19937_64 rng(21);
    std::vector<SparseState> states = {ame_5_2_state(), ame_5_q(make_field_of_order(3)),
                                       ghz_state(make_field_of_order(3), 4)};
    for (const SparseState &s : states) {
        size_t k = uniformity(s).max_verified_k;
        for (int trial = 0; trial < 5; trial++) {
            WeylWord w(s.q(), s.n());
            for (size_t site = 0; site < s.n(); site++) {
                w.set_x(site, static_cast<uint32_t>(rng() % s.q()));
                w.set_z(site, static_cast<uint32_t>(rng() % s.q()));
            }
            EXPECT_EQ(uniformity(apply_weyl(s, w)).max_verified_k, k);
        }
    }
}

TEST(verify, code_states_are_minimal_support) {
    for (uint32_t q : {2, 3, 4, 5, 7, 8, 9}) {
        FieldPtr f = make_field_of_order(q);
        for (size_t n = 2; n <= 6; n++) {
            for (size_t k = 1; k <= n / 2; k++) {
                uint64_t words = checked_pow(q, k);
                if (!mds_exists(n, k, q) || words > 10'000) {
                    continue;
                }
                SparseState s = state_from_code(mds_code(n, k, f));
                EXPECT_EQ(s.support(), words);
                UniformityOptions opts;
                opts.k_max = k;
                if (checked_pow(q, k) > 4096) {
                    continue;
                }
                EXPECT_EQ(uniformity(s, opts).max_verified_k, k) << n << " " << k << " " << q;
                EXPECT_TRUE(support_census(s, k).is_minimal);
            }
        }
    }
}

TEST(verify, support_census_examples) {
    FieldPtr f3 = make_field_of_order(3);
    SparseState code_state = state_from_code(mds_from_singleton(4, 2, f3));
    SupportCensus c = support_census(code_state, 2);
    EXPECT_EQ(c.support, 9u);
    EXPECT_TRUE(c.is_minimal);
    SupportCensus b = support_census(ame_5_2_state(), 2);
    EXPECT_EQ(b.support, 8u);
    EXPECT_FALSE(b.is_minimal);
    SupportCensus a = support_census(ame_7_4(), 3);
    EXPECT_EQ(a.support, 256u);
    EXPECT_FALSE(a.is_minimal);
    EXPECT_EQ(kind_of([&] { support_census(code_state, 3); }), ErrorKind::SupportBelowRankBound);
}

TEST(verify, slocc_witnesses) {
    // Two classical sites and one quantum site of a 2-uniform Cl+Q state on 6 parties.
    FieldPtr f3 = make_field_of_order(3);
    SparseState s = cl_plus_q(mds_from_singleton(4, 2, f3), ghz_state(f3, 2));
    ASSERT_EQ(uniformity(s).max_verified_k, 2u);
    EXPECT_FALSE(support_census(s, 2).is_minimal);
    auto w = slocc_witness(s, 2, 4);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->size(), 3u);
    EXPECT_GE(w->back(), 4u);
    EXPECT_TRUE(is_maximally_mixed(reduced_density(s, *w)).maximally_mixed);

    FieldPtr f2 = make_field_of_order(2);

    SparseState pair = tensor(ghz_state(f2, 2), ghz_state(f2, 2));
    auto p = slocc_witness(pair, 1);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(*p, (std::vector<size_t>{0, 2}));

    EXPECT_FALSE(slocc_witness(state_from_code(mds_from_singleton(4, 2, f3)), 2).has_value());

    // Pure-state rank bound: a size k+1 reduction of an AME state has rank at
    // most q^(n-k-1) < q^(k+1), so no witness exists.
    EXPECT_FALSE(slocc_witness(ame_5_2_state(), 2, 3).has_value());
    EXPECT_FALSE(slocc_witness(ame_7_4(), 3, 5).has_value());
}

TEST(verify, gram_checks) {
    FieldPtr f2 = make_field_of_order(2);
    WeylBasis ghz_basis(ghz_state(f2, 3), 1);
    std::vector<SparseState> states;
    for (uint64_t i = 0; i < ghz_basis.size(); i++) {
        states.push_back(ghz_basis.at(i));
    }
    GramResult g = gram_check(states);
    EXPECT_TRUE(g.orthogonal_equal_norm);
    EXPECT_EQ(g.gram[0][0].as_integer(), std::optional<int64_t>(2));

    FieldPtr f3 = make_field_of_order(3);
    std::vector<SparseState> bells;
    for (uint32_t l = 0; l < 3; l++) {
        for (uint32_t m = 0; m < 3; m++) {
            bells.push_back(bell_state(f3, l, m));
        }
    }
    GramResult gb = gram_check(bells);
    EXPECT_TRUE(gb.orthogonal_equal_norm);
    EXPECT_EQ(gb.gram[4][4].as_integer(), std::optional<int64_t>(3));

    std::vector<SparseState> twice = {ghz_state(f2, 3), ghz_state(f2, 3)};
    EXPECT_FALSE(gram_check(twice).orthogonal_equal_norm);
    std::vector<SparseState> mixed = {ghz_state(f2, 3), ghz_state(f2, 2)};
    EXPECT_EQ(kind_of([&] { gram_check(mixed); }), ErrorKind::ShapeMismatch);
}

TEST(verify, stabilizer_examples) {
    FieldPtr f2 = make_field_of_order(2);
    SparseState plus = local_fourier(basis_state(f2, std::vector<uint16_t>{0}), std::vector<size_t>{0});
    EXPECT_TRUE(stabilizer_check(plus, FFMatrix(f2, 1, 1)).stabilized);

    SparseState graph2 = local_fourier(ghz_state(f2, 2), std::vector<size_t>{0});
    EXPECT_TRUE(stabilizer_check(graph2, FFMatrix::from_rows(f2, {{0, 1}, {1, 0}})).stabilized);

    FFMatrix star = FFMatrix::from_rows(f2, {{0, 1, 1}, {1, 0, 0}, {1, 0, 0}});
    StabilizerResult ghz = stabilizer_check(ghz_state(f2, 3), star);
    EXPECT_FALSE(ghz.stabilized);
    EXPECT_EQ(ghz.failing_vertex, std::optional<size_t>(0));
    // GHZ_3 is the [3,1] code state; Fourier on its last two sites gives the star graph.
    EXPECT_TRUE(stabilizer_check(local_fourier(ghz_state(f2, 3), std::vector<size_t>{1, 2}), star).stabilized);

    EXPECT_EQ(kind_of([] {
                  FieldPtr f4 = make_field_of_order(4);
                  stabilizer_check(ghz_state(f4, 2), FFMatrix(f4, 2, 2));
              }),
              ErrorKind::NonPrimeQ);
}

TEST(verify, code_states_become_bipartite_graph_states) {
    for (uint32_t q : {3, 5, 7}) {
        FieldPtr f = make_field_of_order(q);
        for (auto [n, k] : std::vector<std::pair<size_t, size_t>>{{4, 2}, {5, 2}, {6, 3}}) {
            if (n > q + 1) {
                continue;
            }
            LinearCode c = mds_from_singleton(n, k, f);
            std::vector<size_t> tail;
            for (size_t i = k; i < n; i++) {
                tail.push_back(i);
            }
            SparseState g = local_fourier(state_from_code(c), tail);
            FFMatrix adj(f, n, n);
            for (size_t r = 0; r < k; r++) {
                for (size_t j = k; j < n; j++) {
                    adj.set(r, j, c.generator().at(r, j));
                    adj.set(j, r, c.generator().at(r, j));
                }
            }
            EXPECT_TRUE(stabilizer_check(g, adj).stabilized) << n << " " << k << " " << q;
        }
    }
}

TEST(verify, complementary_spectra) {
    std::vector<SparseState> states = {ame_5_2_state(), ghz_state(make_field_of_order(3), 4),
                                       ame_5_q(make_field_of_order(3))};
    for (const SparseState &s : states) {
        for (size_t size = 1; size <= s.n() / 2; size++) {
            std::vector<size_t> subset(size);
            for (size_t i = 0; i < size; i++) {
                subset[i] = i;
            }
            if (checked_pow(s.q(), s.n() - size) > 64) {
                continue;
            }
            do {
                EXPECT_TRUE(complementary_spectra_match(s, subset));
            } while (next_combination(subset, s.n()));
        }
    }
}

TEST(verify, characteristic_polynomial_of_small_matrix) {
    // rho of |00> + |01> on site 1 is [[1,1],[1,1]]: x^2 - 2x.
    FieldPtr f2 = make_field_of_order(2);
    StateBuilder b(f2, 2);
    b.add_root(std::vector<uint16_t>{0, 0}, 0);
    b.add_root(std::vector<uint16_t>{0, 1}, 0);
    SparseState s = b.build();
    std::vector<size_t> site1 = {1};
    auto p = characteristic_polynomial(reduced_density(s, site1));
    ASSERT_EQ(p.size(), 3u);
    EXPECT_TRUE(p[0].is_zero());
    EXPECT_EQ(p[1].as_integer(), std::optional<int64_t>(-2));
    EXPECT_EQ(p[2].as_integer(), std::optional<int64_t>(1));
}

TEST(verify, certificate_agrees_with_tracing) {
    for (uint32_t q : {4, 5}) {
        GQPair pair = construct_G_Q(make_field_of_order(q));
        CertificateReport cert = certify_ame_via_codes(pair.g, pair.q);
        EXPECT_TRUE(cert.ame);
        EXPECT_EQ(cert.claim(), "AME(7," + std::to_string(q) + ")");
        EXPECT_TRUE(uniformity(cl_plus_q_repetition(pair.g, pair.q)).is_ame());
    }
    GQPair p5 = construct_G_Q(make_field_of_order(5));
    QMatrix bad(FFMatrix::from_rows(p5.g.spec(), {{1, 0}, {0, 1}, {0, 0}}));
    CertificateReport no = certify_ame_via_codes(p5.g, bad);
    EXPECT_FALSE(no.ame);
    EXPECT_EQ(no.claim(), "");
}
