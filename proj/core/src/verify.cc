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

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <unordered_map>

#include "kuni/combinatorics.h"
#include "kuni/error.h"
#include "kuni/limits.h"
#include "kuni/parallel.h"

namespace kuni {

Cyclotomic ReducedDensity::entry(uint64_t row, uint64_t col) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(row, col),
                               [](const Entry &e, const std::pair<uint64_t, uint64_t> &key) {
                                   return std::make_pair(e.row, e.col) < key;
                               });
    if (it != entries_.end() && it->row == row && it->col == col) {
        return Cyclotomic(q_, it->coeffs);
    }
    return Cyclotomic(q_);
}

Cyclotomic ReducedDensity::trace() const {
    Cyclotomic sum(q_);
    for (const Entry &e : entries_) {
        if (e.row == e.col) {
            sum += Cyclotomic(q_, e.coeffs);
        }
    }
    return sum;
}

bool ReducedDensity::is_hermitian() const {
    for (const Entry &e : entries_) {
        if (!entry(e.col, e.row).conj().equals(Cyclotomic(q_, e.coeffs))) {
            return false;
        }
    }
    return true;
}

std::vector<uint16_t> ReducedDensity::symbols(uint64_t index) const {
    std::vector<uint16_t> out(subset_.size());
    for (size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<uint16_t>(index % q_);
        index /= q_;
    }
    return out;
}

ReducedDensity reduced_density(const SparseState &state, std::span<const size_t> subset) {
    size_t n = state.n();
    std::vector<size_t> s(subset.begin(), subset.end());
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end() || (!s.empty() && s.back() >= n)) {
        throw Error(ErrorKind::OutOfRange, "subset must hold distinct sites below n");
    }
    uint32_t q = state.q();
    uint64_t dim = checked_pow(q, s.size());
    if (dim > kMaxReducedDim) {
        throw Error(ErrorKind::TooLarge, "reduced dimension " + std::to_string(dim) + " above " +
                                             std::to_string(kMaxReducedDim));
    }
    std::vector<char> in_subset(n, 0);
    for (size_t site : s) {
        in_subset[site] = 1;
    }
    std::vector<size_t> rest;
    for (size_t site = 0; site < n; site++) {
        if (!in_subset[site]) {
            rest.push_back(site);
        }
    }

    size_t terms = state.support();
    std::vector<uint64_t> row_of(terms);
    for (size_t t = 0; t < terms; t++) {
        auto b = state.basis(t);
        uint64_t r = 0;
        for (size_t site : s) {
            r = r * q + b[site];
        }
        row_of[t] = r;
    }
    // Group terms that agree on the traced-out sites.
    std::vector<size_t> order(terms);
    for (size_t t = 0; t < terms; t++) {
        order[t] = t;
    }
    auto rest_less = [&](size_t a, size_t b) {
        auto ba = state.basis(a);
        auto bb = state.basis(b);
        for (size_t site : rest) {
            if (ba[site] != bb[site]) {
                return ba[site] < bb[site];
            }
        }
        return false;
    };
    std::sort(order.begin(), order.end(), rest_less);

    uint32_t L = state.order();
    std::unordered_map<uint64_t, size_t> slot;
    std::vector<int64_t> acc;
    std::vector<uint64_t> keys;
    size_t i = 0;
    while (i < terms) {
        size_t j = i + 1;
        while (j < terms && !rest_less(order[i], order[j])) {
            j++;
        }
        for (size_t a = i; a < j; a++) {
            for (size_t b = i; b < j; b++) {
                uint64_t key = row_of[order[a]] * dim + row_of[order[b]];
                auto [it, fresh] = slot.try_emplace(key, keys.size());
                if (fresh) {
                    keys.push_back(key);
                    acc.resize(acc.size() + L, 0);
                }
                accumulate_product_conj(std::span<int64_t>(acc.data() + it->second * L, L),
                                        state.coeffs(order[a]), state.coeffs(order[b]));
            }
        }
        i = j;
    }

    ReducedDensity rho;
    rho.subset_ = s;
    rho.q_ = q;
    rho.dim_ = dim;
    std::vector<size_t> by_key(keys.size());
    for (size_t x = 0; x < by_key.size(); x++) {
        by_key[x] = x;
    }
    std::sort(by_key.begin(), by_key.end(), [&](size_t a, size_t b) { return keys[a] < keys[b]; });
    for (size_t x : by_key) {
        std::span<const int64_t> c(acc.data() + x * L, L);
        if (cyclotomic_is_zero(c, L)) {
            continue;
        }
        rho.entries_.push_back({keys[x] / dim, keys[x] % dim, std::vector<int64_t>(c.begin(), c.end())});
    }
    return rho;
}

MixednessResult is_maximally_mixed(const ReducedDensity &rho) {
    MixednessResult result;
    uint64_t dim = rho.dim();
    uint64_t first_bad = std::numeric_limits<uint64_t>::max();
    for (const auto &e : rho.entries()) {
        if (e.row != e.col) {
            first_bad = e.row * dim + e.col;
            result.violation = MixednessViolation::OffDiagonal;
            result.row = e.row;
            result.col = e.col;
            break;
        }
    }
    Cyclotomic reference = rho.entry(0, 0);
    for (uint64_t r = 1; r < dim; r++) {
        if (r * dim + r > first_bad) {
            break;
        }
        if (!rho.entry(r, r).equals(reference)) {
            result.violation = MixednessViolation::Diagonal;
            result.row = 0;
            result.col = r;
            break;
        }
    }
    result.maximally_mixed = result.violation == MixednessViolation::None;
    return result;
}

std::vector<Cyclotomic> characteristic_polynomial(const ReducedDensity &rho) {
    uint64_t dim = rho.dim();
    if (dim > 64) {
        throw Error(ErrorKind::TooLarge, "characteristic polynomial limited to dimension 64");
    }
    uint32_t L = rho.q();
    size_t d = static_cast<size_t>(dim);
    std::vector<Cyclotomic> a(d * d, Cyclotomic(L));
    for (const auto &e : rho.entries()) {
        a[e.row * d + e.col] = Cyclotomic(L, e.coeffs);
    }
    auto at = [&](size_t r, size_t c) -> const Cyclotomic & { return a[r * d + c]; };

    // Berkowitz: coefficients of det(xI - A_r), highest degree first, grown one
    // leading principal block at a time.
    std::vector<Cyclotomic> vec = {Cyclotomic::integer(L, 1), -at(0, 0)};
    for (size_t r = 1; r < d; r++) {
        std::vector<Cyclotomic> t;
        t.push_back(Cyclotomic::integer(L, 1));
        t.push_back(-at(r, r));
        // col = M^p C, starting from C = A[0..r-1][r].
        std::vector<Cyclotomic> col(r, Cyclotomic(L));
        for (size_t i = 0; i < r; i++) {
            col[i] = at(i, r);
        }
        for (size_t p = 0; p < r; p++) {
            Cyclotomic dot(L);
            for (size_t i = 0; i < r; i++) {
                dot += at(r, i) * col[i];
            }
            t.push_back(-dot);
            std::vector<Cyclotomic> next(r, Cyclotomic(L));
            for (size_t i = 0; i < r; i++) {
                for (size_t j = 0; j < r; j++) {
                    next[i] += at(i, j) * col[j];
                }
            }
            col = std::move(next);
        }
        std::vector<Cyclotomic> grown(r + 2, Cyclotomic(L));
        for (size_t i = 0; i < r + 2; i++) {
            for (size_t j = 0; j <= std::min(i, r); j++) {
                grown[i] += t[i - j] * vec[j];
            }
        }
        vec = std::move(grown);
    }
    std::reverse(vec.begin(), vec.end());
    return vec;
}

bool complementary_spectra_match(const SparseState &state, std::span<const size_t> subset) {
    std::vector<char> in(state.n(), 0);
    for (size_t s : subset) {
        in.at(s) = 1;
    }
    std::vector<size_t> complement;
    for (size_t s = 0; s < state.n(); s++) {
        if (!in[s]) {
            complement.push_back(s);
        }
    }
    ReducedDensity ra = reduced_density(state, subset);
    ReducedDensity rb = reduced_density(state, complement);
    std::vector<Cyclotomic> pa = characteristic_polynomial(ra);
    std::vector<Cyclotomic> pb = characteristic_polynomial(rb);
    // p_A(x) x^{dB} == p_B(x) x^{dA}
    uint32_t L = state.order();
    std::vector<Cyclotomic> lhs(rb.dim(), Cyclotomic(L));
    lhs.insert(lhs.end(), pa.begin(), pa.end());
    std::vector<Cyclotomic> rhs(ra.dim(), Cyclotomic(L));
    rhs.insert(rhs.end(), pb.begin(), pb.end());
    if (lhs.size() != rhs.size()) {
        return false;
    }
    for (size_t i = 0; i < lhs.size(); i++) {
        if (!lhs[i].equals(rhs[i])) {
            return false;
        }
    }
    return true;
}

namespace {

enum class SubsetCase { Classical, Quantum, Split };

SubsetCase classify(const std::vector<size_t> &subset, size_t classical_sites) {
    bool any_classical = false;
    bool any_quantum = false;
    for (size_t s : subset) {
        (s < classical_sites ? any_classical : any_quantum) = true;
    }
    if (any_classical && any_quantum) {
        return SubsetCase::Split;
    }
    return any_classical ? SubsetCase::Classical : SubsetCase::Quantum;
}

}  // namespace

UniformityReport uniformity(const SparseState &state, const UniformityOptions &options) {
    UniformityReport report;
    report.n = state.n();
    report.q = state.q();
    report.mode = options.sampled ? SweepMode::Sampled : SweepMode::Exhaustive;
    report.seed = options.seed;
    report.sample_count = options.sample_count;
    report.classical_sites = options.classical_sites;
    if (options.sampled && options.sample_count == 0) {
        throw Error(ErrorKind::OutOfRange, "sampled sweep needs a positive sample count");
    }
    size_t n = state.n();
    size_t top = n / 2;
    if (options.k_max) {
        top = std::min(top, *options.k_max);
    }
    if (top > 0 && checked_pow(state.q(), top) > kMaxReducedDim) {
        throw Error(ErrorKind::TooLarge, "reductions of size " + std::to_string(top) + " exceed dimension " +
                                             std::to_string(kMaxReducedDim));
    }
    std::mt19937_64 rng(options.seed);

    for (size_t size = 1; size <= top; size++) {
        SizeTally tally;
        tally.size = size;
        tally.total_subsets = binomial(n, size);
        std::vector<uint64_t> indices;
        if (options.sampled && options.sample_count < tally.total_subsets) {
            std::uniform_int_distribution<uint64_t> pick(0, tally.total_subsets - 1);
            std::set<uint64_t> chosen;
            while (chosen.size() < options.sample_count) {
                chosen.insert(pick(rng));
            }
            indices.assign(chosen.begin(), chosen.end());
        } else {
            indices.resize(tally.total_subsets);
            for (uint64_t i = 0; i < indices.size(); i++) {
                indices[i] = i;
            }
        }
        std::vector<char> pass(indices.size(), 0);
        parallel_for(indices.size(), [&](size_t begin, size_t end) {
            for (size_t i = begin; i < end; i++) {
                std::vector<size_t> subset = unrank_combination(n, size, indices[i]);
                pass[i] = is_maximally_mixed(reduced_density(state, subset)).maximally_mixed;
            }
        });
        bool all = true;
        for (size_t i = 0; i < indices.size(); i++) {
            tally.checked++;
            tally.passed += pass[i];
            if (options.classical_sites) {
                std::vector<size_t> subset = unrank_combination(n, size, indices[i]);
                CaseTally *c = nullptr;
                switch (classify(subset, *options.classical_sites)) {
                    case SubsetCase::Classical:
                        c = &tally.classical;
                        break;
                    case SubsetCase::Quantum:
                        c = &tally.quantum;
                        break;
                    case SubsetCase::Split:
                        c = &tally.split;
                        break;
                }
                c->checked++;
                c->passed += pass[i];
            }
            if (!pass[i] && all) {
                all = false;
                report.first_failure = unrank_combination(n, size, indices[i]);
                report.failure_witness = is_maximally_mixed(reduced_density(state, *report.first_failure));
            }
        }
        report.sizes.push_back(tally);
        if (!all) {
            break;
        }
        report.max_verified_k = size;
    }
    return report;
}

SupportCensus support_census(const SparseState &state, size_t k) {
    uint64_t bound = checked_pow(state.q(), k);
    if (state.support() < bound) {
        throw Error(ErrorKind::SupportBelowRankBound, "support " + std::to_string(state.support()) + " < q^k = " +
                                                          std::to_string(bound));
    }
    return {state.support(), state.support() == bound};
}

std::optional<std::vector<size_t>> slocc_witness(const SparseState &state, size_t k,
                                                 std::optional<size_t> classical_sites) {
    size_t n = state.n();
    size_t size = k + 1;
    if (size > n) {
        throw Error(ErrorKind::OutOfRange, "k + 1 exceeds the party count");
    }
    if (checked_pow(state.q(), size) > kMaxReducedDim) {
        throw Error(ErrorKind::TooLarge, "reductions of size " + std::to_string(size) + " too large");
    }
    auto mixed = [&](const std::vector<size_t> &subset) {
        return is_maximally_mixed(reduced_density(state, subset)).maximally_mixed;
    };
    if (classical_sites && *classical_sites >= k && *classical_sites < n) {
        size_t m = *classical_sites;
        std::vector<size_t> combo(k);
        for (size_t i = 0; i < k; i++) {
            combo[i] = i;
        }
        do {
            for (size_t site = m; site < n; site++) {
                std::vector<size_t> subset = combo;
                subset.push_back(site);
                if (mixed(subset)) {
                    return subset;
                }
            }
        } while (k > 0 && next_combination(combo, m));
    }
    auto fail = find_first_failing_subset(n, size, [&](const std::vector<size_t> &subset) { return !mixed(subset); });
    if (fail) {
        return unrank_combination(n, size, *fail);
    }
    return std::nullopt;
}

GramResult gram_check(std::span<const SparseState> states) {
    GramResult result;
    size_t count = states.size();
    for (size_t i = 1; i < count; i++) {
        if (states[i].n() != states[0].n() || states[i].q() != states[0].q()) {
            throw Error(ErrorKind::ShapeMismatch, "states differ in shape");
        }
    }
    if (count == 0) {
        result.orthogonal_equal_norm = true;
        return result;
    }
    uint32_t L = states[0].order();
    result.gram.assign(count, std::vector<Cyclotomic>(count, Cyclotomic(L)));
    parallel_for(count, [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; i++) {
            for (size_t j = 0; j < count; j++) {
                result.gram[i][j] = inner_product(states[i], states[j]);
            }
        }
    });
    bool ok = true;
    for (size_t i = 0; i < count && ok; i++) {
        for (size_t j = 0; j < count && ok; j++) {
            if (i == j) {
                ok = result.gram[i][i].equals(result.gram[0][0]);
            } else {
                ok = result.gram[i][j].is_zero();
            }
        }
    }
    result.orthogonal_equal_norm = ok;
    return result;
}

StabilizerResult stabilizer_check(const SparseState &state, const FFMatrix &adjacency) {
    if (!state.spec()->is_prime_field()) {
        throw Error(ErrorKind::NonPrimeQ, "stabilizer check needs prime q, got " + std::to_string(state.q()));
    }
    size_t n = state.n();
    if (adjacency.rows() != n || adjacency.cols() != n || adjacency.spec()->q() != state.q()) {
        throw Error(ErrorKind::ShapeMismatch, "adjacency must be n x n over Z_q");
    }
    StabilizerResult result;
    for (size_t i = 0; i < n; i++) {
        WeylWord s(state.q(), n);
        s.set_x(i, 1);
        for (size_t j = 0; j < n; j++) {
            if (adjacency.at(i, j) != 0) {
                s.set_z(j, adjacency.at(i, j));
            }
        }
        if (!(apply_weyl(state, s) == state)) {
            result.failing_vertex = i;
            return result;
        }
    }
    result.stabilized = true;
    return result;
}

std::string CertificateReport::claim() const {
    if (!ame) {
        return "";
    }
    return "AME(" + std::to_string(parties) + "," + std::to_string(q) + ")";
}

CertificateReport certify_ame_via_codes(const FFMatrix &g, const QMatrix &q) {
    CertificateReport report;
    report.decomposition = verify_decomposition(g, q);
    report.parties = g.cols() + 2;
    report.q = g.spec()->q();
    report.ame = report.decomposition.certified();
    return report;
}

}  // namespace kuni
