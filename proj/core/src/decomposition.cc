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

#include "kuni/decomposition.h"

#include <random>
#include <set>

#include "kuni/error.h"
#include "kuni/limits.h"
#include "kuni/parallel.h"
#include "kuni/singleton.h"

namespace kuni {

QMatrix::QMatrix(FFMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.cols() != 2) {
        throw Error(ErrorKind::ShapeMismatch, "Q must have 2 columns, got " + std::to_string(matrix_.cols()));
    }
}

QMatrix QMatrix::from_columns(FieldPtr spec, std::span<const uint32_t> q1, std::span<const uint32_t> q2) {
    if (q1.size() != q2.size()) {
        throw Error(ErrorKind::ShapeMismatch, "Q columns differ in length");
    }
    FFMatrix m(spec, q1.size(), 2);
    for (size_t r = 0; r < q1.size(); r++) {
        m.set(r, 0, q1[r]);
        m.set(r, 1, q2[r]);
    }
    return QMatrix(std::move(m));
}

std::vector<uint32_t> QMatrix::column(size_t c) const {
    std::vector<uint32_t> out(k());
    for (size_t r = 0; r < k(); r++) {
        out[r] = matrix_.at(r, c);
    }
    return out;
}

size_t QMatrix::rank() const {
    return matrix_rank(matrix_);
}

std::pair<uint32_t, uint32_t> QMatrix::label(std::span<const uint32_t> message) const {
    std::vector<uint32_t> l = matrix_.left_multiply(message);
    return {l[0], l[1]};
}

namespace {

uint32_t ceil_half(size_t n) {
    return static_cast<uint32_t>((n + 1) / 2);
}

GQPair gf4_pair(const FieldPtr &spec) {
    // Rows i, j, l of the [5,3] code; vQ = (i + j, i + x l).
    FFMatrix g = FFMatrix::from_rows(spec, {{1, 0, 0, 1, 1}, {0, 1, 0, 1, 2}, {0, 0, 1, 1, 3}});
    FFMatrix q = FFMatrix::from_rows(spec, {{1, 1}, {1, 0}, {0, 2}});
    return {g, QMatrix(q)};
}

void require_certified(const GQPair &pair) {
    DecompositionReport report = verify_decomposition(pair.g, pair.q);
    if (!report.certified()) {
        std::string failed;
        for (const DecompositionCheck *c : report.checks()) {
            if (!c->passed) {
                failed += " " + c->name + " (" + c->detail + ")";
            }
        }
        throw Error(ErrorKind::CertificationFailed, "decomposition failed:" + failed);
    }
}

}  // namespace

GQPair construct_G_Q(const FieldPtr &spec) {
    uint32_t q = spec->q();
    if (q == 4) {
        GQPair pair = gf4_pair(spec);
        require_certified(pair);
        return pair;
    }
    if (q % 2 == 0 || q < 5) {
        throw Error(ErrorKind::OutOfRange, "construction needs q = 4 or odd q >= 5, got " + std::to_string(q));
    }
    size_t k = ceil_half(q);
    LinearCode extended = mds_from_singleton(q + 1, k, spec);
    LinearCode punctured = puncture(extended, k - 1);

    SingletonArray array(spec);
    std::vector<uint32_t> q1(k, 0);
    std::vector<uint32_t> q2(k, 0);
    for (size_t r = 0; r + 1 < k; r++) {
        q1[r] = array.at(r, k);
    }
    q2[k - 1] = 1;
    GQPair pair{punctured.generator(), QMatrix::from_columns(spec, q1, q2)};
    require_certified(pair);
    return pair;
}

GQPair construct_G_Q_for_length(const FieldPtr &spec, size_t n, uint64_t budget) {
    uint32_t q = spec->q();
    if (n == q || (q == 4 && n == 5)) {
        return construct_G_Q(spec);
    }
    if (n < 5 || n > q) {
        throw Error(ErrorKind::OutOfRange,
                    "parent length " + std::to_string(n) + " outside [5, " + std::to_string(q) + "]");
    }
    LinearCode parent = mds_from_singleton(n, ceil_half(n), spec);
    SearchResult found = search_Q(parent.generator(), budget);
    if (!found.q) {
        throw Error(ErrorKind::CertificationFailed,
                    "no Q found after " + std::to_string(found.attempts) + " candidates");
    }
    GQPair pair{parent.generator(), *found.q};
    require_certified(pair);
    return pair;
}

LinearCode kernel_subcode(const FFMatrix &g, const QMatrix &q) {
    if (q.k() != g.rows()) {
        throw Error(ErrorKind::ShapeMismatch,
                    "Q has " + std::to_string(q.k()) + " rows, G has " + std::to_string(g.rows()));
    }
    if (g.spec()->q() != q.spec()->q()) {
        throw Error(ErrorKind::SpecMismatch, "G and Q over different fields");
    }
    size_t rank = q.rank();
    if (rank != 2 || g.rows() < 3) {
        throw Error(ErrorKind::BadKernelDimension, "kernel of Q has dimension " + std::to_string(g.rows() - rank) +
                                                       ", expected " + std::to_string(g.rows()) + " - 2 >= 1");
    }
    FFMatrix basis = left_kernel(q.matrix());
    return LinearCode(basis * g);
}

CosetDecomposition::CosetDecomposition(LinearCode parent, LinearCode subcode, QMatrix q)
    : parent_(std::move(parent)), subcode_(std::move(subcode)), q_(std::move(q)) {
    std::vector<uint32_t> e1 = {1, 0};
    std::vector<uint32_t> e2 = {0, 1};
    unit_alpha_ = *solve_left(q_.matrix(), e1);
    unit_beta_ = *solve_left(q_.matrix(), e2);
}

std::vector<uint32_t> CosetDecomposition::representative_message(uint32_t alpha, uint32_t beta) const {
    const FieldSpec &f = *parent_.spec();
    if (alpha >= f.q() || beta >= f.q()) {
        throw Error(ErrorKind::OutOfRange, "label outside GF(q)");
    }
    std::vector<uint32_t> v(parent_.k());
    for (size_t i = 0; i < v.size(); i++) {
        v[i] = f.add(f.mul(alpha, unit_alpha_[i]), f.mul(beta, unit_beta_[i]));
    }
    return v;
}

std::vector<uint32_t> CosetDecomposition::representative(uint32_t alpha, uint32_t beta) const {
    return parent_.encode(representative_message(alpha, beta));
}

const std::vector<std::vector<uint32_t>> &CosetDecomposition::coset(uint32_t alpha, uint32_t beta) const {
    if (!is_explicit()) {
        throw Error(ErrorKind::OutOfRange, "coset lists exist only in explicit mode");
    }
    uint32_t q = parent_.q();
    if (alpha >= q || beta >= q) {
        throw Error(ErrorKind::OutOfRange, "label outside GF(q)");
    }
    return cosets_[static_cast<size_t>(alpha) * q + beta];
}

CosetDecomposition coset_partition(const FFMatrix &g, const QMatrix &q, PartitionMode mode) {
    LinearCode subcode = kernel_subcode(g, q);
    CosetDecomposition out(LinearCode(g), std::move(subcode), q);
    if (mode == PartitionMode::Explicit) {
        uint64_t total = checked_pow(g.spec()->q(), g.rows());
        if (total > max_terms()) {
            throw Error(ErrorKind::TooLarge, std::to_string(total) + " codewords for explicit partition");
        }
        uint32_t qq = g.spec()->q();
        out.cosets_.resize(static_cast<size_t>(qq) * qq);
        CodewordEnumerator it(out.parent_);
        while (it.next()) {
            auto [alpha, beta] = q.label(it.message());
            out.cosets_[static_cast<size_t>(alpha) * qq + beta].push_back(it.codeword());
        }
    }
    return out;
}

DecompositionReport verify_decomposition(const FFMatrix &g, const QMatrix &q) {
    DecompositionReport report;
    report.n = g.cols();
    report.k = g.rows();
    report.q = g.spec()->q();
    size_t n = report.n;
    size_t k = report.k;

    DecompositionCheck &a = report.parent_mds;
    a.name = "parent_mds";
    if (k != ceil_half(n)) {
        a.detail = "dimension " + std::to_string(k) + " != ceil(n/2) = " + std::to_string(ceil_half(n));
    } else if (matrix_rank(g) != k) {
        a.detail = "G is rank deficient";
    } else {
        try {
            MdsCertificate cert = is_mds(LinearCode(g), MdsMethod::Columns);
            a.passed = cert.is_mds;
            a.checks = cert.checks;
            a.witness = cert.witness_columns;
            a.detail = cert.is_mds ? "every " + std::to_string(k) + " columns independent"
                                   : "dependent column set";
        } catch (const Error &e) {
            a.detail = e.what();
        }
    }

    DecompositionCheck &c = report.q_rank;
    c.name = "q_rank";
    c.checks = 1;
    bool shapes_ok = q.k() == k && q.spec()->q() == g.spec()->q();
    size_t rank_q = shapes_ok ? q.rank() : 0;
    c.passed = shapes_ok && rank_q == 2;
    c.detail = shapes_ok ? "rank " + std::to_string(rank_q) : "Q shape does not match G";

    DecompositionCheck &b = report.kernel_mds;
    b.name = "kernel_mds";
    if (!c.passed || k < 3) {
        b.detail = "kernel dimension is not k - 2 >= 1";
    } else {
        try {
            LinearCode sub = kernel_subcode(g, q);
            MdsCertificate cert = is_mds(sub, MdsMethod::Columns);
            b.passed = cert.is_mds;
            b.checks = cert.checks;
            b.witness = cert.witness_columns;
            b.detail = cert.is_mds ? "every " + std::to_string(k - 2) + " columns independent"
                                   : "dependent column set";
            if (cert.is_mds) {
                sub.cache_distance(n - (k - 2) + 1);
            }
        } catch (const Error &e) {
            b.detail = e.what();
        }
    }

    DecompositionCheck &d = report.labels_onto;
    d.name = "labels_onto";
    if (shapes_ok) {
        const FieldSpec &f = *g.spec();
        std::vector<uint32_t> e1 = {1, 0};
        std::vector<uint32_t> e2 = {0, 1};
        auto u = solve_left(q.matrix(), e1);
        auto w = solve_left(q.matrix(), e2);
        d.checks = 2;
        bool ok = u && w && q.label(*u) == std::pair<uint32_t, uint32_t>{1, 0} &&
                  q.label(*w) == std::pair<uint32_t, uint32_t>{0, 1};
        uint64_t messages = checked_pow(f.q(), k);
        if (ok && messages <= 1'000'000) {
            // Small enough to confirm by counting every label.
            std::vector<char> hit(static_cast<size_t>(f.q()) * f.q(), 0);
            std::vector<uint32_t> v(k, 0);
            for (uint64_t i = 0; i < messages; i++) {
                auto [al, be] = q.label(v);
                hit[static_cast<size_t>(al) * f.q() + be] = 1;
                for (size_t pos = k; pos-- > 0;) {
                    if (++v[pos] < f.q()) {
                        break;
                    }
                    v[pos] = 0;
                }
            }
            d.checks += messages;
            for (char h : hit) {
                ok = ok && h;
            }
        }
        d.passed = ok;
        d.detail = ok ? "preimages of (1,0) and (0,1) found" : "some label in GF(q)^2 is not reached";
    } else {
        d.detail = "Q shape does not match G";
    }
    return report;
}

SearchResult search_Q(const FFMatrix &g, uint64_t budget, SearchMode mode, uint64_t seed) {
    size_t k = g.rows();
    if (k < 3) {
        throw Error(ErrorKind::BadKernelDimension, "k = " + std::to_string(k) + " leaves no kernel subcode");
    }
    const FieldPtr &spec = g.spec();
    uint32_t q = spec->q();
    size_t digits = 2 * k;

    auto build = [&](const std::vector<uint32_t> &d) {
        FFMatrix m(spec, k, 2);
        for (size_t r = 0; r < k; r++) {
            m.set(r, 0, d[r]);
            m.set(r, 1, d[k + r]);
        }
        return QMatrix(std::move(m));
    };
    // 0 = skipped (rank < 2), 1 = kernel not MDS, 2 = valid.
    auto evaluate = [&](const QMatrix &cand) -> int {
        if (cand.rank() != 2) {
            return 0;
        }
        return is_mds(kernel_subcode(g, cand), MdsMethod::Columns).is_mds ? 2 : 1;
    };

    SearchResult result;
    constexpr size_t kBatch = 512;
    std::vector<std::vector<uint32_t>> batch;
    std::vector<int> status;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint32_t> symbol(0, q - 1);
    std::vector<uint32_t> cursor(digits, 0);
    bool exhausted = false;

    while (result.attempts < budget && !exhausted) {
        batch.clear();
        while (batch.size() < kBatch && !exhausted) {
            if (mode == SearchMode::Randomized) {
                std::vector<uint32_t> d(digits);
                for (auto &x : d) {
                    x = symbol(rng);
                }
                batch.push_back(std::move(d));
            } else {
                batch.push_back(cursor);
                size_t pos = digits;
                while (pos > 0) {
                    pos--;
                    if (++cursor[pos] < q) {
                        break;
                    }
                    cursor[pos] = 0;
                    if (pos == 0) {
                        exhausted = true;
                    }
                }
            }
        }
        status.assign(batch.size(), 0);
        parallel_for(batch.size(), [&](size_t begin, size_t end) {
            for (size_t i = begin; i < end; i++) {
                status[i] = evaluate(build(batch[i]));
            }
        });
        for (size_t i = 0; i < batch.size(); i++) {
            if (status[i] == 0) {
                continue;
            }
            result.attempts++;
            if (status[i] == 2) {
                result.q = build(batch[i]);
                return result;
            }
            if (result.attempts >= budget) {
                return result;
            }
        }
    }
    return result;
}

}  // namespace kuni
