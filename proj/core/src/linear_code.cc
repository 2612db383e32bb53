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

#include "kuni/linear_code.h"

#include <algorithm>
#include <istream>
#include <limits>
#include <sstream>

#include "kuni/combinatorics.h"
#include "kuni/error.h"
#include "kuni/limits.h"

namespace kuni {

namespace {

struct DistanceResult {
    size_t distance;
    std::vector<size_t> witness;
    uint64_t checks;
};

DistanceResult distance_brute_force(const LinearCode &code) {
    CodewordEnumerator it(code);
    size_t best = code.n() + 1;
    std::vector<size_t> witness;
    uint64_t checks = 0;
    it.next();  // zero message
    while (it.next()) {
        checks++;
        size_t w = hamming_weight(it.codeword());
        if (w < best) {
            best = w;
            witness.clear();
            for (size_t i = 0; i < code.n(); i++) {
                if (it.codeword()[i] != 0) {
                    witness.push_back(i);
                }
            }
        }
    }
    return {best, witness, checks};
}

DistanceResult distance_rank(const LinearCode &code) {
    size_t n = code.n();
    size_t k = code.k();
    if (k == n) {
        return {1, {0}, 0};
    }
    FFMatrix h = dual_code(code).generator();
    size_t r = n - k;
    auto level = [&](size_t w, uint64_t &checks) -> std::optional<std::vector<size_t>> {
        uint64_t total = binomial(n, w);
        if (total > kMaxDeterminants) {
            throw Error(ErrorKind::TooLarge, "rank method needs " + std::to_string(total) + " column checks");
        }
        auto fail = find_first_failing_subset(n, w, [&](const std::vector<size_t> &cols) {
            thread_local std::vector<uint32_t> scratch;
            return column_subset_rank(h, cols, scratch) == cols.size();
        });
        if (fail) {
            checks += *fail + 1;
            return unrank_combination(n, w, *fail);
        }
        checks += total;
        return std::nullopt;
    };
    uint64_t checks = 0;
    if (!level(r, checks)) {
        return {r + 1, {}, checks};
    }
    for (size_t w = 1; w <= r; w++) {
        if (auto dep = level(w, checks)) {
            return {w, *dep, checks};
        }
    }
    return {r + 1, {}, checks};  // unreachable: level r already failed
}

DistanceResult compute_distance(const LinearCode &code, DistanceMethod method) {
    if (method == DistanceMethod::Auto) {
        method = checked_pow(code.q(), code.k()) <= 1'000'000 ? DistanceMethod::BruteForce : DistanceMethod::Rank;
    }
    DistanceResult result =
        method == DistanceMethod::BruteForce ? distance_brute_force(code) : distance_rank(code);
    code.cache_distance(result.distance);
    return result;
}

}  // namespace

LinearCode::LinearCode(FFMatrix generator)
    : generator_(std::move(generator)), distance_(std::make_shared<std::atomic<int64_t>>(-1)) {
    if (generator_.rows() == 0) {
        throw Error(ErrorKind::OutOfRange, "code dimension must be >= 1");
    }
    if (matrix_rank(generator_) != generator_.rows()) {
        throw Error(ErrorKind::RankDeficient, "generator rows are linearly dependent");
    }
}

std::optional<size_t> LinearCode::cached_distance() const {
    int64_t d = distance_->load();
    if (d < 0) {
        return std::nullopt;
    }
    return static_cast<size_t>(d);
}

void LinearCode::cache_distance(size_t d) const {
    int64_t expected = -1;
    distance_->compare_exchange_strong(expected, static_cast<int64_t>(d));
}

LinearCode code_from_generator(FFMatrix generator) {
    return LinearCode(std::move(generator));
}

StandardForm standard_form(const LinearCode &code) {
    RrefResult red = matrix_rref(code.generator());
    std::vector<size_t> perm = red.pivots;
    std::vector<bool> is_pivot(code.n(), false);
    for (auto p : red.pivots) {
        is_pivot[p] = true;
    }
    for (size_t c = 0; c < code.n(); c++) {
        if (!is_pivot[c]) {
            perm.push_back(c);
        }
    }
    return {LinearCode(red.rref.select_columns(perm)), perm};
}

LinearCode dual_code(const LinearCode &code) {
    size_t n = code.n();
    size_t k = code.k();
    if (k == n) {
        throw Error(ErrorKind::OutOfRange, "dual of the full space is the zero code");
    }
    const FieldSpec &f = *code.spec();
    StandardForm sf = standard_form(code);
    const FFMatrix &g = sf.code.generator();
    FFMatrix h(code.spec(), n - k, n);
    for (size_t i = 0; i < n - k; i++) {
        for (size_t j = 0; j < k; j++) {
            h.set(i, sf.permutation[j], f.neg(g.at(j, k + i)));
        }
        h.set(i, sf.permutation[k + i], 1);
    }
    return LinearCode(std::move(h));
}

CodewordEnumerator::CodewordEnumerator(const LinearCode &code)
    : code_(&code), count_(checked_pow(code.q(), code.k())), message_(code.k(), 0), codeword_(code.n(), 0) {
    if (count_ > kMaxCodewords) {
        throw Error(ErrorKind::TooLarge, "q^k = " + std::to_string(count_) + " exceeds the enumeration cap");
    }
}

bool CodewordEnumerator::next() {
    if (!started_) {
        started_ = true;
        return true;
    }
    const FieldSpec &f = *code_->spec();
    const FFMatrix &g = code_->generator();
    uint32_t q = f.q();
    for (size_t i = message_.size(); i-- > 0;) {
        uint32_t old = message_[i];
        uint32_t now = old + 1 == q ? 0 : old + 1;
        message_[i] = now;
        // codeword += (now - old) * G_i
        uint32_t delta = f.sub(now, old);
        for (size_t c = 0; c < codeword_.size(); c++) {
            codeword_[c] = f.add(codeword_[c], f.mul(delta, g.at(i, c)));
        }
        if (now != 0) {
            return true;
        }
    }
    return false;
}

void for_each_codeword(const LinearCode &code,
                       const std::function<void(const std::vector<uint32_t> &, const std::vector<uint32_t> &)> &visit) {
    CodewordEnumerator it(code);
    while (it.next()) {
        visit(it.message(), it.codeword());
    }
}

std::vector<std::vector<uint32_t>> enumerate_codewords(const LinearCode &code) {
    std::vector<std::vector<uint32_t>> out;
    CodewordEnumerator it(code);
    out.reserve(it.count());
    while (it.next()) {
        out.push_back(it.codeword());
    }
    return out;
}

size_t hamming_weight(std::span<const uint32_t> word) {
    return static_cast<size_t>(std::count_if(word.begin(), word.end(), [](uint32_t s) { return s != 0; }));
}

size_t hamming_distance(std::span<const uint32_t> a, std::span<const uint32_t> b) {
    size_t d = 0;
    for (size_t i = 0; i < a.size(); i++) {
        d += a[i] != b[i];
    }
    return d;
}

size_t min_distance(const LinearCode &code, DistanceMethod method) {
    if (method == DistanceMethod::Auto) {
        if (auto d = code.cached_distance()) {
            return *d;
        }
    }
    return compute_distance(code, method).distance;
}

std::string mds_method_name(MdsMethod method) {
    switch (method) {
        case MdsMethod::Distance:
            return "distance";
        case MdsMethod::Submatrix:
            return "submatrix";
        case MdsMethod::Columns:
            return "columns";
    }
    return "unknown";
}

MdsCertificate is_mds(const LinearCode &code, MdsMethod method) {
    size_t n = code.n();
    size_t k = code.k();
    MdsCertificate cert;
    cert.method = method;
    switch (method) {
        case MdsMethod::Distance: {
            DistanceResult d = compute_distance(code, DistanceMethod::Auto);
            cert.distance = d.distance;
            cert.checks = d.checks;
            cert.is_mds = d.distance == n - k + 1;
            if (!cert.is_mds) {
                cert.witness_columns = d.witness;
            }
            break;
        }
        case MdsMethod::Columns: {
            uint64_t total = binomial(n, k);
            if (total > kMaxDeterminants) {
                throw Error(ErrorKind::TooLarge, "C(n,k) = " + std::to_string(total) + " column checks");
            }
            const FFMatrix &g = code.generator();
            auto fail = find_first_failing_subset(n, k, [&](const std::vector<size_t> &cols) {
                thread_local std::vector<uint32_t> scratch;
                return column_subset_rank(g, cols, scratch) == k;
            });
            cert.is_mds = !fail.has_value();
            cert.checks = fail ? *fail + 1 : total;
            if (fail) {
                cert.witness_columns = unrank_combination(n, k, *fail);
            }
            break;
        }
        case MdsMethod::Submatrix: {
            size_t r = n - k;
            uint64_t total = 0;
            for (size_t t = 1; t <= std::min(k, r); t++) {
                total = std::min<uint64_t>(std::numeric_limits<uint64_t>::max() / 2,
                                           total + checked_mul(binomial(k, t), binomial(r, t)));
            }
            if (total > kMaxDeterminants) {
                throw Error(ErrorKind::TooLarge, std::to_string(total) + " square submatrices");
            }
            StandardForm sf = standard_form(code);
            std::vector<size_t> a_cols;
            for (size_t c = k; c < n; c++) {
                a_cols.push_back(c);
            }
            FFMatrix a = sf.code.generator().select_columns(a_cols);
            cert.is_mds = true;
            std::vector<uint32_t> scratch;
            for (size_t t = 1; t <= std::min(k, r) && cert.is_mds; t++) {
                std::vector<size_t> rows(t);
                for (size_t i = 0; i < t; i++) {
                    rows[i] = i;
                }
                do {
                    FFMatrix sub = a.select_rows(rows);
                    std::vector<size_t> cols(t);
                    for (size_t i = 0; i < t; i++) {
                        cols[i] = i;
                    }
                    do {
                        cert.checks++;
                        if (column_subset_rank(sub, cols, scratch) != t) {
                            cert.is_mds = false;
                            cert.witness_rows = rows;
                            cert.witness_columns = cols;
                            break;
                        }
                    } while (next_combination(cols, r));
                } while (cert.is_mds && next_combination(rows, k));
            }
            break;
        }
    }
    if (cert.is_mds) {
        code.cache_distance(n - k + 1);
    }
    return cert;
}

LinearCode puncture(const LinearCode &code, size_t coord) {
    if (coord >= code.n() || code.n() < 2) {
        throw Error(ErrorKind::OutOfRange, "puncture coordinate " + std::to_string(coord));
    }
    FFMatrix g = code.generator().delete_column(coord);
    if (matrix_rank(g) != code.k()) {
        throw Error(ErrorKind::RankDrop, "puncturing coordinate " + std::to_string(coord) + " drops the rank");
    }
    return LinearCode(std::move(g));
}

LinearCode shorten(const LinearCode &code, size_t coord) {
    if (coord >= code.n()) {
        throw Error(ErrorKind::OutOfRange, "shorten coordinate " + std::to_string(coord));
    }
    const FieldSpec &f = *code.spec();
    const FFMatrix &g = code.generator();
    size_t pivot = code.k();
    for (size_t r = 0; r < code.k(); r++) {
        if (g.at(r, coord) != 0) {
            pivot = r;
            break;
        }
    }
    if (pivot == code.k()) {
        throw Error(ErrorKind::DegenerateCoordinate,
                    "every codeword vanishes at coordinate " + std::to_string(coord));
    }
    if (code.k() == 1) {
        throw Error(ErrorKind::OutOfRange, "shortening a one-dimensional code leaves the zero code");
    }
    FFMatrix reduced = g;
    uint32_t inv = f.inv(g.at(pivot, coord));
    for (size_t r = 0; r < code.k(); r++) {
        if (r == pivot || g.at(r, coord) == 0) {
            continue;
        }
        uint32_t factor = f.mul(g.at(r, coord), inv);
        for (size_t c = 0; c < code.n(); c++) {
            reduced.set(r, c, f.sub(reduced.at(r, c), f.mul(factor, g.at(pivot, c))));
        }
    }
    return LinearCode(reduced.delete_row(pivot).delete_column(coord));
}

bool mds_exists(uint64_t n, uint64_t k, uint64_t q) {
    if (k == 0 || k > n || q < 2) {
        return false;
    }
    if (k == n) {
        return true;
    }
    if (n >= 2 && (k == 1 || k == n - 1)) {
        return true;
    }
    if (q % 2 == 0 && (k == 3 || k == q - 1)) {
        return n <= q + 2;
    }
    return n <= q + 1;
}

bool same_code(const LinearCode &a, const LinearCode &b) {
    if (a.n() != b.n() || a.k() != b.k() || a.q() != b.q()) {
        return false;
    }
    return matrix_rref(a.generator()).rref == matrix_rref(b.generator()).rref;
}

std::string format_code(const LinearCode &code) {
    std::ostringstream out;
    out << "CODE " << code.n() << ' ' << code.k() << '\n';
    write_matrix(out, code.generator());
    return out.str();
}

LinearCode read_code(std::istream &in) {
    std::string tag;
    size_t n = 0;
    size_t k = 0;
    if (!(in >> tag >> n >> k) || tag != "CODE") {
        throw Error(ErrorKind::ParseError, "expected 'CODE n k' header");
    }
    FFMatrix g = read_matrix(in);
    if (g.rows() != k || g.cols() != n) {
        throw Error(ErrorKind::ParseError, "CODE header disagrees with the generator shape");
    }
    return LinearCode(std::move(g));
}

LinearCode parse_code(const std::string &text) {
    std::istringstream in(text);
    return read_code(in);
}

}  // namespace kuni
