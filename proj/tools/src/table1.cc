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

#include <string>
#include <vector>

#include "kuni/cli/app.h"
#include "kuni/constructions.h"
#include "kuni/error.h"
#include "kuni/limits.h"
#include "kuni/singleton.h"
#include "kuni/verify.h"

namespace kuni::cli {

const std::vector<Table1Row> &table1_rows() {
    static const std::vector<Table1Row> rows = {
        {2, 5, 3, 2, "bell", 2, 4},   {2, 6, 4, 2, "bell", 3, 4},   {2, 7, 5, 2, "bell", 4, 7},
        {2, 8, 5, 3, "ghz", 4, 7},    {2, 9, 6, 3, "ghz", 4, 8},    {2, 10, 7, 3, "ghz", 7, 9},
        {3, 11, 7, 4, "ame4", 7, 11}, {3, 12, 8, 4, "ame4", 7, 11}, {3, 13, 9, 4, "ame4", 8, 13},
        {3, 14, 9, 5, "ame5", 8, 13}, {3, 15, 10, 5, "ame5", 9, 16}, {3, 16, 11, 5, "ame5", 11, 16},
    };
    return rows;
}

uint32_t least_mds_q(size_t n, size_t k) {
    for (uint64_t q = 2; q <= kMaxFieldOrder; q++) {
        if (!prime_power(q)) {
            continue;
        }
        for (size_t kk = k; kk <= n / 2; kk++) {
            if (mds_exists(n, kk, q)) {
                return static_cast<uint32_t>(q);
            }
        }
    }
    return 0;
}

std::string row_status_name(RowStatus status) {
    switch (status) {
        case RowStatus::Certified:
            return "certified";
        case RowStatus::SampledPass:
            return "sampled-pass";
        case RowStatus::Refuted:
            return "refuted";
        case RowStatus::Skipped:
            return "skipped";
    }
    return "skipped";
}

namespace {

Table1Result run_row(const Table1Row &row, const Table1Options &options) {
    Table1Result result;
    result.row = row;
    result.mds_q = least_mds_q(row.n, row.k);
    try {
        uint32_t q = row.clq_q;
        if (checked_pow(q, row.k) > kMaxReducedDim) {
            throw Error(ErrorKind::TooLarge, "reduced states of size " + std::to_string(row.k) + " too large");
        }
        FieldPtr field = make_field_of_order(q);
        SparseState seed = load_seed(row.seed, field, row.k_cl);
        uint64_t support = checked_mul(checked_pow(q, row.k_cl), seed.support());
        result.support = support;
        if (support > max_terms()) {
            throw Error(ErrorKind::TooLarge,
                        "support " + std::to_string(support) + " exceeds the term cap " + std::to_string(max_terms()));
        }
        SparseState state = cl_plus_q(mds_code(row.n_cl, row.k_cl, field), seed);
        uint64_t subsets = 0;
        for (size_t s = 1; s <= row.k; s++) {
            subsets += binomial(row.n, s);
        }
        UniformityOptions opts;
        opts.k_max = row.k;
        if (checked_mul(support, subsets) > options.exhaustive_budget) {
            opts.sampled = true;
            opts.sample_count = options.samples;
            opts.seed = options.seed;
        }
        UniformityReport report = uniformity(state, opts);
        result.verified_k = report.max_verified_k;
        if (report.max_verified_k < row.k) {
            result.status = RowStatus::Refuted;
            result.detail = "fails at size " + std::to_string(report.max_verified_k + 1);
        } else if (report.certifying()) {
            result.status = RowStatus::Certified;
            result.detail = "exhaustive";
        } else {
            result.status = RowStatus::SampledPass;
            result.detail = std::to_string(options.samples) + " samples per size, seed " + std::to_string(options.seed);
        }
    } catch (const Error &e) {
        result.status = RowStatus::Skipped;
        result.detail = e.what();
    }
    return result;
}

}  // namespace

std::vector<Table1Result> run_table1(const Table1Options &options) {
    std::vector<Table1Result> out;
    for (const Table1Row &row : table1_rows()) {
        if (row.n < options.n_min || row.n > options.n_max) {
            continue;
        }
        out.push_back(run_row(row, options));
    }
    return out;
}

}  // namespace kuni::cli
