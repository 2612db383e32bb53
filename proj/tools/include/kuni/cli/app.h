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

#ifndef KUNI_CLI_APP_H
#define KUNI_CLI_APP_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kuni/linear_code.h"
#include "kuni/sparse_state.h"

namespace kuni::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitSampled = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitModule = 65;
inline constexpr int kExitNoInput = 66;
inline constexpr int kExitCantCreate = 73;

/// Runs the command line `args` (args[0] is the program name). Human output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// "[n,k]qQ" builds the standard MDS code; anything else is read as a file
/// holding either a CODE block or a bare generator matrix.
LinearCode load_code(const std::string &spec);

/// bell, ghz (k parties), ame4, ame5, or a STATE file.
SparseState load_seed(const std::string &spec, const FieldPtr &field, size_t parties);

struct Table1Row {
    size_t k = 0;
    size_t n = 0;
    size_t n_cl = 0;
    size_t k_cl = 0;
    std::string seed;
    uint32_t clq_q = 0;
    uint32_t table_mds_q = 0;
};

/// The twelve rows of the comparison table.
const std::vector<Table1Row> &table1_rows();

/// Least prime power q <= 2^16 with an MDS [n, k'] code for some k <= k' <= n/2.
uint32_t least_mds_q(size_t n, size_t k);

enum class RowStatus { Certified, SampledPass, Refuted, Skipped };

std::string row_status_name(RowStatus status);

struct Table1Result {
    Table1Row row;
    RowStatus status = RowStatus::Skipped;
    uint64_t support = 0;
    size_t verified_k = 0;
    std::string detail;
    uint32_t mds_q = 0;
};

struct Table1Options {
    size_t n_min = 5;
    size_t n_max = 16;
    /// Exhaustive sweeps when support times subset count stays below this.
    uint64_t exhaustive_budget = 10'000'000;
    uint64_t samples = 3;
    uint64_t seed = 1;
};

std::vector<Table1Result> run_table1(const Table1Options &options);

std::string sha256_file(const std::string &path);

}  // namespace kuni::cli

#endif
