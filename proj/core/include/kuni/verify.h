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

#ifndef KUNI_VERIFY_H
#define KUNI_VERIFY_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kuni/cyclotomic.h"
#include "kuni/decomposition.h"
#include "kuni/sparse_state.h"

namespace kuni {

/// Unnormalized rho_S = Tr_{S^c} |phi><phi|. Row and column indices encode the
/// symbols on S in lexicographic order (first site most significant).
class ReducedDensity {
   public:
    struct Entry {
        uint64_t row;
        uint64_t col;
        std::vector<int64_t> coeffs;
    };

    const std::vector<size_t> &subset() const {
        return subset_;
    }
    uint32_t q() const {
        return q_;
    }
    uint64_t dim() const {
        return dim_;
    }
    /// Nonzero entries sorted by (row, col).
    const std::vector<Entry> &entries() const {
        return entries_;
    }
    Cyclotomic entry(uint64_t row, uint64_t col) const;
    Cyclotomic trace() const;
    bool is_hermitian() const;
    std::vector<uint16_t> symbols(uint64_t index) const;

   private:
    friend ReducedDensity reduced_density(const SparseState &, std::span<const size_t>);
    std::vector<size_t> subset_;
    uint32_t q_ = 0;
    uint64_t dim_ = 0;
    std::vector<Entry> entries_;
};

/// Errors: OutOfRange (bad subset), TooLarge (q^|S| above 4096).
ReducedDensity reduced_density(const SparseState &state, std::span<const size_t> subset);

enum class MixednessViolation { None, OffDiagonal, Diagonal };

struct MixednessResult {
    bool maximally_mixed = true;
    MixednessViolation violation = MixednessViolation::None;
    /// OffDiagonal: the nonzero entry (row, col). Diagonal: rho(row,row) != rho(col,col).
    uint64_t row = 0;
    uint64_t col = 0;
};

/// Off-diagonals zero and all diagonal entries equal; the witness is the first
/// violation in row-major order.
MixednessResult is_maximally_mixed(const ReducedDensity &rho);

/// Characteristic polynomial det(x I - rho), lowest degree first, computed
/// without division. Errors: TooLarge for dimension above 64.
std::vector<Cyclotomic> characteristic_polynomial(const ReducedDensity &rho);

/// rho_S and rho_{S^c} share their nonzero spectrum (compared exactly through
/// characteristic polynomials).
bool complementary_spectra_match(const SparseState &state, std::span<const size_t> subset);

struct UniformityOptions {
    std::optional<size_t> k_max;
    /// Sampled sweeps check `sample_count` seeded random subsets per size.
    bool sampled = false;
    uint64_t sample_count = 0;
    uint64_t seed = 0;
    /// Sites [0, classical_sites) form the classical part for case tallies.
    std::optional<size_t> classical_sites;
};

struct CaseTally {
    uint64_t checked = 0;
    uint64_t passed = 0;
};

struct SizeTally {
    size_t size = 0;
    uint64_t total_subsets = 0;
    uint64_t checked = 0;
    uint64_t passed = 0;
    /// Filled when classical_sites is set.
    CaseTally classical;
    CaseTally quantum;
    CaseTally split;
};

enum class SweepMode { Exhaustive, Sampled };

struct UniformityReport {
    size_t n = 0;
    uint32_t q = 0;
    SweepMode mode = SweepMode::Exhaustive;
    uint64_t seed = 0;
    uint64_t sample_count = 0;
    std::optional<size_t> classical_sites;
    /// Largest size with every checked subset maximally mixed (sizes below it
    /// also passed).
    size_t max_verified_k = 0;
    std::vector<SizeTally> sizes;
    std::optional<std::vector<size_t>> first_failure;
    MixednessResult failure_witness;

    bool certifying() const {
        return mode == SweepMode::Exhaustive;
    }
    /// max_verified_k reaches floor(n/2).
    bool is_ame() const {
        return max_verified_k == n / 2;
    }
};

/// Sweeps sizes 1..min(k_max, floor(n/2)) ascending, lexicographic within a
/// size, and stops after the first size containing a failure.
/// Errors: TooLarge, OutOfRange (sampled without count).
UniformityReport uniformity(const SparseState &state, const UniformityOptions &options = {});

struct SupportCensus {
    size_t support = 0;
    bool is_minimal = false;
};

/// Errors: SupportBelowRankBound.
SupportCensus support_census(const SparseState &state, size_t k);

/// First maximally mixed subset of size k+1. With classical_sites = m, subsets
/// with k sites in [0, m) and one in [m, n) are tried first.
/// Errors: TooLarge (q^{k+1} above 4096), OutOfRange.
std::optional<std::vector<size_t>> slocc_witness(const SparseState &state, size_t k,
                                                 std::optional<size_t> classical_sites = std::nullopt);

struct GramResult {
    bool orthogonal_equal_norm = false;
    std::vector<std::vector<Cyclotomic>> gram;
};

/// Errors: ShapeMismatch.
GramResult gram_check(std::span<const SparseState> states);

struct StabilizerResult {
    bool stabilized = false;
    std::optional<size_t> failing_vertex;
};

/// S_i = X_i prod_j Z_j^{adj(i,j)} must fix the state for every vertex i.
/// Errors: NonPrimeQ, ShapeMismatch.
StabilizerResult stabilizer_check(const SparseState &state, const FFMatrix &adjacency);

struct CertificateReport {
    DecompositionReport decomposition;
    size_t parties = 0;
    uint32_t q = 0;
    bool ame = false;

    /// "AME(n+2,q)" when certified, empty otherwise.
    std::string claim() const;
};

CertificateReport certify_ame_via_codes(const FFMatrix &g, const QMatrix &q);

}  // namespace kuni

#endif
