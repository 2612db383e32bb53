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

#ifndef KUNI_DECOMPOSITION_H
#define KUNI_DECOMPOSITION_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kuni/linear_code.h"

namespace kuni {

/// k x 2 matrix whose columns Q1, Q2 label each message v by (alpha, beta) = vQ.
class QMatrix {
   public:
    /// Errors: ShapeMismatch unless the matrix has exactly two columns.
    explicit QMatrix(FFMatrix matrix);
    static QMatrix from_columns(FieldPtr spec, std::span<const uint32_t> q1, std::span<const uint32_t> q2);

    const FFMatrix &matrix() const {
        return matrix_;
    }
    const FieldPtr &spec() const {
        return matrix_.spec();
    }
    size_t k() const {
        return matrix_.rows();
    }
    std::vector<uint32_t> column(size_t c) const;
    size_t rank() const;

    std::pair<uint32_t, uint32_t> label(std::span<const uint32_t> message) const;

   private:
    FFMatrix matrix_;
};

struct GQPair {
    FFMatrix g;
    QMatrix q;
};

/// For odd q >= 5: G is the ceil(q/2) x q generator obtained by puncturing the
/// [q+1, ceil(q/2)] Singleton-array code at its last identity column, Q1 holds
/// the next Singleton column (zero in the last row) and Q2 is the removed
/// identity column. For q = 4 the hand-built [5,3] pair is returned. The pair
/// is certified before return.
/// Errors: OutOfRange, CertificationFailed.
GQPair construct_G_Q(const FieldPtr &spec);

/// Pair for a parent [n, ceil(n/2)] code with n <= q. n == q uses construct_G_Q;
/// shorter lengths take a Singleton-array code and search for Q.
/// Errors: OutOfRange, CertificationFailed (no Q found within budget).
GQPair construct_G_Q_for_length(const FieldPtr &spec, size_t n, uint64_t budget = 1'000'000);

/// {vG : vQ = 0}, generated by (left kernel of Q) * G.
/// Errors: ShapeMismatch, BadKernelDimension.
LinearCode kernel_subcode(const FFMatrix &g, const QMatrix &q);

enum class PartitionMode { Implicit, Explicit };

class CosetDecomposition {
   public:
    const LinearCode &parent() const {
        return parent_;
    }
    const LinearCode &subcode() const {
        return subcode_;
    }
    const QMatrix &q_matrix() const {
        return q_;
    }
    bool is_explicit() const {
        return !cosets_.empty();
    }

    std::pair<uint32_t, uint32_t> label(std::span<const uint32_t> message) const {
        return q_.label(message);
    }
    /// Message mapped to (alpha, beta); its codeword represents that coset.
    std::vector<uint32_t> representative_message(uint32_t alpha, uint32_t beta) const;
    std::vector<uint32_t> representative(uint32_t alpha, uint32_t beta) const;

    /// Explicit mode only: codewords of coset (alpha, beta) in message order.
    const std::vector<std::vector<uint32_t>> &coset(uint32_t alpha, uint32_t beta) const;

   private:
    friend CosetDecomposition coset_partition(const FFMatrix &, const QMatrix &, PartitionMode);
    CosetDecomposition(LinearCode parent, LinearCode subcode, QMatrix q);

    LinearCode parent_;
    LinearCode subcode_;
    QMatrix q_;
    std::vector<uint32_t> unit_alpha_;
    std::vector<uint32_t> unit_beta_;
    std::vector<std::vector<std::vector<uint32_t>>> cosets_;
};

/// Errors: BadKernelDimension, RankDeficient, TooLarge (explicit mode).
CosetDecomposition coset_partition(const FFMatrix &g, const QMatrix &q, PartitionMode mode = PartitionMode::Explicit);

struct DecompositionCheck {
    std::string name;
    bool passed = false;
    uint64_t checks = 0;
    std::vector<size_t> witness;
    std::string detail;
};

struct DecompositionReport {
    size_t n = 0;
    size_t k = 0;
    uint32_t q = 0;
    DecompositionCheck parent_mds;
    DecompositionCheck kernel_mds;
    DecompositionCheck q_rank;
    DecompositionCheck labels_onto;

    bool certified() const {
        return parent_mds.passed && kernel_mds.passed && q_rank.passed && labels_onto.passed;
    }
    std::vector<const DecompositionCheck *> checks() const {
        return {&parent_mds, &kernel_mds, &q_rank, &labels_onto};
    }
};

/// Never throws on mathematical failure; each hypothesis becomes a report entry.
DecompositionReport verify_decomposition(const FFMatrix &g, const QMatrix &q);

enum class SearchMode { Exhaustive, Randomized };

struct SearchResult {
    std::optional<QMatrix> q;
    /// Rank-2 candidates evaluated.
    uint64_t attempts = 0;
};

/// Errors: BadKernelDimension (k < 3).
SearchResult search_Q(const FFMatrix &g, uint64_t budget, SearchMode mode = SearchMode::Exhaustive,
                      uint64_t seed = 0);

}  // namespace kuni

#endif
