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

#ifndef KUNI_LINEAR_CODE_H
#define KUNI_LINEAR_CODE_H

#include <atomic>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kuni/matrix.h"

namespace kuni {

/// A linear [n, k]_q code given by a full-row-rank k x n generator. The
/// generator is kept as supplied (no implicit standard form). The minimum
/// distance cache is write-once and shared between copies.
class LinearCode {
   public:
    /// Errors: RankDeficient, OutOfRange (k == 0).
    explicit LinearCode(FFMatrix generator);

    size_t n() const {
        return generator_.cols();
    }
    size_t k() const {
        return generator_.rows();
    }
    const FieldPtr &spec() const {
        return generator_.spec();
    }
    uint32_t q() const {
        return generator_.spec()->q();
    }
    const FFMatrix &generator() const {
        return generator_;
    }

    std::vector<uint32_t> encode(std::span<const uint32_t> message) const {
        return generator_.left_multiply(message);
    }

    std::optional<size_t> cached_distance() const;
    /// First writer wins; later calls are ignored.
    void cache_distance(size_t d) const;

   private:
    FFMatrix generator_;
    std::shared_ptr<std::atomic<int64_t>> distance_;
};

LinearCode code_from_generator(FFMatrix generator);

struct StandardForm {
    LinearCode code;
    /// permutation[j] is the original column placed at position j.
    std::vector<size_t> permutation;
};

/// [I_k | A] after row reduction, moving pivot columns to the front when the
/// first k columns are not an information set.
StandardForm standard_form(const LinearCode &code);

/// The [n, n-k] dual, built as H = [-A^T | I] in standard-form coordinates
/// with the permutation undone. Errors: OutOfRange when k == n.
LinearCode dual_code(const LinearCode &code);

/// Lexicographic enumeration of messages (first symbol most significant)
/// and their codewords. Errors: TooLarge when q^k > kMaxCodewords.
class CodewordEnumerator {
   public:
    explicit CodewordEnumerator(const LinearCode &code);

    /// Moves to the next message; the first call yields the zero message.
    bool next();
    const std::vector<uint32_t> &message() const {
        return message_;
    }
    const std::vector<uint32_t> &codeword() const {
        return codeword_;
    }
    uint64_t count() const {
        return count_;
    }

   private:
    const LinearCode *code_;
    uint64_t count_;
    bool started_ = false;
    std::vector<uint32_t> message_;
    std::vector<uint32_t> codeword_;
};

void for_each_codeword(const LinearCode &code,
                       const std::function<void(const std::vector<uint32_t> &message,
                                                const std::vector<uint32_t> &codeword)> &visit);

std::vector<std::vector<uint32_t>> enumerate_codewords(const LinearCode &code);

size_t hamming_weight(std::span<const uint32_t> word);
size_t hamming_distance(std::span<const uint32_t> a, std::span<const uint32_t> b);

enum class DistanceMethod { Auto, BruteForce, Rank };

/// Exact minimum distance. BruteForce scans all q^k - 1 nonzero codewords;
/// Rank finds the smallest linearly dependent set of parity-check columns
/// (d >= w + 1 iff every w columns of H are independent). Auto picks brute
/// force for q^k <= 10^6 and the rank method otherwise. Caches the result.
/// Errors: TooLarge when the chosen method exceeds its cap.
size_t min_distance(const LinearCode &code, DistanceMethod method = DistanceMethod::Auto);

enum class MdsMethod { Distance, Submatrix, Columns };

std::string mds_method_name(MdsMethod method);

struct MdsCertificate {
    bool is_mds = false;
    MdsMethod method = MdsMethod::Columns;
    /// Rank/determinant checks performed (Columns, Submatrix) or codewords
    /// examined (Distance, brute force).
    uint64_t checks = 0;
    /// Columns: a dependent k-subset of generator columns.
    /// Submatrix: the column indices of A of a singular square submatrix.
    /// Distance: the support of a minimum-weight codeword (brute force) or a
    /// dependent parity-check column set (rank method).
    std::vector<size_t> witness_columns;
    /// Submatrix: the row indices of the singular submatrix of A.
    std::vector<size_t> witness_rows;
    std::optional<size_t> distance;
};

/// Errors: TooLarge when the method's check count exceeds kMaxDeterminants.
MdsCertificate is_mds(const LinearCode &code, MdsMethod method);

/// Deletes one coordinate. Errors: RankDrop when the remaining columns lose
/// rank, OutOfRange for a bad coordinate.
LinearCode puncture(const LinearCode &code, size_t coord);

/// Codewords with symbol 0 at coord, with that coordinate deleted.
/// Errors: DegenerateCoordinate (coordinate identically zero), OutOfRange
/// (k == 1 or bad coordinate).
LinearCode shorten(const LinearCode &code, size_t coord);

/// Whether (n, k, q) lies in the known MDS existence intervals: k in {1, n-1}
/// for n >= 2; n <= q + 2 for even q with k in {3, q - 1}; n <= q + 1
/// otherwise. The trivial [n, n] code is also reported as existing.
bool mds_exists(uint64_t n, uint64_t k, uint64_t q);

/// Codeword sets equal (same n, same field, equal row spaces).
bool same_code(const LinearCode &a, const LinearCode &b);

/// Code file: "CODE n k" followed by the matrix text format for G.
std::string format_code(const LinearCode &code);
LinearCode parse_code(const std::string &text);
LinearCode read_code(std::istream &in);

}  // namespace kuni

#endif
