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

#ifndef KUNI_SPARSE_STATE_H
#define KUNI_SPARSE_STATE_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kuni/cyclotomic.h"
#include "kuni/field.h"

namespace kuni {

/// Unnormalized n-party state sum_s a_s |s>, a_s in Z[w_q]. Terms are kept
/// sorted by basis string and no stored amplitude is zero.
class SparseState {
   public:
    SparseState(FieldPtr spec, size_t n);

    size_t n() const {
        return n_;
    }
    const FieldPtr &spec() const {
        return spec_;
    }
    uint32_t q() const {
        return spec_->q();
    }
    /// Order of the cyclotomic amplitudes (= q).
    uint32_t order() const {
        return spec_->q();
    }
    size_t support() const {
        return n_ == 0 ? 0 : symbols_.size() / n_;
    }

    std::span<const uint16_t> basis(size_t term) const {
        return {symbols_.data() + term * n_, n_};
    }
    std::span<const int64_t> coeffs(size_t term) const {
        return {amplitudes_.data() + term * order(), order()};
    }
    Cyclotomic amplitude(size_t term) const;

    std::optional<size_t> find(std::span<const uint16_t> basis) const;

    /// Same terms with exactly equal amplitudes.
    bool operator==(const SparseState &other) const;

   private:
    friend class StateBuilder;
    size_t n_;
    FieldPtr spec_;
    std::vector<uint16_t> symbols_;
    std::vector<int64_t> amplitudes_;
};

/// Accumulates terms in any order; build() sorts, merges equal basis strings
/// and drops amplitudes that vanish.
class StateBuilder {
   public:
    StateBuilder(FieldPtr spec, size_t n);

    void add(std::span<const uint16_t> basis, std::span<const int64_t> coeffs);
    void add(std::span<const uint16_t> basis, const Cyclotomic &amplitude);
    /// Adds coefficient * w^t.
    void add_root(std::span<const uint16_t> basis, uint64_t t, int64_t coefficient = 1);

    size_t pending() const {
        return pending_;
    }

    /// Errors: TooLarge when the merged support exceeds max_terms().
    SparseState build();

   private:
    void check_room();
    SparseState state_;
    size_t pending_ = 0;
};

/// Product of single-site Weyl operators X^{x_s} Z^{z_s}; on each site Z acts
/// first, so |j> -> w^{z_s * int(j)} |j + x_s>, with + the field addition.
class WeylWord {
   public:
    WeylWord(uint32_t q, size_t n);

    /// Standard layout: Z^{v_i} on sites 0..z_block-1, X^{v_i} on the rest.
    static WeylWord standard(uint32_t q, size_t z_block, std::span<const uint32_t> exponents);
    /// Z^{z} on z_sites and X^{x} on x_sites; a site may carry both.
    static WeylWord from_layout(uint32_t q, size_t n, std::span<const size_t> z_sites,
                                std::span<const uint32_t> z_exponents, std::span<const size_t> x_sites,
                                std::span<const uint32_t> x_exponents);

    size_t n() const {
        return x_.size();
    }
    uint32_t q() const {
        return q_;
    }
    uint32_t x(size_t site) const {
        return x_[site];
    }
    uint32_t z(size_t site) const {
        return z_[site];
    }
    void set_x(size_t site, uint32_t exponent);
    void set_z(size_t site, uint32_t exponent);
    bool is_identity() const;

   private:
    uint32_t q_;
    std::vector<uint32_t> x_;
    std::vector<uint32_t> z_;
};

/// Errors: LayoutMismatch.
SparseState apply_weyl(const SparseState &state, const WeylWord &word);

/// <s1|s2>. Errors: ShapeMismatch.
Cyclotomic inner_product(const SparseState &s1, const SparseState &s2);

/// Errors: SpecMismatch, TooLarge.
SparseState tensor(const SparseState &s1, const SparseState &s2);

/// F = sum_{i,j} w^{ij} |i><j| on each listed site. Errors: OutOfRange, TooLarge.
SparseState local_fourier(const SparseState &state, std::span<const size_t> sites);

/// Single-term product state |s>.
SparseState basis_state(const FieldPtr &spec, std::span<const uint16_t> symbols);

std::string format_state(const SparseState &state);
void write_state(std::ostream &out, const SparseState &state);
/// Errors: ParseError, UnsupportedSize.
SparseState read_state(std::istream &in);
SparseState parse_state(const std::string &text);

}  // namespace kuni

#endif
