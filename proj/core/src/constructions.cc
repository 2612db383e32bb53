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

#include "kuni/constructions.h"

#include "kuni/error.h"
#include "kuni/limits.h"

namespace kuni {

namespace {

void require_terms(uint64_t total, const std::string &what) {
    if (total > max_terms()) {
        throw Error(ErrorKind::TooLarge,
                    what + " needs " + std::to_string(total) + " terms, cap is " + std::to_string(max_terms()));
    }
}

// Appends |prefix> (x) X^a (x) Z^b sum_r |r, r> to the builder.
void add_bell_terms(StateBuilder &builder, const FieldSpec &f, std::vector<uint16_t> &word, size_t offset,
                    uint32_t a, uint32_t b) {
    uint32_t q = f.q();
    for (uint32_t r = 0; r < q; r++) {
        word[offset] = static_cast<uint16_t>(f.add(r, a));
        word[offset + 1] = static_cast<uint16_t>(r);
        builder.add_root(word, static_cast<uint64_t>(b) * r);
    }
}

}  // namespace

SparseState state_from_code(const LinearCode &code) {
    uint64_t total = checked_pow(code.q(), code.k());
    if (total > 10'000'000) {
        throw Error(ErrorKind::TooLarge, "q^k = " + std::to_string(total) + " codewords");
    }
    require_terms(total, "code state");
    StateBuilder builder(code.spec(), code.n());
    std::vector<uint16_t> word(code.n());
    CodewordEnumerator it(code);
    while (it.next()) {
        std::copy(it.codeword().begin(), it.codeword().end(), word.begin());
        builder.add_root(word, 0);
    }
    return builder.build();
}

WeylBasis::WeylBasis(SparseState seed, size_t z_block)
    : seed_(std::move(seed)), z_block_(z_block), size_(checked_pow(seed_.q(), seed_.n())) {
    if (z_block_ > seed_.n()) {
        throw Error(ErrorKind::LayoutMismatch, "Z block longer than the seed");
    }
}

std::vector<uint32_t> WeylBasis::word(uint64_t index) const {
    if (index >= size_) {
        throw Error(ErrorKind::OutOfRange, "basis index out of range");
    }
    std::vector<uint32_t> v(seed_.n());
    for (size_t pos = v.size(); pos-- > 0;) {
        v[pos] = static_cast<uint32_t>(index % seed_.q());
        index /= seed_.q();
    }
    return v;
}

SparseState WeylBasis::at(uint64_t index) const {
    return apply_weyl(seed_, WeylWord::standard(seed_.q(), z_block_, word(index)));
}

size_t seed_z_block(const SparseState &seed) {
    uint64_t power = 1;
    for (size_t k = 0; k <= seed.n(); k++) {
        if (power == seed.support()) {
            return k;
        }
        power = checked_mul(power, seed.q());
    }
    throw Error(ErrorKind::SizeMismatch,
                "seed support " + std::to_string(seed.support()) + " is not a power of q = " +
                    std::to_string(seed.q()));
}

SparseState cl_plus_q(const LinearCode &code, const SparseState &seed, ClqVariant variant,
                      std::optional<size_t> z_block) {
    if (code.q() != seed.q()) {
        throw Error(ErrorKind::SizeMismatch, "code and seed over different local dimensions");
    }
    LinearCode classical = variant == ClqVariant::Direct ? code : dual_code(code);
    if (seed.n() != classical.k()) {
        throw Error(ErrorKind::SizeMismatch, "seed has " + std::to_string(seed.n()) +
                                                 " parties, classical part has dimension " +
                                                 std::to_string(classical.k()));
    }
    size_t block = z_block ? *z_block : seed_z_block(seed);
    require_terms(checked_mul(checked_pow(classical.q(), classical.k()), seed.support()), "Cl+Q state");

    size_t n_cl = classical.n();
    StateBuilder builder(code.spec(), n_cl + seed.n());
    std::vector<uint16_t> word(n_cl + seed.n());
    CodewordEnumerator it(classical);
    while (it.next()) {
        std::copy(it.codeword().begin(), it.codeword().end(), word.begin());
        SparseState part = apply_weyl(seed, WeylWord::standard(seed.q(), block, it.message()));
        for (size_t t = 0; t < part.support(); t++) {
            auto b = part.basis(t);
            std::copy(b.begin(), b.end(), word.begin() + n_cl);
            builder.add(word, part.coeffs(t));
        }
    }
    return builder.build();
}

SparseState bell_state(const FieldPtr &spec, uint32_t l, uint32_t m) {
    if (l >= spec->q() || m >= spec->q()) {
        throw Error(ErrorKind::OutOfRange, "Bell labels must lie below q");
    }
    StateBuilder builder(spec, 2);
    std::vector<uint16_t> word(2);
    add_bell_terms(builder, *spec, word, 0, l, m);
    return builder.build();
}

SparseState cl_plus_q_repetition(const FFMatrix &g, const QMatrix &q) {
    const FieldPtr &spec = g.spec();
    require_terms(checked_mul(checked_pow(spec->q(), g.rows()), spec->q()), "repetition Cl+Q state");
    DecompositionReport report = verify_decomposition(g, q);
    if (!report.certified()) {
        throw Error(ErrorKind::CertificationMissing, "(G, Q) does not pass verify_decomposition");
    }
    LinearCode code(g);
    size_t n = code.n();
    StateBuilder builder(spec, n + 2);
    std::vector<uint16_t> word(n + 2);
    CodewordEnumerator it(code);
    while (it.next()) {
        std::copy(it.codeword().begin(), it.codeword().end(), word.begin());
        auto [alpha, beta] = q.label(it.message());
        add_bell_terms(builder, *spec, word, n, alpha, beta);
    }
    return builder.build();
}

SparseState ghz_state(const FieldPtr &spec, size_t n) {
    if (n == 0) {
        throw Error(ErrorKind::OutOfRange, "GHZ state needs at least one party");
    }
    StateBuilder builder(spec, n);
    for (uint32_t j = 0; j < spec->q(); j++) {
        std::vector<uint16_t> word(n, static_cast<uint16_t>(j));
        builder.add_root(word, 0);
    }
    return builder.build();
}

SparseState ame_5_q(const FieldPtr &spec) {
    const FieldSpec &f = *spec;
    StateBuilder builder(spec, 5);
    std::vector<uint16_t> word(5);
    for (uint32_t l = 0; l < f.q(); l++) {
        for (uint32_t m = 0; m < f.q(); m++) {
            word[0] = static_cast<uint16_t>(l);
            word[1] = static_cast<uint16_t>(m);
            word[2] = static_cast<uint16_t>(f.add(l, m));
            add_bell_terms(builder, f, word, 3, l, m);
        }
    }
    return builder.build();
}

SparseState ame_7_4() {
    FieldPtr spec = make_field_of_order(4);
    const FieldSpec &f = *spec;
    const uint32_t x = 2;
    const uint32_t one_plus_x = 3;
    StateBuilder builder(spec, 7);
    std::vector<uint16_t> word(7);
    for (uint32_t i = 0; i < 4; i++) {
        for (uint32_t j = 0; j < 4; j++) {
            for (uint32_t l = 0; l < 4; l++) {
                word[0] = static_cast<uint16_t>(i);
                word[1] = static_cast<uint16_t>(j);
                word[2] = static_cast<uint16_t>(l);
                word[3] = static_cast<uint16_t>(f.add(f.add(i, j), l));
                word[4] = static_cast<uint16_t>(f.add(f.add(i, f.mul(x, j)), f.mul(one_plus_x, l)));
                add_bell_terms(builder, f, word, 5, f.add(i, j), f.add(i, f.mul(x, l)));
            }
        }
    }
    return builder.build();
}

namespace {

GQPair reference_pair(uint32_t q, const std::vector<std::vector<uint32_t>> &a_block, const std::vector<uint32_t> &q1) {
    FieldPtr spec = make_field_of_order(q);
    size_t k = a_block.size();
    size_t n = (k - 1) + a_block[0].size();
    FFMatrix g(spec, k, n);
    for (size_t r = 0; r < k; r++) {
        if (r + 1 < k) {
            g.set(r, r, 1);
        }
        for (size_t c = 0; c < a_block[r].size(); c++) {
            g.set(r, k - 1 + c, a_block[r][c]);
        }
    }
    std::vector<uint32_t> q2(k, 0);
    q2[k - 1] = 1;
    return {g, QMatrix::from_columns(spec, q1, q2)};
}

}  // namespace

GQPair ame_19_17_matrices() {
    return reference_pair(17,
                        {
                            {1, 1, 1, 1, 1, 1, 1, 1, 1},
                            {1, 8, 2, 15, 7, 4, 6, 5, 9},
                            {1, 2, 15, 7, 4, 6, 5, 9, 13},
                            {1, 15, 7, 4, 6, 5, 9, 13, 12},
                            {1, 7, 4, 6, 5, 9, 13, 12, 14},
                            {1, 4, 6, 5, 9, 13, 12, 14, 11},
                            {1, 6, 5, 9, 13, 12, 14, 11, 3},
                            {1, 5, 9, 13, 12, 14, 11, 3, 16},
                            {1, 9, 13, 12, 14, 11, 3, 16, 10},
                        },
                        {1, 13, 12, 14, 11, 3, 16, 10, 0});
}

GQPair ame_21_19_matrices() {
    return reference_pair(19,
                        {
                            {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                            {1, 18, 6, 8, 5, 11, 3, 16, 7, 10},
                            {1, 6, 8, 5, 11, 3, 16, 7, 10, 13},
                            {1, 8, 5, 11, 3, 16, 7, 10, 13, 4},
                            {1, 5, 11, 3, 16, 7, 10, 13, 4, 17},
                            {1, 11, 3, 16, 7, 10, 13, 4, 17, 9},
                            {1, 3, 16, 7, 10, 13, 4, 17, 9, 15},
                            {1, 16, 7, 10, 13, 4, 17, 9, 15, 12},
                            {1, 7, 10, 13, 4, 17, 9, 15, 12, 14},
                            {1, 10, 13, 4, 17, 9, 15, 12, 14, 2},
                        },
                        {1, 13, 4, 17, 9, 15, 12, 14, 2, 0});
}

std::vector<std::string> builtin_names() {
    return {"ame_5_q", "ame_7_4", "ame_19_17_matrices", "ame_21_19_matrices", "ghz", "bell"};
}

std::variant<SparseState, GQPair> builtin_state(const BuiltinRequest &request) {
    auto field = [&]() {
        if (request.q < 2 || !prime_power(request.q) || request.q > kMaxFieldOrder) {
            throw Error(ErrorKind::UnsupportedSize, "q = " + std::to_string(request.q) + " is not a prime power");
        }
        return make_field_of_order(request.q);
    };
    const std::string &name = request.name;
    if (name == "ame_5_q") {
        return ame_5_q(field());
    }
    if (name == "ame_7_4") {
        return ame_7_4();
    }
    if (name == "ame_19_17_matrices") {
        return ame_19_17_matrices();
    }
    if (name == "ame_21_19_matrices") {
        return ame_21_19_matrices();
    }
    if (name == "ghz") {
        return ghz_state(field(), request.n);
    }
    if (name == "bell") {
        return bell_state(field(), request.l, request.m);
    }
    throw Error(ErrorKind::UnknownName, "no builtin named '" + name + "'");
}

}  // namespace kuni
