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

#include "kuni/sparse_state.h"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "kuni/error.h"
#include "kuni/limits.h"

namespace kuni {

SparseState::SparseState(FieldPtr spec, size_t n) : n_(n), spec_(std::move(spec)) {
    if (n_ == 0) {
        throw Error(ErrorKind::OutOfRange, "a state needs at least one party");
    }
}

Cyclotomic SparseState::amplitude(size_t term) const {
    auto c = coeffs(term);
    return Cyclotomic(order(), std::vector<int64_t>(c.begin(), c.end()));
}

std::optional<size_t> SparseState::find(std::span<const uint16_t> key) const {
    size_t lo = 0;
    size_t hi = support();
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        auto b = basis(mid);
        if (std::lexicographical_compare(b.begin(), b.end(), key.begin(), key.end())) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo < support() && std::equal(key.begin(), key.end(), basis(lo).begin())) {
        return lo;
    }
    return std::nullopt;
}

bool SparseState::operator==(const SparseState &other) const {
    if (n_ != other.n_ || q() != other.q() || support() != other.support() || symbols_ != other.symbols_) {
        return false;
    }
    std::vector<int64_t> diff(order());
    for (size_t t = 0; t < support(); t++) {
        auto a = coeffs(t);
        auto b = other.coeffs(t);
        for (size_t i = 0; i < diff.size(); i++) {
            diff[i] = a[i] - b[i];
        }
        if (!cyclotomic_is_zero(diff, order())) {
            return false;
        }
    }
    return true;
}

StateBuilder::StateBuilder(FieldPtr spec, size_t n) : state_(std::move(spec), n) {}

void StateBuilder::check_room() {
    if (pending_ >= kHardMaxTerms) {
        throw Error(ErrorKind::TooLarge, "more than " + std::to_string(kHardMaxTerms) + " pending terms");
    }
}

void StateBuilder::add(std::span<const uint16_t> basis, std::span<const int64_t> coeffs) {
    if (basis.size() != state_.n_ || coeffs.size() != state_.order()) {
        throw Error(ErrorKind::ShapeMismatch, "term does not match the state shape");
    }
    check_room();
    state_.symbols_.insert(state_.symbols_.end(), basis.begin(), basis.end());
    state_.amplitudes_.insert(state_.amplitudes_.end(), coeffs.begin(), coeffs.end());
    pending_++;
}

void StateBuilder::add(std::span<const uint16_t> basis, const Cyclotomic &amplitude) {
    add(basis, std::span<const int64_t>(amplitude.coeffs()));
}

void StateBuilder::add_root(std::span<const uint16_t> basis, uint64_t t, int64_t coefficient) {
    if (basis.size() != state_.n_) {
        throw Error(ErrorKind::ShapeMismatch, "term does not match the state shape");
    }
    check_room();
    uint32_t order = state_.order();
    state_.symbols_.insert(state_.symbols_.end(), basis.begin(), basis.end());
    size_t base = state_.amplitudes_.size();
    state_.amplitudes_.resize(base + order, 0);
    state_.amplitudes_[base + t % order] = coefficient;
    pending_++;
}

SparseState StateBuilder::build() {
    size_t n = state_.n_;
    uint32_t order = state_.order();
    const auto &sym = state_.symbols_;
    const auto &amp = state_.amplitudes_;
    std::vector<size_t> idx(pending_);
    std::iota(idx.begin(), idx.end(), 0);
    bool sorted = true;
    for (size_t i = 1; i < pending_ && sorted; i++) {
        sorted = std::lexicographical_compare(sym.begin() + (i - 1) * n, sym.begin() + i * n, sym.begin() + i * n,
                                              sym.begin() + (i + 1) * n);
    }
    if (!sorted) {
        std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            return std::lexicographical_compare(sym.begin() + a * n, sym.begin() + (a + 1) * n, sym.begin() + b * n,
                                                sym.begin() + (b + 1) * n);
        });
    }

    SparseState out(state_.spec_, n);
    std::vector<int64_t> acc(order);
    size_t i = 0;
    while (i < idx.size()) {
        size_t j = i;
        std::fill(acc.begin(), acc.end(), 0);
        while (j < idx.size() &&
               std::equal(sym.begin() + idx[i] * n, sym.begin() + (idx[i] + 1) * n, sym.begin() + idx[j] * n)) {
            for (size_t t = 0; t < order; t++) {
                acc[t] += amp[idx[j] * order + t];
            }
            j++;
        }
        if (!cyclotomic_is_zero(acc, order)) {
            out.symbols_.insert(out.symbols_.end(), sym.begin() + idx[i] * n, sym.begin() + (idx[i] + 1) * n);
            out.amplitudes_.insert(out.amplitudes_.end(), acc.begin(), acc.end());
        }
        i = j;
    }
    state_.symbols_.clear();
    state_.amplitudes_.clear();
    pending_ = 0;
    if (out.support() > max_terms()) {
        throw Error(ErrorKind::TooLarge,
                    "support " + std::to_string(out.support()) + " exceeds cap " + std::to_string(max_terms()));
    }
    return out;
}

WeylWord::WeylWord(uint32_t q, size_t n) : q_(q), x_(n, 0), z_(n, 0) {}

WeylWord WeylWord::standard(uint32_t q, size_t z_block, std::span<const uint32_t> exponents) {
    if (z_block > exponents.size()) {
        throw Error(ErrorKind::LayoutMismatch, "Z block longer than the word");
    }
    WeylWord w(q, exponents.size());
    for (size_t i = 0; i < exponents.size(); i++) {
        if (i < z_block) {
            w.set_z(i, exponents[i]);
        } else {
            w.set_x(i, exponents[i]);
        }
    }
    return w;
}

WeylWord WeylWord::from_layout(uint32_t q, size_t n, std::span<const size_t> z_sites,
                               std::span<const uint32_t> z_exponents, std::span<const size_t> x_sites,
                               std::span<const uint32_t> x_exponents) {
    if (z_sites.size() != z_exponents.size() || x_sites.size() != x_exponents.size()) {
        throw Error(ErrorKind::LayoutMismatch, "site and exponent lists differ in length");
    }
    WeylWord w(q, n);
    for (size_t i = 0; i < z_sites.size(); i++) {
        if (z_sites[i] >= n) {
            throw Error(ErrorKind::LayoutMismatch, "Z site out of range");
        }
        w.set_z(z_sites[i], z_exponents[i]);
    }
    for (size_t i = 0; i < x_sites.size(); i++) {
        if (x_sites[i] >= n) {
            throw Error(ErrorKind::LayoutMismatch, "X site out of range");
        }
        w.set_x(x_sites[i], x_exponents[i]);
    }
    return w;
}

void WeylWord::set_x(size_t site, uint32_t exponent) {
    if (exponent >= q_) {
        throw Error(ErrorKind::OutOfRange, "X exponent must be a field element repr below q");
    }
    x_.at(site) = exponent;
}

void WeylWord::set_z(size_t site, uint32_t exponent) {
    z_.at(site) = exponent % q_;
}

bool WeylWord::is_identity() const {
    return std::all_of(x_.begin(), x_.end(), [](uint32_t v) { return v == 0; }) &&
           std::all_of(z_.begin(), z_.end(), [](uint32_t v) { return v == 0; });
}

SparseState apply_weyl(const SparseState &state, const WeylWord &word) {
    if (word.n() != state.n() || word.q() != state.q()) {
        throw Error(ErrorKind::LayoutMismatch, "word covers " + std::to_string(word.n()) + " sites of order " +
                                                   std::to_string(word.q()) + ", state has " +
                                                   std::to_string(state.n()) + " of order " +
                                                   std::to_string(state.q()));
    }
    const FieldSpec &f = *state.spec();
    size_t n = state.n();
    uint32_t order = state.order();
    StateBuilder builder(state.spec(), n);
    std::vector<uint16_t> shifted(n);
    std::vector<int64_t> coeffs(order);
    for (size_t t = 0; t < state.support(); t++) {
        auto b = state.basis(t);
        uint64_t phase = 0;
        for (size_t s = 0; s < n; s++) {
            phase += static_cast<uint64_t>(word.z(s)) * b[s];
            shifted[s] = static_cast<uint16_t>(f.add(b[s], word.x(s)));
        }
        phase %= order;
        auto c = state.coeffs(t);
        for (size_t i = 0; i < order; i++) {
            coeffs[(i + phase) % order] = c[i];
        }
        builder.add(shifted, coeffs);
    }
    return builder.build();
}

Cyclotomic inner_product(const SparseState &s1, const SparseState &s2) {
    if (s1.n() != s2.n() || s1.q() != s2.q()) {
        throw Error(ErrorKind::ShapeMismatch, "states differ in party count or local dimension");
    }
    Cyclotomic out(s1.order());
    std::vector<int64_t> acc(s1.order(), 0);
    size_t i = 0;
    size_t j = 0;
    while (i < s1.support() && j < s2.support()) {
        auto a = s1.basis(i);
        auto b = s2.basis(j);
        if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) {
            i++;
        } else if (std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end())) {
            j++;
        } else {
            accumulate_product_conj(acc, s2.coeffs(j), s1.coeffs(i));
            i++;
            j++;
        }
    }
    return Cyclotomic(s1.order(), std::move(acc));
}

SparseState tensor(const SparseState &s1, const SparseState &s2) {
    if (s1.q() != s2.q() || s1.spec()->modulus() != s2.spec()->modulus()) {
        throw Error(ErrorKind::SpecMismatch, s1.spec()->name() + " vs " + s2.spec()->name());
    }
    uint64_t total = checked_mul(s1.support(), s2.support());
    if (total > max_terms()) {
        throw Error(ErrorKind::TooLarge, "tensor product support " + std::to_string(total));
    }
    size_t n = s1.n() + s2.n();
    StateBuilder builder(s1.spec(), n);
    std::vector<uint16_t> joined(n);
    for (size_t i = 0; i < s1.support(); i++) {
        auto a = s1.basis(i);
        std::copy(a.begin(), a.end(), joined.begin());
        Cyclotomic ai = s1.amplitude(i);
        for (size_t j = 0; j < s2.support(); j++) {
            auto b = s2.basis(j);
            std::copy(b.begin(), b.end(), joined.begin() + s1.n());
            builder.add(joined, ai * s2.amplitude(j));
        }
    }
    return builder.build();
}

SparseState local_fourier(const SparseState &state, std::span<const size_t> sites) {
    SparseState current = state;
    uint32_t q = state.q();
    uint32_t order = state.order();
    std::vector<int64_t> coeffs(order);
    for (size_t site : sites) {
        if (site >= state.n()) {
            throw Error(ErrorKind::OutOfRange, "site " + std::to_string(site) + " out of range");
        }
        uint64_t total = checked_mul(current.support(), q);
        if (total > kHardMaxTerms) {
            throw Error(ErrorKind::TooLarge, "Fourier expansion to " + std::to_string(total) + " terms");
        }
        StateBuilder builder(state.spec(), state.n());
        std::vector<uint16_t> b(state.n());
        for (size_t t = 0; t < current.support(); t++) {
            auto src = current.basis(t);
            std::copy(src.begin(), src.end(), b.begin());
            uint32_t j = src[site];
            auto c = current.coeffs(t);
            for (uint32_t i = 0; i < q; i++) {
                uint64_t phase = (static_cast<uint64_t>(i) * j) % order;
                for (size_t r = 0; r < order; r++) {
                    coeffs[(r + phase) % order] = c[r];
                }
                b[site] = static_cast<uint16_t>(i);
                builder.add(b, coeffs);
            }
        }
        current = builder.build();
    }
    return current;
}

SparseState basis_state(const FieldPtr &spec, std::span<const uint16_t> symbols) {
    for (uint16_t s : symbols) {
        if (s >= spec->q()) {
            throw Error(ErrorKind::OutOfRange, "symbol " + std::to_string(s) + " outside GF(q)");
        }
    }
    StateBuilder builder(spec, symbols.size());
    builder.add_root(symbols, 0);
    return builder.build();
}

void write_state(std::ostream &out, const SparseState &state) {
    out << "STATE " << state.n() << " " << state.q() << "\n";
    for (size_t t = 0; t < state.support(); t++) {
        for (uint16_t s : state.basis(t)) {
            out << s << " ";
        }
        out << ":";
        for (int64_t c : state.coeffs(t)) {
            out << " " << c;
        }
        out << "\n";
    }
}

std::string format_state(const SparseState &state) {
    std::ostringstream out;
    write_state(out, state);
    return out.str();
}

SparseState read_state(std::istream &in) {
    std::string line;
    size_t line_no = 0;
    auto fail = [&](const std::string &why) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        line_no++;
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            break;
        }
    }
    std::istringstream header(line);
    std::string tag;
    long long n = 0;
    long long q = 0;
    if (!(header >> tag >> n >> q) || tag != "STATE" || n <= 0 || q < 2) {
        fail("expected header 'STATE n q'");
    }
    if (!prime_power(static_cast<uint64_t>(q)) || static_cast<uint64_t>(q) > kMaxFieldOrder) {
        throw Error(ErrorKind::UnsupportedSize, "q = " + std::to_string(q) + " is not a supported prime power");
    }
    FieldPtr spec = make_field_of_order(static_cast<uint64_t>(q));
    StateBuilder builder(spec, static_cast<size_t>(n));
    std::vector<uint16_t> basis(static_cast<size_t>(n));
    std::vector<int64_t> coeffs(static_cast<size_t>(q));
    while (std::getline(in, line)) {
        line_no++;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        size_t colon = line.find(':');
        if (colon == std::string::npos) {
            fail("missing ':'");
        }
        std::istringstream lhs(line.substr(0, colon));
        std::istringstream rhs(line.substr(colon + 1));
        for (auto &s : basis) {
            long long v = -1;
            if (!(lhs >> v) || v < 0 || v >= q) {
                fail("bad symbol");
            }
            s = static_cast<uint16_t>(v);
        }
        std::string extra;
        if (lhs >> extra) {
            fail("too many symbols");
        }
        for (auto &c : coeffs) {
            if (!(rhs >> c)) {
                fail("expected " + std::to_string(q) + " coefficients");
            }
        }
        if (rhs >> extra) {
            fail("too many coefficients");
        }
        builder.add(basis, coeffs);
    }
    return builder.build();
}

SparseState parse_state(const std::string &text) {
    std::istringstream in(text);
    return read_state(in);
}

}  // namespace kuni
