// Copyright 2026 The arithtri Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "arithtri/words.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace arithtri {

namespace {

// Bit j of the ordinal is 1-based position n - j, whose weight is j + 1.
std::size_t weighted_popcount(std::uint64_t bits) {
    std::size_t q = 0;
    while (bits != 0) {
        q += static_cast<std::size_t>(std::countr_zero(bits)) + 1;
        bits &= bits - 1;
    }
    return q;
}

std::vector<std::uint64_t> tally(std::size_t n, IndexKind kind) {
    std::vector<std::uint64_t> counts(row_length(triangle_kind(kind), n), 0);
    const std::size_t low_bits = std::min<std::size_t>(n, 12);
    const std::uint64_t low_count = std::uint64_t{1} << low_bits;
    std::vector<std::size_t> low_index(low_count);
    for (std::uint64_t lo = 0; lo < low_count; ++lo) {
        low_index[lo] = kind == IndexKind::P ? static_cast<std::size_t>(std::popcount(lo))
                                             : weighted_popcount(lo);
    }
    const std::uint64_t high_count = std::uint64_t{1} << (n - low_bits);
    for (std::uint64_t hi = 0; hi < high_count; ++hi) {
        const auto pop = static_cast<std::size_t>(std::popcount(hi));
        const std::size_t base =
            kind == IndexKind::P ? pop : weighted_popcount(hi) + low_bits * pop;
        for (std::uint64_t lo = 0; lo < low_count; ++lo) ++counts[base + low_index[lo]];
    }
    return counts;
}

Row to_row(TriangleKind kind, std::size_t n, const std::vector<std::uint64_t>& counts) {
    Row r;
    r.kind = kind;
    r.n = n;
    r.coeffs.assign(counts.begin(), counts.end());
    return r;
}

}  // namespace

Letter Word::at(std::size_t k) const {
    if (k < 1 || k > length_) {
        throw std::out_of_range("Word::at: position " + std::to_string(k) + " outside [1, " +
                                std::to_string(length_) + "]");
    }
    return ((ordinal_ >> (length_ - k)) & 1U) != 0 ? Letter::B : Letter::A;
}

std::vector<Letter> Word::letters() const {
    std::vector<Letter> out;
    out.reserve(length_);
    for (std::size_t k = 1; k <= length_; ++k) out.push_back(at(k));
    return out;
}

Word Word::complement() const {
    const std::uint64_t mask = length_ == 0 ? 0 : (~std::uint64_t{0} >> (64 - length_));
    return Word(length_, ~ordinal_ & mask);
}

std::string Word::str() const {
    std::string s;
    s.reserve(length_);
    for (std::size_t k = 1; k <= length_; ++k) s.push_back(at(k) == Letter::A ? 'a' : 'b');
    return s;
}

Word word_from_ordinal(std::size_t n, std::uint64_t m) {
    if (n > kMaxWordLength) {
        throw std::out_of_range("word_from_ordinal: length " + std::to_string(n) +
                                " exceeds " + std::to_string(kMaxWordLength));
    }
    if (m >> n != 0) {
        throw std::out_of_range("word_from_ordinal: ordinal " + std::to_string(m) +
                                " outside [0, 2^" + std::to_string(n) + " - 1]");
    }
    return Word(n, m);
}

Word parse_word(std::string_view letters) {
    if (letters.size() > kMaxWordLength) {
        throw std::invalid_argument("parse_word: word longer than " + std::to_string(kMaxWordLength));
    }
    std::uint64_t m = 0;
    for (char c : letters) {
        m <<= 1;
        if (c == 'b' || c == 'B') {
            m |= 1;
        } else if (c != 'a' && c != 'A') {
            throw std::invalid_argument("parse_word: unexpected letter '" + std::string(1, c) + "'");
        }
    }
    return word_from_ordinal(letters.size(), m);
}

std::size_t p_index(const Word& w) { return static_cast<std::size_t>(std::popcount(w.ordinal())); }

std::size_t q_index(const Word& w) { return weighted_popcount(w.ordinal()); }

std::size_t q_index_reversed(const Word& w) {
    // position k <-> bit n - k
    std::size_t q = 0;
    for (std::uint64_t bits = w.ordinal(); bits != 0; bits &= bits - 1) {
        q += w.size() - static_cast<std::size_t>(std::countr_zero(bits));
    }
    return q;
}

EnumerationCapError::EnumerationCapError(std::size_t n, std::size_t cap)
    : std::runtime_error("enumeration of 2^" + std::to_string(n) + " words refused: n exceeds cap " +
                         std::to_string(cap)),
      n_(n),
      cap_(cap) {}

void check_enumeration_cap(std::size_t n, std::size_t cap) {
    if (n > cap || n > kMaxWordLength) throw EnumerationCapError(n, std::min(cap, kMaxWordLength));
}

Row histogram(std::size_t n, IndexKind kind, std::size_t cap) {
    check_enumeration_cap(n, cap);
    return to_row(triangle_kind(kind), n, tally(n, kind));
}

Row histogram_reversed(std::size_t n, std::size_t cap) {
    check_enumeration_cap(n, cap);
    std::vector<std::uint64_t> counts(row_length(TriangleKind::Nonlinear, n), 0);
    for_each_word(n, [&](const Word& w) { ++counts[q_index_reversed(w)]; });
    return to_row(TriangleKind::Nonlinear, n, counts);
}

GroupedExpression grouped_expression(std::size_t n, IndexKind class_kind, std::size_t cap) {
    check_enumeration_cap(n, cap);
    std::vector<std::vector<Word>> buckets(row_length(triangle_kind(class_kind), n));
    for_each_word(n, [&](const Word& w) { buckets[word_index(class_kind, w)].push_back(w); });

    GroupedExpression g;
    g.n = n;
    g.class_kind = class_kind;
    for (std::size_t i = 0; i < buckets.size(); ++i) {
        if (buckets[i].empty()) continue;
        WordClass c;
        c.index = i;
        c.multiplicity = buckets[i].size();
        c.members = std::move(buckets[i]);
        g.classes.push_back(std::move(c));
    }
    return g;
}

}  // namespace arithtri
