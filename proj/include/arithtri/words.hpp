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


#ifndef ARITHTRI_WORDS_HPP
#define ARITHTRI_WORDS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arithtri/triangles.hpp"

namespace arithtri {

enum class Letter : std::uint8_t { A = 0, B = 1 };

inline constexpr std::size_t kMaxWordLength = 63;

// A word of length n over {A, B}. The first letter is the most significant
// binary digit of the ordinal (A = 0, B = 1), so words sort by ordinal in
// the column order of the table algorithm.
class Word {
public:
    Word() = default;

    std::size_t size() const { return length_; }
    std::uint64_t ordinal() const { return ordinal_; }

    /// Letter at 1-based position k from the start of the word.
    Letter at(std::size_t k) const;

    /// Digit weight of position k in the quasi-binary reading: n - k + 1.
    std::size_t weight(std::size_t k) const { return length_ - k + 1; }

    std::vector<Letter> letters() const;
    Word complement() const;

    /// Lowercase spelling, e.g. "abba".
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) {
        if (auto c = a.length_ <=> b.length_; c != 0) return c;
        return a.ordinal_ <=> b.ordinal_;
    }

private:
    friend Word word_from_ordinal(std::size_t, std::uint64_t);
    Word(std::size_t n, std::uint64_t m) : length_(n), ordinal_(m) {}

    std::size_t length_ = 0;
    std::uint64_t ordinal_ = 0;
};

/// Throws std::out_of_range unless n <= 63 and m < 2^n.
Word word_from_ordinal(std::size_t n, std::uint64_t m);

/// Parses "abba" / "ABBA". Throws std::invalid_argument on other characters.
Word parse_word(std::string_view letters);

/// Number of B letters.
std::size_t p_index(const Word& w);

/// Sum of n - k + 1 over the 1-based positions k holding B.
std::size_t q_index(const Word& w);

/// Sum of k over positions holding B (the position-reversed reading).
std::size_t q_index_reversed(const Word& w);

enum class IndexKind { P, Q };

inline TriangleKind triangle_kind(IndexKind k) {
    return k == IndexKind::P ? TriangleKind::Linear : TriangleKind::Nonlinear;
}

inline std::size_t word_index(IndexKind kind, const Word& w) {
    return kind == IndexKind::P ? p_index(w) : q_index(w);
}

inline constexpr std::size_t kDefaultEnumerationCap = 26;

class EnumerationCapError : public std::runtime_error {
public:
    EnumerationCapError(std::size_t n, std::size_t cap);
    std::size_t n() const { return n_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t n_;
    std::size_t cap_;
};

/// Throws EnumerationCapError if n > cap.
void check_enumeration_cap(std::size_t n, std::size_t cap);

/// Exhaustive tally of the index over all 2^n words.
Row histogram(std::size_t n, IndexKind kind, std::size_t cap = kDefaultEnumerationCap);

/// Histogram of q_index_reversed; same row as histogram(n, Q).
Row histogram_reversed(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

struct WordClass {
    std::size_t index = 0;
    BigInt multiplicity = 0;
    std::vector<Word> members;  // ordinal order
};

struct GroupedExpression {
    std::size_t n = 0;
    IndexKind class_kind = IndexKind::P;
    std::vector<WordClass> classes;  // ascending index, empty classes omitted
};

GroupedExpression grouped_expression(std::size_t n, IndexKind class_kind,
                                     std::size_t cap = kDefaultEnumerationCap);

/// Calls f(word) for every word of length n in ordinal order.
template <typename F>
void for_each_word(std::size_t n, F&& f) {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < count; ++m) f(word_from_ordinal(n, m));
}

}  // namespace arithtri

#endif  // ARITHTRI_WORDS_HPP
