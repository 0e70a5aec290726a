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

#include <random>
#include <vector>

#include <gtest/gtest.h>

namespace arithtri {
namespace {

std::vector<BigInt> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

template <typename F>
std::vector<std::size_t> indices_in_ordinal_order(std::size_t n, F index) {
    std::vector<std::size_t> out;
    for_each_word(n, [&](const Word& w) { out.push_back(index(w)); });
    return out;
}

TEST(Words, FromOrdinal) {
    EXPECT_EQ(word_from_ordinal(3, 5).str(), "bab");
    EXPECT_EQ(word_from_ordinal(3, 0).str(), "aaa");
    EXPECT_EQ(word_from_ordinal(3, 7).str(), "bbb");
    EXPECT_EQ(word_from_ordinal(0, 0).str(), "");
    EXPECT_EQ(word_from_ordinal(3, 5).at(1), Letter::B);
    EXPECT_EQ(word_from_ordinal(3, 5).at(2), Letter::A);
}

TEST(Words, FromOrdinalRange) {
    EXPECT_THROW(word_from_ordinal(3, 8), std::out_of_range);
    EXPECT_THROW(word_from_ordinal(64, 0), std::out_of_range);
    EXPECT_NO_THROW(word_from_ordinal(63, ~std::uint64_t{0} >> 1));
}

TEST(Words, ParseRoundTrip) {
    EXPECT_EQ(parse_word("abba").ordinal(), 6u);
    EXPECT_EQ(parse_word("BAAB").str(), "baab");
    EXPECT_THROW(parse_word("abc"), std::invalid_argument);
    for (std::size_t n = 0; n <= 16; ++n) {
        for_each_word(n, [&](const Word& w) {
            // recover m from the letters alone
            std::uint64_t m = 0;
            for (Letter l : w.letters()) m = (m << 1) | static_cast<std::uint64_t>(l);
            ASSERT_EQ(m, w.ordinal());
            ASSERT_EQ(parse_word(w.str()), w);
        });
    }
}

TEST(Words, PIndexOrderN3) {
    EXPECT_EQ(indices_in_ordinal_order(3, [](const Word& w) { return p_index(w); }),
              (std::vector<std::size_t>{0, 1, 1, 2, 1, 2, 2, 3}));
}

TEST(Words, QIndexOrderN3) {
    EXPECT_EQ(indices_in_ordinal_order(3, [](const Word& w) { return q_index(w); }),
              (std::vector<std::size_t>{0, 1, 2, 3, 3, 4, 5, 6}));
    EXPECT_EQ(q_index(parse_word("abb")), 3u);
    EXPECT_EQ(q_index(parse_word("baa")), 3u);
    EXPECT_EQ(q_index(parse_word("aaa")), 0u);
}

TEST(Words, QIndexIsWeightedSum) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng() % 63;
        const Word w = word_from_ordinal(n, rng() >> (64 - n));
        std::size_t q = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (w.at(k) == Letter::B) q += w.weight(k);
        }
        ASSERT_EQ(q_index(w), q) << w.str();
    }
}

TEST(Words, Histograms) {
    EXPECT_EQ(histogram(3, IndexKind::Q).coeffs, ints({1, 1, 1, 2, 1, 1, 1}));
    EXPECT_EQ(histogram(3, IndexKind::P).coeffs, ints({1, 3, 3, 1}));
    EXPECT_EQ(histogram(1, IndexKind::Q).coeffs, ints({1, 1}));
    EXPECT_EQ(histogram(0, IndexKind::Q).coeffs, ints({1}));
    EXPECT_EQ(histogram(3, IndexKind::Q).kind, TriangleKind::Nonlinear);
}

TEST(Words, HistogramsEqualRecurrences) {
    for (std::size_t n = 0; n <= 16; ++n) {
        EXPECT_EQ(histogram(n, IndexKind::P), pascal_row(n)) << n;
        EXPECT_EQ(histogram(n, IndexKind::Q), nonlinear_row(n)) << n;
    }
}

TEST(Words, ReversedWeightsGiveSameHistogram) {
    for (std::size_t n = 0; n <= 12; ++n) {
        EXPECT_EQ(histogram_reversed(n), histogram(n, IndexKind::Q)) << n;
    }
    // individual words differ: abb -> 2+3 under reversed weights
    EXPECT_EQ(q_index_reversed(parse_word("abb")), 5u);
}

TEST(Words, ComplementIdentityAndBounds) {
    for (std::size_t n = 0; n <= 14; ++n) {
        const std::size_t q_max = n * (n + 1) / 2;
        for_each_word(n, [&](const Word& w) {
            ASSERT_EQ(q_index(w) + q_index(w.complement()), q_max);
            ASSERT_EQ(p_index(w) + p_index(w.complement()), n);
            ASSERT_LE(p_index(w), n);
            ASSERT_LE(q_index(w), q_max);
        });
    }
}

TEST(Words, CapRefusal) {
    EXPECT_THROW(histogram(27, IndexKind::P), EnumerationCapError);
    EXPECT_THROW(grouped_expression(30, IndexKind::Q), EnumerationCapError);
    try {
        histogram(10, IndexKind::Q, 8);
        FAIL();
    } catch (const EnumerationCapError& e) {
        EXPECT_EQ(e.cap(), 8u);
        EXPECT_NE(std::string(e.what()).find("cap 8"), std::string::npos);
    }
    EXPECT_NO_THROW(histogram(10, IndexKind::Q, 10));
}

TEST(Words, GroupedExpressionQ3) {
    const auto g = grouped_expression(3, IndexKind::Q);
    ASSERT_EQ(g.classes.size(), 7u);
    for (const auto& c : g.classes) {
        if (c.index == 3) {
            EXPECT_EQ(c.multiplicity, 2);
            ASSERT_EQ(c.members.size(), 2u);
            EXPECT_EQ(c.members[0].str(), "abb");
            EXPECT_EQ(c.members[1].str(), "baa");
        } else {
            EXPECT_EQ(c.multiplicity, 1) << c.index;
        }
    }
}

TEST(Words, GroupedExpressionP3) {
    const auto g = grouped_expression(3, IndexKind::P);
    ASSERT_EQ(g.classes.size(), 4u);
    const auto& c = g.classes[1];
    EXPECT_EQ(c.index, 1u);
    EXPECT_EQ(c.multiplicity, 3);
    std::vector<std::string> names;
    for (const auto& w : c.members) names.push_back(w.str());
    EXPECT_EQ(names, (std::vector<std::string>{"aab", "aba", "baa"}));
}

TEST(Words, GroupedExpressionQ2AllSingletons) {
    const auto g = grouped_expression(2, IndexKind::Q);
    ASSERT_EQ(g.classes.size(), 4u);
    const char* expected[] = {"aa", "ab", "ba", "bb"};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(g.classes[i].index, i);
        EXPECT_EQ(g.classes[i].multiplicity, 1);
        EXPECT_EQ(g.classes[i].members.at(0).str(), expected[i]);
    }
}

TEST(Words, GroupedMultiplicitiesMatchRows) {
    for (std::size_t n = 0; n <= 12; ++n) {
        for (auto kind : {IndexKind::P, IndexKind::Q}) {
            const auto g = grouped_expression(n, kind);
            const Row row = triangle_row(triangle_kind(kind), n);
            BigInt total = 0;
            std::size_t cursor = 0;
            for (const auto& c : g.classes) {
                ASSERT_EQ(c.multiplicity, row.coeffs[c.index]);
                ASSERT_TRUE(std::is_sorted(c.members.begin(), c.members.end()));
                ASSERT_GE(c.index, cursor);
                cursor = c.index + 1;
                total += c.multiplicity;
            }
            EXPECT_EQ(total, pow2(n));
        }
    }
}

}  // namespace
}  // namespace arithtri
