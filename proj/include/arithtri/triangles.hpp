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


#ifndef ARITHTRI_TRIANGLES_HPP
#define ARITHTRI_TRIANGLES_HPP

#include <cstddef>
#include <iterator>
#include <optional>
#include <string_view>
#include <vector>

#include "arithtri/bigint.hpp"

namespace arithtri {

// Linear is the Pascal triangle (index p in [0, n]); Nonlinear counts
// subsets of {1..n} by element sum (index q in [0, n(n+1)/2]).
enum class TriangleKind { Linear, Nonlinear };

std::string_view to_string(TriangleKind kind);

/// Largest index of row `n`: n for Linear, n(n+1)/2 for Nonlinear.
std::size_t max_index(TriangleKind kind, std::size_t n);

inline std::size_t row_length(TriangleKind kind, std::size_t n) { return max_index(kind, n) + 1; }

struct Row {
    TriangleKind kind = TriangleKind::Linear;
    std::size_t n = 0;
    std::vector<BigInt> coeffs{BigInt(1)};

    std::size_t last_index() const { return coeffs.size() - 1; }
    BigInt sum() const;

    friend bool operator==(const Row&, const Row&) = default;
};

/// Row n+1 from row n: c'[i] = c[i] + c[i - step] with out-of-range terms
/// zero, step = 1 (Linear) or n+1 (Nonlinear).
Row next_row(const Row& prev);

Row pascal_row(std::size_t n);
Row nonlinear_row(std::size_t n);
Row triangle_row(TriangleKind kind, std::size_t n);

/// Throws std::out_of_range naming the valid interval if `index` is past the row.
BigInt coefficient(TriangleKind kind, std::size_t n, std::size_t index);

/// Rows 0..n_max, each derived from its predecessor. Single pass.
class RowStream {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Row;
        using difference_type = std::ptrdiff_t;
        using pointer = const Row*;
        using reference = const Row&;

        iterator() = default;

        reference operator*() const { return stream_->current_; }
        pointer operator->() const { return &stream_->current_; }
        iterator& operator++() {
            stream_->advance();
            if (stream_->done_) stream_ = nullptr;
            return *this;
        }
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& a, const iterator& b) { return a.stream_ == b.stream_; }

    private:
        friend class RowStream;
        explicit iterator(RowStream* s) : stream_(s) {}
        RowStream* stream_ = nullptr;
    };

    RowStream(TriangleKind kind, std::size_t n_max);

    iterator begin();
    iterator end() { return iterator(); }

    /// Next row, or nullopt once row n_max has been produced.
    std::optional<Row> next();

private:
    void advance();

    Row current_;
    std::size_t n_max_;
    bool started_ = false;
    bool done_ = false;
};

RowStream row_stream(TriangleKind kind, std::size_t n_max);

inline constexpr std::size_t kDefaultTriangleLimit = 64;

/// Rows 0..n_max materialized. Refuses (std::length_error) when n_max > limit.
std::vector<Row> full_triangle(TriangleKind kind, std::size_t n_max,
                               std::size_t limit = kDefaultTriangleLimit);

}  // namespace arithtri

#endif  // ARITHTRI_TRIANGLES_HPP
