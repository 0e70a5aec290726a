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


#include "arithtri/triangles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace arithtri {

namespace {

// Row n -> row n+1 in place. Descending sweep so c[i - step] is still the
// old value when c[i] is updated.
void advance_in_place(Row& row) {
    const std::size_t step = row.kind == TriangleKind::Linear ? 1 : row.n + 1;
    const std::size_t new_len = row_length(row.kind, row.n + 1);
    row.coeffs.resize(new_len);
    for (std::size_t i = new_len - 1; i >= step; --i) {
        row.coeffs[i] += row.coeffs[i - step];
    }
    ++row.n;
}

Row row_zero(TriangleKind kind) {
    Row r;
    r.kind = kind;
    return r;
}

}  // namespace

std::string_view to_string(TriangleKind kind) {
    return kind == TriangleKind::Linear ? "linear" : "nonlinear";
}

std::size_t max_index(TriangleKind kind, std::size_t n) {
    return kind == TriangleKind::Linear ? n : n * (n + 1) / 2;
}

BigInt Row::sum() const {
    BigInt s = 0;
    for (const auto& c : coeffs) s += c;
    return s;
}

Row next_row(const Row& prev) {
    Row r = prev;
    advance_in_place(r);
    return r;
}

Row triangle_row(TriangleKind kind, std::size_t n) {
    Row r = row_zero(kind);
    r.coeffs.reserve(row_length(kind, n));
    while (r.n < n) advance_in_place(r);
    return r;
}

Row pascal_row(std::size_t n) { return triangle_row(TriangleKind::Linear, n); }

Row nonlinear_row(std::size_t n) { return triangle_row(TriangleKind::Nonlinear, n); }

BigInt coefficient(TriangleKind kind, std::size_t n, std::size_t index) {
    const std::size_t hi = max_index(kind, n);
    if (index > hi) {
        throw std::out_of_range("coefficient: index " + std::to_string(index) + " outside [0, " +
                                std::to_string(hi) + "] for " + std::string(to_string(kind)) +
                                " row n=" + std::to_string(n));
    }
    if (kind == TriangleKind::Linear) {
        // multiplicative form, exact at every step
        const std::size_t k = std::min(index, n - index);
        BigInt c = 1;
        for (std::size_t i = 1; i <= k; ++i) {
            c *= n + 1 - i;
            c /= i;
        }
        return c;
    }
    return nonlinear_row(n).coeffs[index];
}

RowStream::RowStream(TriangleKind kind, std::size_t n_max) : current_(row_zero(kind)), n_max_(n_max) {}

void RowStream::advance() {
    if (current_.n >= n_max_) {
        done_ = true;
        return;
    }
    advance_in_place(current_);
}

std::optional<Row> RowStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        return current_;
    }
    advance();
    if (done_) return std::nullopt;
    return current_;
}

RowStream::iterator RowStream::begin() {
    if (done_) return iterator();
    if (started_) {
        advance();
        if (done_) return iterator();
    }
    started_ = true;
    return iterator(this);
}

RowStream row_stream(TriangleKind kind, std::size_t n_max) { return RowStream(kind, n_max); }

std::vector<Row> full_triangle(TriangleKind kind, std::size_t n_max, std::size_t limit) {
    if (n_max > limit) {
        throw std::length_error("full_triangle: n_max " + std::to_string(n_max) +
                                " exceeds materialization limit " + std::to_string(limit));
    }
    std::vector<Row> rows;
    rows.reserve(n_max + 1);
    for (const Row& r : row_stream(kind, n_max)) rows.push_back(r);
    return rows;
}

}  // namespace arithtri
