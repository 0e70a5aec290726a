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


#include "arithtri/distributions.hpp"

namespace arithtri {

ExactMoments exact_moments(const Row& row) {
    ExactMoments m;
    for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
        const auto& c = row.coeffs[i];
        m.total += c;
        m.first += c * i;
        m.second += c * i * i;
    }
    return m;
}

std::vector<std::size_t> mode_indices(const Row& row) {
    std::vector<std::size_t> modes;
    const BigInt* best = nullptr;
    for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
        const auto& c = row.coeffs[i];
        if (best == nullptr || c > *best) {
            best = &c;
            modes.assign(1, i);
        } else if (c == *best) {
            modes.push_back(i);
        }
    }
    return modes;
}

CentralInterval half_mass_interval(const Row& row) {
    detail::require(row.n >= 1, "half_mass_interval: n must be >= 1");
    const BigInt target = pow2(row.n - 1);
    const std::size_t last = row.last_index();
    CentralInterval ci;
    ci.lo = last / 2;
    ci.hi = last - ci.lo;
    ci.mass = row.coeffs[ci.lo];
    if (ci.hi != ci.lo) ci.mass += row.coeffs[ci.hi];
    while (ci.mass < target) {
        if (ci.lo == 0) {
            throw std::logic_error("half_mass_interval: row total below 2^n");
        }
        --ci.lo;
        ++ci.hi;
        ci.mass += row.coeffs[ci.lo] + row.coeffs[ci.hi];
    }
    return ci;
}

double closed_form_mean(TriangleKind kind, std::size_t n) {
    const auto x = static_cast<double>(n);
    return kind == TriangleKind::Linear ? x / 2.0 : x * (x + 1.0) / 4.0;
}

double closed_form_variance(TriangleKind kind, std::size_t n) {
    const auto x = static_cast<double>(n);
    return kind == TriangleKind::Linear ? x / 4.0 : x * (x + 1.0) * (2.0 * x + 1.0) / 24.0;
}

}  // namespace arithtri
