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


#ifndef ARITHTRI_DISTRIBUTIONS_HPP
#define ARITHTRI_DISTRIBUTIONS_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "arithtri/bigint.hpp"
#include "arithtri/triangles.hpp"

namespace arithtri {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Raw moments of a row in exact arithmetic: first = sum i*c_i,
// second = sum i^2*c_i, total = sum c_i.
struct ExactMoments {
    BigInt total;
    BigInt first;
    BigInt second;
};

ExactMoments exact_moments(const Row& row);

/// Indices holding the largest coefficient, ascending.
std::vector<std::size_t> mode_indices(const Row& row);

/// Minimal symmetric index window [lo, hi], lo + hi = last index, whose
/// exact coefficient sum reaches half the row total 2^(n-1).
struct CentralInterval {
    std::size_t lo = 0;
    std::size_t hi = 0;
    BigInt mass;

    std::size_t width() const { return hi - lo + 1; }
};

CentralInterval half_mass_interval(const Row& row);

/// Closed-form moments of the index distribution: n/2, n/4 (Linear) and
/// n(n+1)/4, n(n+1)(2n+1)/24 (Nonlinear).
double closed_form_mean(TriangleKind kind, std::size_t n);
double closed_form_variance(TriangleKind kind, std::size_t n);

namespace detail {

inline void require(bool ok, const char* what) {
    if (!ok) throw std::domain_error(what);
}

}  // namespace detail

template <typename Scalar = double>
struct DistributionSummary {
    TriangleKind kind = TriangleKind::Linear;
    std::size_t n = 0;
    Vector<Scalar> probabilities;
    Scalar mean = 0;
    Scalar variance = 0;
    std::vector<std::size_t> modes;
};

/// c_i / 2^n, each entry rounded once from the exact ratio.
template <typename Scalar = double>
Vector<Scalar> probabilities(const Row& row) {
    Vector<Scalar> p(static_cast<Eigen::Index>(row.coeffs.size()));
    for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
        p(static_cast<Eigen::Index>(i)) = ratio_pow2<Scalar>(row.coeffs[i], static_cast<long>(row.n));
    }
    return p;
}

template <typename Scalar = double>
DistributionSummary<Scalar> summarize(const Row& row) {
    detail::require(row.n >= 1, "summarize: n must be >= 1");
    const auto m = exact_moments(row);
    const auto n = static_cast<long>(row.n);
    DistributionSummary<Scalar> s;
    s.kind = row.kind;
    s.n = row.n;
    s.probabilities = probabilities<Scalar>(row);
    // mean = S1 / 2^n, variance = (S2 * 2^n - S1^2) / 4^n, both exact until the final rounding
    s.mean = ratio_pow2<Scalar>(m.first, n);
    s.variance = ratio_pow2<Scalar>((m.second << row.n) - m.first * m.first, 2 * n);
    s.modes = mode_indices(row);
    return s;
}

template <typename Scalar = double>
DistributionSummary<Scalar> distribution(TriangleKind kind, std::size_t n) {
    detail::require(n >= 1, "distribution: n must be >= 1");
    return summarize<Scalar>(triangle_row(kind, n));
}

/// Entry i = (c_0 + ... + c_i) / 2^n; the last entry is exactly 1.
template <typename Scalar = double>
Vector<Scalar> cumulative_envelope(const Row& row) {
    Vector<Scalar> e(static_cast<Eigen::Index>(row.coeffs.size()));
    BigInt running = 0;
    for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
        running += row.coeffs[i];
        e(static_cast<Eigen::Index>(i)) = ratio_pow2<Scalar>(running, static_cast<long>(row.n));
    }
    return e;
}

template <typename Scalar = double>
Vector<Scalar> cumulative_envelope(TriangleKind kind, std::size_t n) {
    detail::require(n >= 1, "cumulative_envelope: n must be >= 1");
    return cumulative_envelope<Scalar>(triangle_row(kind, n));
}

template <typename Scalar = double>
struct ExponentEstimate {
    TriangleKind kind = TriangleKind::Linear;
    std::size_t n = 0;
    std::size_t base_length = 0;  // n or n(n+1)/2
    std::size_t interval_width = 0;
    CentralInterval interval;
    Scalar k = 0;  // ln(width) / ln(base_length)
    // width / sqrt(n) (Linear) or width / n (Nonlinear)
    Scalar scale_coefficient = 0;
};

template <typename Scalar = double>
ExponentEstimate<Scalar> estimate_exponent(const Row& row) {
    detail::require(row.n >= 4, "estimate_exponent: n must be >= 4");
    using std::log;
    using std::sqrt;
    ExponentEstimate<Scalar> e;
    e.kind = row.kind;
    e.n = row.n;
    e.base_length = max_index(row.kind, row.n);
    e.interval = half_mass_interval(row);
    e.interval_width = e.interval.width();
    const auto width = static_cast<Scalar>(e.interval_width);
    e.k = log(width) / log(static_cast<Scalar>(e.base_length));
    const auto nn = static_cast<Scalar>(row.n);
    e.scale_coefficient = row.kind == TriangleKind::Linear ? width / sqrt(nn) : width / nn;
    return e;
}

template <typename Scalar = double>
ExponentEstimate<Scalar> estimate_exponent(TriangleKind kind, std::size_t n) {
    detail::require(n >= 4, "estimate_exponent: n must be >= 4");
    return estimate_exponent<Scalar>(triangle_row(kind, n));
}

/// Piecewise-linear reading of a cumulative envelope at a fractional index;
/// 0 below the first point's left neighbour, 1 past the last index.
template <typename Scalar>
Scalar interpolate_envelope(const Vector<Scalar>& envelope, Scalar x) {
    const auto last = envelope.size() - 1;
    if (x >= static_cast<Scalar>(last)) return envelope(last);
    if (x <= Scalar(-1)) return Scalar(0);
    if (x < Scalar(0)) return envelope(0) * (x + Scalar(1));
    using std::floor;
    const auto i = static_cast<Eigen::Index>(floor(x));
    const Scalar t = x - static_cast<Scalar>(i);
    return envelope(i) * (Scalar(1) - t) + envelope(i + 1) * t;
}

template <typename Scalar = double>
struct EnvelopeComparison {
    std::size_t n = 0;
    Scalar rescale_factor = 0;  // q_max / p_max = (n+1)/2
    Scalar sup_distance = 0;
    Scalar mean_abs_distance = 0;
    // Shared grid p = 0..n: Linear envelope, Nonlinear envelope read at the
    // rescaled abscissa, and that abscissa in q units.
    Vector<Scalar> linear;
    Vector<Scalar> nonlinear_rescaled;
    Vector<Scalar> q_abscissa;
};

/// Cumulative entry i closes bin i, so it sits at bin edge i + 1/2 on
/// either axis. Linear edge p + 1/2 maps to Nonlinear edge (p + 1/2) * f,
/// i.e. fractional Nonlinear index (p + 1/2) * f - 1/2.
template <typename Scalar = double>
EnvelopeComparison<Scalar> compare_envelopes(std::size_t n) {
    detail::require(n >= 2, "compare_envelopes: n must be >= 2");
    EnvelopeComparison<Scalar> c;
    c.n = n;
    c.rescale_factor = static_cast<Scalar>(max_index(TriangleKind::Nonlinear, n)) /
                       static_cast<Scalar>(max_index(TriangleKind::Linear, n));
    c.linear = cumulative_envelope<Scalar>(TriangleKind::Linear, n);
    const Vector<Scalar> nonlinear = cumulative_envelope<Scalar>(TriangleKind::Nonlinear, n);

    const auto size = c.linear.size();
    const Scalar half(0.5);
    c.q_abscissa = (Vector<Scalar>::LinSpaced(size, Scalar(0), static_cast<Scalar>(n)).array() + half) *
                       c.rescale_factor -
                   half;
    c.nonlinear_rescaled.resize(size);
    for (Eigen::Index p = 0; p < size; ++p) {
        c.nonlinear_rescaled(p) = interpolate_envelope(nonlinear, c.q_abscissa(p));
    }
    const Vector<Scalar> diff = (c.nonlinear_rescaled - c.linear).cwiseAbs();
    c.sup_distance = diff.maxCoeff();
    c.mean_abs_distance = diff.mean();
    return c;
}

}  // namespace arithtri

#endif  // ARITHTRI_DISTRIBUTIONS_HPP
