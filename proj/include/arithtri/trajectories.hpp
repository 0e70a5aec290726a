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


#ifndef ARITHTRI_TRAJECTORIES_HPP
#define ARITHTRI_TRAJECTORIES_HPP

#include <compare>
#include <cstddef>
#include <string_view>
#include <vector>

#include "arithtri/words.hpp"

namespace arithtri {

// PlainWalk: every passage deflects by one unit left (A) or right (B), the
// Galton-board system; the endpoint encodes p_index. IntegratedWalk: every
// passage turns the ray by one unit, so the angle is a running sum of the
// deflections and the position a running sum of the angles; the endpoint
// encodes q_index.
enum class WalkSystem { PlainWalk, IntegratedWalk };

std::string_view to_string(WalkSystem system);

inline IndexKind index_kind(WalkSystem s) {
    return s == WalkSystem::PlainWalk ? IndexKind::P : IndexKind::Q;
}

/// Angles are in units of the elementary deflection, positions in
/// transverse lattice units. positions[0] == 0.
struct TrajectoryPath {
    Word word;
    WalkSystem system = WalkSystem::PlainWalk;
    std::vector<long> angles;     // theta_1 .. theta_n
    std::vector<long> positions;  // x_0 .. x_n

    long endpoint() const { return positions.back(); }
};

TrajectoryPath realize_path(const Word& w, WalkSystem system);

/// Lattice endpoint of a triangle index: 2p - n or 2q - n(n+1)/2.
long endpoint_position(WalkSystem system, std::size_t n, std::size_t index);

/// Inverse of endpoint_position.
std::size_t endpoint_index(WalkSystem system, std::size_t n, long position);

struct EndpointClass {
    std::size_t index = 0;  // p or q
    long position = 0;      // x_n
    std::vector<Word> words;
};

/// Non-empty endpoint classes in ascending index order.
std::vector<EndpointClass> endpoint_classes(std::size_t n, WalkSystem system,
                                            std::size_t cap = kDefaultEnumerationCap);

/// One ray segment: step t (1-based) leaving x_{t-1} at angle theta_t.
struct Link {
    std::size_t step = 0;
    long start = 0;
    long angle = 0;

    long end() const { return start + angle; }

    friend auto operator<=>(const Link&, const Link&) = default;
};

struct LinkReport {
    Link link;
    std::vector<Word> words;  // ordinal order
    bool has_a = false;
    bool has_b = false;

    bool ambiguous() const { return has_a && has_b; }
    /// "a", "b" or "ab".
    std::string labels() const;
};

/// One report per distinct link, ordered by (step, start, angle).
std::vector<LinkReport> link_reports(std::size_t n, WalkSystem system,
                                     std::size_t cap = kDefaultEnumerationCap);

std::vector<LinkReport> ambiguous_links(const std::vector<LinkReport>& reports);

}  // namespace arithtri

#endif  // ARITHTRI_TRAJECTORIES_HPP
