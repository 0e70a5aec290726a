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


#include "arithtri/trajectories.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace arithtri {

std::string_view to_string(WalkSystem system) {
    return system == WalkSystem::PlainWalk ? "plain" : "integrated";
}

TrajectoryPath realize_path(const Word& w, WalkSystem system) {
    TrajectoryPath path;
    path.word = w;
    path.system = system;
    path.angles.reserve(w.size());
    path.positions.reserve(w.size() + 1);
    path.positions.push_back(0);
    long theta = 0;
    for (std::size_t k = 1; k <= w.size(); ++k) {
        const long delta = w.at(k) == Letter::B ? 1 : -1;
        theta = system == WalkSystem::PlainWalk ? delta : theta + delta;
        path.angles.push_back(theta);
        path.positions.push_back(path.positions.back() + theta);
    }
    return path;
}

long endpoint_position(WalkSystem system, std::size_t n, std::size_t index) {
    const auto top = static_cast<long>(max_index(triangle_kind(index_kind(system)), n));
    return 2 * static_cast<long>(index) - top;
}

std::size_t endpoint_index(WalkSystem system, std::size_t n, long position) {
    const auto top = static_cast<long>(max_index(triangle_kind(index_kind(system)), n));
    const long twice = position + top;
    if (twice < 0 || twice > 2 * top || twice % 2 != 0) {
        throw std::out_of_range("endpoint_index: position " + std::to_string(position) +
                                " is not a lattice endpoint for n=" + std::to_string(n));
    }
    return static_cast<std::size_t>(twice / 2);
}

std::vector<EndpointClass> endpoint_classes(std::size_t n, WalkSystem system, std::size_t cap) {
    check_enumeration_cap(n, cap);
    std::map<long, std::vector<Word>> by_position;
    for_each_word(n, [&](const Word& w) {
        by_position[realize_path(w, system).endpoint()].push_back(w);
    });
    std::vector<EndpointClass> out;
    out.reserve(by_position.size());
    for (auto& [x, words] : by_position) {
        out.push_back({endpoint_index(system, n, x), x, std::move(words)});
    }
    return out;
}

std::string LinkReport::labels() const {
    std::string s;
    if (has_a) s += 'a';
    if (has_b) s += 'b';
    return s;
}

std::vector<LinkReport> link_reports(std::size_t n, WalkSystem system, std::size_t cap) {
    check_enumeration_cap(n, cap);
    std::map<Link, LinkReport> links;
    for_each_word(n, [&](const Word& w) {
        const TrajectoryPath path = realize_path(w, system);
        for (std::size_t t = 1; t <= n; ++t) {
            const Link link{t, path.positions[t - 1], path.angles[t - 1]};
            LinkReport& r = links[link];
            r.link = link;
            r.words.push_back(w);
            (w.at(t) == Letter::A ? r.has_a : r.has_b) = true;
        }
    });
    std::vector<LinkReport> out;
    out.reserve(links.size());
    for (auto& [link, report] : links) out.push_back(std::move(report));
    return out;
}

std::vector<LinkReport> ambiguous_links(const std::vector<LinkReport>& reports) {
    std::vector<LinkReport> out;
    for (const auto& r : reports) {
        if (r.ambiguous()) out.push_back(r);
    }
    return out;
}

}  // namespace arithtri
