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


#include "arithtri/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <ostream>
#include <system_error>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arithtri/distributions.hpp"

namespace arithtri::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string lower(std::string_view s) {
    std::string r(s);
    for (auto& c : r) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return r;
}

std::size_t require_n(long long n, long long min, const char* command) {
    if (n < min) {
        throw UsageError(std::string(command) + ": --n must be >= " + std::to_string(min) + ", got " +
                         std::to_string(n));
    }
    return static_cast<std::size_t>(n);
}

std::size_t require_enumerable(long long n, const Config& config, const char* command) {
    const std::size_t un = require_n(n, 0, command);
    check_enumeration_cap(un, config.enumeration_cap);
    return un;
}

std::string join_words(const std::vector<Word>& words) {
    std::string s;
    for (const auto& w : words) {
        if (!s.empty()) s += ' ';
        s += w.str();
    }
    return s;
}

Json words_json(const std::vector<Word>& words) {
    Json arr = Json::array();
    for (const auto& w : words) arr.push_back(w.str());
    return arr;
}

std::string_view index_name(IndexKind k) { return k == IndexKind::P ? "p" : "q"; }

// key=value summary lines; CSV marks them as comments.
void summary_line(std::ostream& out, OutputFormat format, std::string_view key, const std::string& value) {
    if (format == OutputFormat::Csv) out << "# ";
    out << key << '=' << value << '\n';
}

}  // namespace

std::size_t enumeration_cap_from_env(const char* value) {
    if (value == nullptr || *value == '\0') return kDefaultEnumerationCap;
    const std::string_view s(value);
    std::size_t cap = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw UsageError(std::string(kCapEnvVar) + ": not a nonnegative integer: '" + std::string(s) + "'");
    }
    return std::max(cap, kDefaultEnumerationCap);
}

OutputFormat parse_format(std::string_view s) {
    const auto v = lower(s);
    if (v == "text") return OutputFormat::Text;
    if (v == "csv") return OutputFormat::Csv;
    if (v == "json") return OutputFormat::Json;
    throw UsageError("unknown format '" + std::string(s) + "' (expected text|csv|json)");
}

TriangleKind parse_kind(std::string_view s) {
    const auto v = lower(s);
    if (v == "linear" || v == "p") return TriangleKind::Linear;
    if (v == "nonlinear" || v == "q") return TriangleKind::Nonlinear;
    throw UsageError("unknown kind '" + std::string(s) + "' (expected linear|nonlinear|p|q)");
}

IndexKind parse_index_kind(std::string_view s) {
    return parse_kind(s) == TriangleKind::Linear ? IndexKind::P : IndexKind::Q;
}

WalkSystem parse_system(std::string_view s) {
    const auto v = lower(s);
    if (v == "p" || v == "plain") return WalkSystem::PlainWalk;
    if (v == "q" || v == "integrated") return WalkSystem::IntegratedWalk;
    throw UsageError("unknown system '" + std::string(s) + "' (expected p|q)");
}

std::string format_real(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw std::runtime_error("format_real: conversion failed");
    return std::string(buf, ptr);
}

void cmd_row(std::ostream& out, TriangleKind kind, long long n, OutputFormat format, const Config& config) {
    const std::size_t un = require_n(n, 0, "row");
    if (kind == TriangleKind::Nonlinear && un > config.nonlinear_row_max) {
        throw UsageError("row: nonlinear n " + std::to_string(un) + " exceeds maximum " +
                         std::to_string(config.nonlinear_row_max));
    }
    const Row row = triangle_row(kind, un);
    const BigInt sum = row.sum();
    if (sum != pow2(un)) {
        throw std::logic_error("row: sum " + to_decimal(sum) + " differs from 2^" + std::to_string(un));
    }

    if (format == OutputFormat::Json) {
        Json coeffs = Json::array();
        for (const auto& c : row.coeffs) coeffs.push_back(to_decimal(c));
        Json j;
        j["kind"] = to_string(kind);
        j["n"] = un;
        j["coefficients"] = std::move(coeffs);
        j["sum"] = to_decimal(sum);
        out << j.dump(2) << '\n';
        return;
    }
    if (format == OutputFormat::Csv) out << "index,coefficient\n";
    for (std::size_t i = 0; i < row.coeffs.size(); ++i) out << i << ',' << row.coeffs[i] << '\n';
    if (format == OutputFormat::Csv) out << "# ";
    out << "sum=" << sum << '\n';
}

void cmd_expand(std::ostream& out, long long n, IndexKind type, OutputFormat format, const Config& config) {
    const std::size_t un = require_enumerable(n, config, "expand");
    const GroupedExpression g = grouped_expression(un, type, config.enumeration_cap);

    if (format == OutputFormat::Json) {
        Json classes = Json::array();
        for (const auto& c : g.classes) {
            Json jc;
            jc["index"] = c.index;
            jc["multiplicity"] = c.multiplicity.convert_to<std::uint64_t>();
            jc["words"] = words_json(c.members);
            classes.push_back(std::move(jc));
        }
        Json j;
        j["n"] = un;
        j["type"] = index_name(type);
        j["classes"] = std::move(classes);
        out << j.dump(2) << '\n';
        return;
    }
    if (format == OutputFormat::Csv) out << "index,multiplicity,words\n";
    for (const auto& c : g.classes) {
        out << c.index << ',' << c.multiplicity << ',' << join_words(c.members) << '\n';
    }
}

void cmd_trajectories(std::ostream& out, long long n, WalkSystem system, OutputFormat format,
                      const Config& config) {
    const std::size_t un = require_enumerable(n, config, "trajectories");
    const auto endpoints = endpoint_classes(un, system, config.enumeration_cap);
    const auto reports = link_reports(un, system, config.enumeration_cap);
    const auto ambiguous = ambiguous_links(reports);
    const auto idx = index_name(index_kind(system));

    if (format == OutputFormat::Json) {
        Json je = Json::array();
        for (const auto& e : endpoints) {
            Json x;
            x["index"] = e.index;
            x["x"] = e.position;
            x["count"] = e.words.size();
            x["words"] = words_json(e.words);
            je.push_back(std::move(x));
        }
        Json jl = Json::array();
        for (const auto& r : ambiguous) {
            Json x;
            x["step"] = r.link.step;
            x["x"] = r.link.start;
            x["theta"] = r.link.angle;
            x["end"] = r.link.end();
            x["labels"] = r.labels();
            x["words"] = words_json(r.words);
            jl.push_back(std::move(x));
        }
        Json j;
        j["system"] = idx;
        j["n"] = un;
        j["endpoints"] = std::move(je);
        j["link_count"] = reports.size();
        j["ambiguous_links"] = std::move(jl);
        out << j.dump(2) << '\n';
        return;
    }
    if (format == OutputFormat::Text) {
        out << "system=" << idx << " n=" << un << '\n';
        out << "endpoints:\n";
        for (const auto& e : endpoints) {
            out << "  " << idx << '=' << e.index << " x=" << e.position << " count=" << e.words.size()
                << ": " << join_words(e.words) << '\n';
        }
        out << "links=" << reports.size() << " ambiguous=" << ambiguous.size() << '\n';
        for (const auto& r : ambiguous) {
            out << "  t=" << r.link.step << " x=" << r.link.start << " theta=" << r.link.angle
                << " labels=" << r.labels() << ": " << join_words(r.words) << '\n';
        }
        return;
    }
    out << "# endpoints\n" << idx << ",x,count,words\n";
    for (const auto& e : endpoints) {
        out << e.index << ',' << e.position << ',' << e.words.size() << ',' << join_words(e.words) << '\n';
    }
    out << "\n# ambiguous_links\nstep,x,theta,end,labels,words\n";
    for (const auto& r : ambiguous) {
        out << r.link.step << ',' << r.link.start << ',' << r.link.angle << ',' << r.link.end() << ','
            << r.labels() << ',' << join_words(r.words) << '\n';
    }
}

void cmd_dist(std::ostream& out, TriangleKind kind, long long n, OutputFormat format, const Config& config) {
    const std::size_t un = require_n(n, 1, "dist");
    if (kind == TriangleKind::Nonlinear && un > config.nonlinear_row_max) {
        throw UsageError("dist: nonlinear n " + std::to_string(un) + " exceeds maximum " +
                         std::to_string(config.nonlinear_row_max));
    }
    const Row row = triangle_row(kind, un);
    const auto summary = summarize<double>(row);
    const Vector<double> envelope = cumulative_envelope<double>(row);
    const CentralInterval interval = half_mass_interval(row);
    std::optional<ExponentEstimate<double>> exponent;
    if (un >= 4) exponent = estimate_exponent<double>(row);

    if (format == OutputFormat::Json) {
        Json j;
        j["kind"] = to_string(kind);
        j["n"] = un;
        j["mean"] = summary.mean;
        j["variance"] = summary.variance;
        j["modes"] = summary.modes;
        j["interval"] = {{"lo", interval.lo},
                         {"hi", interval.hi},
                         {"width", interval.width()},
                         {"mass", to_decimal(interval.mass)}};
        if (exponent) {
            j["exponent"] = {{"base_length", exponent->base_length},
                             {"interval_width", exponent->interval_width},
                             {"k", exponent->k},
                             {"scale_coefficient", exponent->scale_coefficient}};
        } else {
            j["exponent"] = nullptr;
        }
        Json rows = Json::array();
        for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
            const auto e = static_cast<Eigen::Index>(i);
            rows.push_back({{"index", i},
                            {"coefficient", to_decimal(row.coeffs[i])},
                            {"probability", summary.probabilities(e)},
                            {"cumulative", envelope(e)}});
        }
        j["rows"] = std::move(rows);
        out << j.dump(2) << '\n';
        return;
    }

    std::string modes;
    for (auto m : summary.modes) modes += (modes.empty() ? "" : " ") + std::to_string(m);
    summary_line(out, format, "kind", std::string(to_string(kind)));
    summary_line(out, format, "n", std::to_string(un));
    summary_line(out, format, "mean", format_real(summary.mean));
    summary_line(out, format, "variance", format_real(summary.variance));
    summary_line(out, format, "modes", modes);
    summary_line(out, format, "interval_lo", std::to_string(interval.lo));
    summary_line(out, format, "interval_hi", std::to_string(interval.hi));
    summary_line(out, format, "interval_width", std::to_string(interval.width()));
    summary_line(out, format, "interval_mass", to_decimal(interval.mass));
    if (exponent) {
        summary_line(out, format, "base_length", std::to_string(exponent->base_length));
        summary_line(out, format, "k", format_real(exponent->k));
        summary_line(out, format, "scale_coefficient", format_real(exponent->scale_coefficient));
    } else {
        summary_line(out, format, "k", "n/a");
    }
    out << "index,coefficient,probability,cumulative\n";
    for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
        const auto e = static_cast<Eigen::Index>(i);
        out << i << ',' << row.coeffs[i] << ',' << format_real(summary.probabilities(e)) << ','
            << format_real(envelope(e)) << '\n';
    }
}

void cmd_compare(std::ostream& out, long long n, OutputFormat format, const Config& config) {
    const std::size_t un = require_n(n, 2, "compare");
    if (un > config.nonlinear_row_max) {
        throw UsageError("compare: n " + std::to_string(un) + " exceeds maximum " +
                         std::to_string(config.nonlinear_row_max));
    }
    const auto c = compare_envelopes<double>(un);

    if (format == OutputFormat::Json) {
        Json rows = Json::array();
        for (Eigen::Index p = 0; p < c.linear.size(); ++p) {
            rows.push_back({{"p", p},
                            {"q", c.q_abscissa(p)},
                            {"linear", c.linear(p)},
                            {"nonlinear_rescaled", c.nonlinear_rescaled(p)}});
        }
        Json j;
        j["n"] = un;
        j["rescale_factor"] = c.rescale_factor;
        j["sup_distance"] = c.sup_distance;
        j["mean_abs_distance"] = c.mean_abs_distance;
        j["grid"] = std::move(rows);
        out << j.dump(2) << '\n';
        return;
    }
    summary_line(out, format, "n", std::to_string(un));
    summary_line(out, format, "rescale_factor", format_real(c.rescale_factor));
    summary_line(out, format, "sup_distance", format_real(c.sup_distance));
    summary_line(out, format, "mean_abs_distance", format_real(c.mean_abs_distance));
    out << "p,q,linear,nonlinear_rescaled\n";
    for (Eigen::Index p = 0; p < c.linear.size(); ++p) {
        out << p << ',' << format_real(c.q_abscissa(p)) << ',' << format_real(c.linear(p)) << ','
            << format_real(c.nonlinear_rescaled(p)) << '\n';
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear and nonlinear arithmetic triangles: rows, word tables, ray trajectories, "
                 "distributions"};
    app.require_subcommand(1);

    std::optional<std::size_t> cap_flag;
    app.add_option("--cap", cap_flag, "Enumeration cap for word-level commands (default 26)");

    std::string kind = "linear";
    std::string type = "q";
    std::string system = "q";
    std::string format = "text";
    long long n = -1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", n, "Row index / word length")->required();
        sub->add_option("--format", format, "text|csv|json")->capture_default_str();
    };

    auto* row = app.add_subcommand("row", "Print a triangle row with its exact sum");
    row->add_option("--kind", kind, "linear|nonlinear")->capture_default_str();
    add_common(row);

    auto* expand = app.add_subcommand("expand", "Group the words of (a+b)^n into p- or q-classes");
    expand->add_option("--type,--kind", type, "p|q")->capture_default_str();
    add_common(expand);

    auto* traj = app.add_subcommand("trajectories", "Endpoint classes and superimposed links");
    traj->add_option("--system", system, "p|q")->capture_default_str();
    add_common(traj);

    auto* dist = app.add_subcommand("dist", "Probabilities, cumulative envelope, half-mass interval, exponent");
    dist->add_option("--kind", kind, "linear|nonlinear")->capture_default_str();
    add_common(dist);

    auto* compare = app.add_subcommand("compare", "Rescaled cumulative-envelope comparison");
    add_common(compare);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        Config config;
        config.enumeration_cap = enumeration_cap_from_env(std::getenv(kCapEnvVar));
        if (cap_flag) config.enumeration_cap = *cap_flag;
        const OutputFormat fmt = parse_format(format);

        if (*row) {
            cmd_row(out, parse_kind(kind), n, fmt, config);
        } else if (*expand) {
            cmd_expand(out, n, parse_index_kind(type), fmt, config);
        } else if (*traj) {
            cmd_trajectories(out, n, parse_system(system), fmt, config);
        } else if (*dist) {
            cmd_dist(out, parse_kind(kind), n, fmt, config);
        } else if (*compare) {
            cmd_compare(out, n, fmt, config);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const EnumerationCapError& e) {
        err << "error: " << e.what() << " (raise with --cap or " << kCapEnvVar << ")\n";
        return kExitCapRefused;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace arithtri::cli
