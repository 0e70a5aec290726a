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

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

namespace arithtri::cli {
namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result invoke(std::vector<const char*> args) {
    args.insert(args.begin(), "arithtri");
    std::ostringstream out;
    std::ostringstream err;
    const int status = run(static_cast<int>(args.size()), args.data(), out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

bool has_line(const std::string& s, const std::string& line) {
    for (const auto& l : lines(s)) {
        if (l == line) return true;
    }
    return false;
}

TEST(Cli, RowNonlinear3) {
    const auto r = invoke({"row", "--kind", "nonlinear", "--n", "3"});
    ASSERT_EQ(r.status, kExitOk) << r.err;
    EXPECT_EQ(r.out, "0,1\n1,1\n2,1\n3,2\n4,1\n5,1\n6,1\nsum=8\n");
}

TEST(Cli, RowLinear0) {
    const auto r = invoke({"row", "--kind", "linear", "--n", "0"});
    EXPECT_EQ(r.out, "0,1\nsum=1\n");
}

TEST(Cli, RowCsvRoundTrip) {
    const auto r = invoke({"row", "--kind", "nonlinear", "--n", "20", "--format", "csv"});
    ASSERT_EQ(r.status, kExitOk);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.front(), "index,coefficient");
    EXPECT_EQ(ls.back(), "# sum=1048576");
    EXPECT_EQ(ls.size(), 1u + 211u + 1u);

    // re-sum a large row from its CSV text
    const auto big = invoke({"row", "--kind", "nonlinear", "--n", "64", "--format", "csv"});
    BigInt total = 0;
    std::size_t data_lines = 0;
    for (const auto& l : lines(big.out)) {
        if (l.empty() || l[0] == '#' || l == "index,coefficient") continue;
        total += BigInt(l.substr(l.find(',') + 1));
        ++data_lines;
    }
    EXPECT_EQ(data_lines, 64u * 65u / 2u + 1u);
    EXPECT_EQ(total, pow2(64));
    EXPECT_TRUE(has_line(big.out, "# sum=" + to_decimal(pow2(64))));
}

TEST(Cli, RowJson) {
    const auto r = invoke({"row", "--kind", "linear", "--n", "70", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["n"], 70);
    EXPECT_EQ(j["coefficients"].size(), 71u);
    EXPECT_EQ(j["coefficients"][35], "112186277816662845432");
    EXPECT_EQ(j["sum"], to_decimal(pow2(70)));
}

TEST(Cli, ExpandLines) {
    EXPECT_TRUE(has_line(invoke({"expand", "--n", "3", "--type", "q"}).out, "3,2,abb baa"));
    EXPECT_TRUE(has_line(invoke({"expand", "--n", "3", "--type", "p"}).out, "1,3,aab aba baa"));
    EXPECT_EQ(invoke({"expand", "--n", "1", "--type", "q"}).out, "0,1,a\n1,1,b\n");
    const auto csv = invoke({"expand", "--n", "2", "--type", "q", "--format", "csv"});
    EXPECT_EQ(csv.out, "index,multiplicity,words\n0,1,aa\n1,1,ab\n2,1,ba\n3,1,bb\n");
}

TEST(Cli, ExpandJson) {
    const auto j = nlohmann::json::parse(invoke({"expand", "--n", "3", "--type", "q", "--format", "json"}).out);
    EXPECT_EQ(j["classes"][3]["index"], 3);
    EXPECT_EQ(j["classes"][3]["multiplicity"], 2);
    EXPECT_EQ(j["classes"][3]["words"], nlohmann::json::array({"abb", "baa"}));
}

TEST(Cli, TrajectoriesAmbiguousLink) {
    const auto text = invoke({"trajectories", "--n", "4", "--system", "q"});
    ASSERT_EQ(text.status, kExitOk);
    EXPECT_TRUE(has_line(text.out, "  t=4 x=0 theta=0 labels=ab: abba baab"));

    const auto csv = invoke({"trajectories", "--n", "4", "--system", "q", "--format", "csv"});
    EXPECT_TRUE(has_line(csv.out, "4,0,0,0,ab,abba baab"));

    const auto j = nlohmann::json::parse(
        invoke({"trajectories", "--n", "4", "--system", "q", "--format", "json"}).out);
    bool found = false;
    for (const auto& l : j["ambiguous_links"]) {
        if (l["step"] == 4 && l["x"] == 0 && l["theta"] == 0) {
            found = l["words"] == nlohmann::json::array({"abba", "baab"});
        }
    }
    EXPECT_TRUE(found);
}

TEST(Cli, TrajectoriesPlainHasNoAmbiguity) {
    const auto j = nlohmann::json::parse(
        invoke({"trajectories", "--n", "3", "--system", "p", "--format", "json"}).out);
    EXPECT_TRUE(j["ambiguous_links"].empty());
    EXPECT_TRUE(has_line(invoke({"trajectories", "--n", "3", "--system", "p"}).out, "links=12 ambiguous=0"));
}

TEST(Cli, TrajectoriesN1) {
    const auto r = invoke({"trajectories", "--n", "1", "--system", "q"});
    EXPECT_TRUE(has_line(r.out, "  q=0 x=-1 count=1: a"));
    EXPECT_TRUE(has_line(r.out, "  q=1 x=1 count=1: b"));
}

TEST(Cli, DistLinear2) {
    const auto r = invoke({"dist", "--kind", "linear", "--n", "2", "--format", "csv"});
    ASSERT_EQ(r.status, kExitOk);
    EXPECT_TRUE(has_line(r.out, "0,1,0.25,0.25"));
    EXPECT_TRUE(has_line(r.out, "1,2,0.5,0.75"));
    EXPECT_TRUE(has_line(r.out, "2,1,0.25,1"));
    EXPECT_TRUE(has_line(r.out, "# k=n/a"));
}

TEST(Cli, DistExponentsN210) {
    for (auto [kind, k] : {std::pair{"linear", 0.43}, std::pair{"nonlinear", 0.71}}) {
        const auto j = nlohmann::json::parse(invoke({"dist", "--kind", kind, "--n", "210", "--format", "json"}).out);
        EXPECT_NEAR(j["exponent"]["k"].get<double>(), k, 0.03) << kind;
        EXPECT_EQ(j["exponent"]["base_length"], std::string(kind) == "linear" ? 210 : 22155);
    }
}

TEST(Cli, CompareRescale) {
    EXPECT_TRUE(has_line(invoke({"compare", "--n", "20"}).out, "rescale_factor=10.5"));
    EXPECT_TRUE(has_line(invoke({"compare", "--n", "2"}).out, "rescale_factor=1.5"));
    const auto j = nlohmann::json::parse(invoke({"compare", "--n", "210", "--format", "json"}).out);
    EXPECT_EQ(j["rescale_factor"], 105.5);
    EXPECT_LE(j["sup_distance"].get<double>(), 0.05);
    EXPECT_EQ(j["grid"].size(), 211u);
    const auto csv = invoke({"compare", "--n", "20", "--format", "csv"});
    EXPECT_TRUE(has_line(csv.out, "p,q,linear,nonlinear_rescaled"));
    EXPECT_TRUE(has_line(csv.out, "# rescale_factor=10.5"));
}

TEST(Cli, Deterministic) {
    const std::vector<std::vector<const char*>> cmds = {
        {"row", "--kind", "nonlinear", "--n", "30", "--format", "json"},
        {"expand", "--n", "8", "--type", "q", "--format", "csv"},
        {"trajectories", "--n", "7", "--system", "q"},
        {"dist", "--kind", "nonlinear", "--n", "40", "--format", "csv"},
        {"compare", "--n", "50", "--format", "json"},
    };
    for (const auto& c : cmds) {
        const auto a = invoke(c);
        const auto b = invoke(c);
        EXPECT_EQ(a.status, kExitOk) << a.err;
        EXPECT_EQ(a.out, b.out) << c[0];
    }
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(invoke({"row", "--kind", "linear", "--n", "-1"}).status, kExitUsage);
    EXPECT_EQ(invoke({"row", "--kind", "sideways", "--n", "3"}).status, kExitUsage);
    EXPECT_EQ(invoke({"row", "--kind", "linear"}).status, kExitUsage);
    EXPECT_EQ(invoke({"row", "--n", "3", "--format", "xml"}).status, kExitUsage);
    EXPECT_EQ(invoke({"bogus"}).status, kExitUsage);
    EXPECT_EQ(invoke({}).status, kExitUsage);
    EXPECT_EQ(invoke({"dist", "--kind", "linear", "--n", "0"}).status, kExitUsage);
    EXPECT_EQ(invoke({"compare", "--n", "1"}).status, kExitUsage);
    EXPECT_EQ(invoke({"row", "--kind", "nonlinear", "--n", "1001"}).status, kExitUsage);

    const auto refused = invoke({"expand", "--n", "27"});
    EXPECT_EQ(refused.status, kExitCapRefused);
    EXPECT_NE(refused.err.find("cap 26"), std::string::npos) << refused.err;
    EXPECT_EQ(invoke({"trajectories", "--n", "30", "--system", "p"}).status, kExitCapRefused);
    EXPECT_EQ(invoke({"--cap", "4", "expand", "--n", "5"}).status, kExitCapRefused);
    EXPECT_EQ(invoke({"--cap", "5", "expand", "--n", "5"}).status, kExitOk);
    EXPECT_EQ(invoke({"--help"}).status, kExitOk);
}

TEST(Cli, CapFromEnvironmentValue) {
    EXPECT_EQ(enumeration_cap_from_env(nullptr), kDefaultEnumerationCap);
    EXPECT_EQ(enumeration_cap_from_env(""), kDefaultEnumerationCap);
    EXPECT_EQ(enumeration_cap_from_env("30"), 30u);
    EXPECT_EQ(enumeration_cap_from_env("10"), kDefaultEnumerationCap);
    EXPECT_THROW(enumeration_cap_from_env("3x"), UsageError);
}

TEST(Cli, FormatReal) {
    EXPECT_EQ(format_real(0.25), "0.25");
    EXPECT_EQ(format_real(105.5), "105.5");
    EXPECT_EQ(format_real(1.0), "1");
    EXPECT_EQ(std::stod(format_real(0.1 + 0.2)), 0.1 + 0.2);
}

}  // namespace
}  // namespace arithtri::cli
