#include <gtest/gtest.h>

#include <regex>
#include <set>

#include "centralizer/bijection.hpp"
#include "centralizer/bratteli.hpp"

using namespace centralizer;

namespace {

std::vector<std::string> counts(const Row& row)
{
    std::vector<std::string> out;
    for (const auto& v : row.vertices) {
        out.push_back(v.count.str());
    }
    return out;
}

} // namespace

TEST(GroupPair, Text)
{
    EXPECT_EQ(to_string(parse_group_pair("S:4")), "S:4");
    EXPECT_EQ(parse_group_pair("A:6"), (GroupPair{Group::alt, 6}));
    EXPECT_THROW(parse_group_pair("Q:4"), error);
    EXPECT_THROW(parse_group_pair("S:"), error);
    EXPECT_THROW(parse_group_pair("S:x"), error);
}

TEST(BuildDiagram, RowExamples)
{
    const auto s4 = build_diagram({Group::sym, 4}, Module::perm, HalfLevel::integer(3));
    EXPECT_EQ(counts(s4.row(HalfLevel::integer(3))), (std::vector<std::string>{"5", "10", "5", "6", "1"}));
    const auto a4 = build_diagram({Group::alt, 4}, Module::perm, HalfLevel::integer(2));
    EXPECT_EQ(counts(a4.row(HalfLevel::integer(2))), (std::vector<std::string>{"2", "4", "1", "1"}));
    const auto s6 = build_diagram({Group::sym, 6}, Module::refl, HalfLevel::integer(4));
    EXPECT_EQ(counts(s6.row(HalfLevel::integer(4))),
              (std::vector<std::string>{"4", "11", "13", "13", "5", "12", "6", "2", "3", "1"}));
}

TEST(BuildDiagram, RootRows)
{
    for (Group g : {Group::sym, Group::alt}) {
        for (int n = 4; n <= 7; ++n) {
            const auto d = build_diagram({g, n}, Module::perm, HalfLevel(1));
            ASSERT_EQ(d.rows().size(), 2u);
            ASSERT_EQ(d.rows()[0].vertices.size(), 1u);
            ASSERT_EQ(d.rows()[1].vertices.size(), 1u);
            EXPECT_EQ(base_of(d.rows()[0].vertices[0].label), row_partition(n));
            EXPECT_EQ(base_of(d.rows()[1].vertices[0].label), row_partition(n - 1));
        }
    }
}

TEST(BuildDiagram, InvalidPairs)
{
    for (const GroupPair& p : {GroupPair{Group::sym, 1}, GroupPair{Group::alt, 3}}) {
        try {
            build_diagram(p, Module::perm, HalfLevel(2));
            FAIL();
        } catch (const error& e) {
            EXPECT_EQ(e.code(), errc::invalid_pair);
        }
    }
}

TEST(BuildDiagram, CountsMatchFormulas)
{
    for (int n = 4; n <= 6; ++n) {
        for (Group g : {Group::sym, Group::alt}) {
            for (Module m : {Module::perm, Module::refl}) {
                const auto d = build_diagram({g, n}, m, HalfLevel::integer(4));
                for (const auto& row : d.rows()) {
                    const Context ctx = d.context(row.level);
                    EXPECT_EQ(row.square_sum, dim_algebra(ctx));
                    for (const auto& v : row.vertices) {
                        EXPECT_EQ(v.count, multiplicity(ctx, v.label)) << to_string(v.label);
                        if (m == Module::perm) {
                            EXPECT_GE(v.count, 1);
                        }
                    }
                    // every irreducible of positive multiplicity is a vertex
                    for (const auto& c : decompose(ctx)) {
                        EXPECT_TRUE(row.find(c.label).has_value());
                    }
                }
            }
        }
    }
}

TEST(BuildDiagram, EdgesFollowBranching)
{
    const auto d = build_diagram({Group::sym, 5}, Module::perm, HalfLevel::integer(3));
    for (std::size_t r = 1; r < d.rows().size(); ++r) {
        const auto& above = d.rows()[r - 1];
        const auto& row = d.rows()[r];
        std::set<std::pair<std::size_t, std::size_t>> edges;
        for (const auto& e : row.edges) {
            EXPECT_EQ(e.multiplicity, 1);
            edges.insert({e.from, e.to});
        }
        for (std::size_t i = 0; i < above.vertices.size(); ++i) {
            for (std::size_t j = 0; j < row.vertices.size(); ++j) {
                const auto& upper = std::get<Partition>(above.vertices[i].label);
                const auto& lower = std::get<Partition>(row.vertices[j].label);
                const bool adjacent = row.level.is_half() ? contains(upper, lower) : contains(lower, upper);
                EXPECT_EQ(edges.count({i, j}) == 1, adjacent);
            }
        }
    }
}

TEST(LevelSquareSum, Values)
{
    const auto s4 = build_diagram({Group::sym, 4}, Module::perm, HalfLevel::integer(4));
    EXPECT_EQ(level_square_sum(s4, HalfLevel::integer(3)), 187);
    EXPECT_EQ(level_square_sum(s4, HalfLevel(0)), 1);
    const auto a6 = build_diagram({Group::alt, 6}, Module::perm, HalfLevel::integer(4));
    EXPECT_EQ(level_square_sum(a6, HalfLevel::integer(4)), 5427);
    try {
        level_square_sum(s4, HalfLevel(9));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::level_out_of_range);
    }
}

TEST(EnumeratePaths, Examples)
{
    const auto d = build_diagram({Group::sym, 4}, Module::perm, HalfLevel::integer(3));
    EXPECT_EQ(enumerate_paths(d, HalfLevel::integer(3), Partition{2, 2}).size(), 5u);
    EXPECT_EQ(enumerate_paths(d, HalfLevel::integer(3), Partition{1, 1, 1, 1}).size(), 1u);
    const auto root = enumerate_paths(d, HalfLevel(0), Partition{4});
    ASSERT_EQ(root.size(), 1u);
    EXPECT_EQ(root[0].shapes(), (std::vector<Partition>{{4}}));
    try {
        enumerate_paths(d, HalfLevel::integer(1), Partition{2, 2});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::vertex_not_found);
    }
}

TEST(EnumeratePaths, LengthsMatchCounts)
{
    for (int n = 2; n <= 5; ++n) {
        for (Group g : {Group::sym, Group::alt}) {
            if (g == Group::alt && n < 4) {
                continue;
            }
            const auto d = build_diagram({g, n}, Module::perm, HalfLevel::integer(3));
            for (const auto& row : d.rows()) {
                for (const auto& v : row.vertices) {
                    const auto paths = enumerate_label_paths(d, row.level, v.label);
                    EXPECT_EQ(Nat(paths.size()), v.count);
                    std::set<std::vector<std::string>> distinct;
                    for (const auto& p : paths) {
                        std::vector<std::string> names;
                        for (const auto& l : p) {
                            names.push_back(to_string(l));
                        }
                        distinct.insert(names);
                        EXPECT_EQ(p.back(), v.label);
                        EXPECT_EQ(p.size(), static_cast<std::size_t>(row.level.twice()) + 1);
                    }
                    EXPECT_EQ(distinct.size(), paths.size());
                }
            }
        }
    }
}

TEST(Export, TextRows)
{
    const auto d = build_diagram({Group::sym, 4}, Module::perm, HalfLevel::integer(2));
    const std::string text = to_text(d);
    EXPECT_NE(text.find("[4]:2 [3,1]:3 [2,2]:1 [2,1,1]:1 | 15"), std::string::npos) << text;
    EXPECT_NE(text.find("l=3/2"), std::string::npos);
    const auto a = build_diagram({Group::alt, 4}, Module::perm, HalfLevel::integer(2));
    EXPECT_NE(to_text(a).find("[4]:2 [3,1]:4 [2,2]+:1 [2,2]-:1 | 22"), std::string::npos) << to_text(a);
}

TEST(Export, Json)
{
    const auto root = build_diagram({Group::sym, 4}, Module::perm, HalfLevel(0));
    const auto j0 = to_json(root);
    ASSERT_EQ(j0["levels"].size(), 1u);
    ASSERT_EQ(j0["levels"][0]["vertices"].size(), 1u);

    const auto d = build_diagram({Group::sym, 4}, Module::perm, HalfLevel::integer(2));
    const auto j = nlohmann::json::parse(export_diagram(d, ExportFormat::json));
    EXPECT_EQ(j["pair"], "S:4");
    EXPECT_EQ(j["module"], "perm");
    ASSERT_EQ(j["levels"].size(), 5u);
    const auto& l32 = j["levels"][3];
    EXPECT_EQ(l32["level"], "3/2");
    EXPECT_EQ(l32["vertices"][0]["label"], "3");
    EXPECT_EQ(l32["vertices"][0]["count"], "2");
    EXPECT_EQ(l32["squareSum"], "5");
    EXPECT_EQ(j["levels"][1]["edges"][0]["from"], "4");
    EXPECT_EQ(j["levels"][1]["edges"][0]["to"], "3");
    for (const auto& level : j["levels"]) {
        for (const auto& v : level["vertices"]) {
            EXPECT_TRUE(v["count"].is_string());
        }
    }
}

TEST(Export, DotStructure)
{
    const auto d = build_diagram({Group::alt, 5}, Module::refl, HalfLevel::integer(3));
    const std::string dot = to_dot(d);
    std::size_t vertices = 0;
    std::size_t edges = 0;
    for (const auto& row : d.rows()) {
        vertices += row.vertices.size();
        edges += row.edges.size();
    }
    const std::regex node(R"(^\s+v\d+_\d+ \[label=)");
    const std::regex edge(R"(^\s+v\d+_\d+ -> v\d+_\d+)");
    const std::regex cluster(R"(subgraph cluster_\d+)");
    std::size_t seen_nodes = 0;
    std::size_t seen_edges = 0;
    std::size_t seen_clusters = 0;
    std::istringstream in(dot);
    for (std::string line; std::getline(in, line);) {
        seen_nodes += std::regex_search(line, node) ? 1 : 0;
        seen_edges += std::regex_search(line, edge) ? 1 : 0;
        seen_clusters += std::regex_search(line, cluster) ? 1 : 0;
    }
    EXPECT_EQ(seen_nodes, vertices);
    EXPECT_EQ(seen_edges, edges);
    EXPECT_EQ(seen_clusters, d.rows().size());
    EXPECT_EQ(dot, to_dot(build_diagram({Group::alt, 5}, Module::refl, HalfLevel::integer(3))));
}

TEST(Export, UnknownFormat)
{
    try {
        parse_export_format("svg");
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::unknown_format);
    }
}
