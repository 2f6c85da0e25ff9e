#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "centralizer/branch.hpp"
#include "centralizer/dims.hpp"
#include "centralizer/error.hpp"
#include "centralizer/young.hpp"

namespace centralizer {

/// (S_n, S_{n-1}) or (A_n, A_{n-1}).
struct GroupPair {
    Group group = Group::sym;
    int n = 2;

    bool operator==(const GroupPair&) const = default;
};

inline std::string to_string(const GroupPair& pair)
{
    return std::string(pair.group == Group::sym ? "S" : "A") + ":" + std::to_string(pair.n);
}

/// "S:4" or "A:6".
inline GroupPair parse_group_pair(std::string_view text)
{
    if (text.size() < 3 || text[1] != ':' || (text[0] != 'S' && text[0] != 'A')) {
        throw error(errc::parse_error, "expected S:<n> or A:<n>, got \"" + std::string(text) + "\"");
    }
    const auto digits = text.substr(2);
    if (digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string_view::npos) {
        throw error(errc::parse_error, "expected S:<n> or A:<n>, got \"" + std::string(text) + "\"");
    }
    return {text[0] == 'S' ? Group::sym : Group::alt, std::stoi(std::string(digits))};
}

struct Vertex {
    HalfLevel level;
    Label label;
    Nat count;
};

/// Joins vertex `from` of the previous row to vertex `to` of this row
/// (indices into the rows' vertex lists).
struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    int multiplicity = 1;
};

struct Row {
    HalfLevel level;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges; // into this row; empty for level 0
    Nat square_sum;

    std::optional<std::size_t> find(const Label& label) const
    {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (vertices[i].label == label) {
                return i;
            }
        }
        return std::nullopt;
    }
};

/// Restriction-induction Bratteli diagram. Immutable once built.
class BratteliDiagram {
public:
    BratteliDiagram(GroupPair pair, Module module, std::vector<Row> rows)
        : pair_(pair), module_(module), rows_(std::move(rows))
    {
    }

    const GroupPair& pair() const noexcept { return pair_; }
    Module module() const noexcept { return module_; }
    HalfLevel max_level() const { return rows_.back().level; }
    const std::vector<Row>& rows() const noexcept { return rows_; }

    const Row& row(HalfLevel level) const
    {
        if (level > max_level()) {
            throw error(errc::level_out_of_range,
                        "level " + to_string(level) + " exceeds the diagram's " + to_string(max_level()));
        }
        return rows_[static_cast<std::size_t>(level.twice())];
    }

    Context context(HalfLevel level) const { return {pair_.group, pair_.n, module_, level}; }

private:
    GroupPair pair_;
    Module module_;
    std::vector<Row> rows_;
};

namespace detail {

/// Labels at the next level joined to `label` by one restriction or
/// induction step, with multiplicities.
inline std::map<Label, int, display_order> branch_down(const Label& label, bool to_half, int n)
{
    std::map<Label, int, display_order> out;
    if (const auto* lambda = std::get_if<Partition>(&label)) {
        for (auto& mu : to_half ? restrict_sym(*lambda) : induce_sym(*lambda, n)) {
            ++out[Label(std::move(mu))];
        }
    } else {
        const auto& alt = std::get<AltLabel>(label);
        for (auto& mu : to_half ? restrict_alt(alt) : induce_alt(alt, n)) {
            ++out[Label(std::move(mu))];
        }
    }
    return out;
}

} // namespace detail

/// Builds levels 0, 1/2, ..., max_level. Perm counts are pure Pascal sums;
/// Refl integer levels subtract the same label's count two levels up.
inline BratteliDiagram build_diagram(GroupPair pair, Module module, HalfLevel max_level)
{
    const int min_n = pair.group == Group::sym ? 2 : 4;
    if (pair.n < min_n) {
        throw error(errc::invalid_pair,
                    to_string(pair) + ": need n >= " + std::to_string(min_n) + " for this group pair");
    }
    const int n = pair.n;
    std::vector<Row> rows;
    Row root;
    root.level = HalfLevel(0);
    root.vertices.push_back(
        {root.level, pair.group == Group::sym ? Label(row_partition(n)) : Label(AltLabel::of_pair(row_partition(n))), 1});
    root.square_sum = 1;
    rows.push_back(std::move(root));

    while (rows.back().level < max_level) {
        const Row& above = rows.back();
        Row next;
        next.level = above.level.next();
        const bool to_half = next.level.is_half();

        std::map<Label, Nat, display_order> counts;
        std::vector<std::tuple<std::size_t, Label, int>> links;
        for (std::size_t i = 0; i < above.vertices.size(); ++i) {
            for (const auto& [label, mult] : detail::branch_down(above.vertices[i].label, to_half, n)) {
                counts[label] += above.vertices[i].count * mult;
                links.emplace_back(i, label, mult);
            }
        }
        if (module == Module::refl && !to_half) {
            const Row& two_up = rows[rows.size() - 2];
            for (auto& [label, count] : counts) {
                if (auto j = two_up.find(label)) {
                    count -= two_up.vertices[*j].count;
                }
                if (count < 0) {
                    throw error(errc::negative_count, "negative path count at " + to_string(label));
                }
            }
        }
        for (auto& [label, count] : counts) {
            next.square_sum += count * count;
            next.vertices.push_back({next.level, label, std::move(count)});
        }
        for (const auto& [from, label, mult] : links) {
            next.edges.push_back({from, *next.find(label), mult});
        }
        std::sort(next.edges.begin(), next.edges.end(),
                  [](const Edge& a, const Edge& b) { return std::pair(a.from, a.to) < std::pair(b.from, b.to); });
        rows.push_back(std::move(next));
    }
    return BratteliDiagram(pair, module, std::move(rows));
}

inline Nat level_square_sum(const BratteliDiagram& diagram, HalfLevel level)
{
    return diagram.row(level).square_sum;
}

/// Every path from the root to `target` at `level`, as label sequences of
/// length 2*level + 1.
inline std::vector<std::vector<Label>> enumerate_label_paths(const BratteliDiagram& diagram, HalfLevel level,
                                                             const Label& target)
{
    const Row& last = diagram.row(level);
    const auto index = last.find(target);
    if (!index) {
        throw error(errc::vertex_not_found, to_string(target) + " is not a vertex at level " + to_string(level));
    }
    const auto& rows = diagram.rows();
    const std::size_t depth = static_cast<std::size_t>(level.twice());
    std::vector<std::vector<Label>> paths;
    std::vector<std::size_t> stack(depth + 1);
    // Walk edges backwards from the target; each completed walk is one path
    // per unit of edge multiplicity.
    auto walk = [&](auto&& self, std::size_t r, std::size_t v, std::size_t weight) -> void {
        stack[r] = v;
        if (r == 0) {
            std::vector<Label> path;
            path.reserve(depth + 1);
            for (std::size_t i = 0; i <= depth; ++i) {
                path.push_back(rows[i].vertices[stack[i]].label);
            }
            for (std::size_t w = 0; w < weight; ++w) {
                paths.push_back(path);
            }
            return;
        }
        for (const auto& edge : rows[r].edges) {
            if (edge.to == v) {
                self(self, r - 1, edge.from, weight * static_cast<std::size_t>(edge.multiplicity));
            }
        }
    };
    walk(walk, depth, *index, 1);
    std::reverse(paths.begin(), paths.end());
    return paths;
}

// ---- export ---------------------------------------------------------------

enum class ExportFormat { text, json, dot };

inline ExportFormat parse_export_format(std::string_view name)
{
    if (name == "text") {
        return ExportFormat::text;
    }
    if (name == "json") {
        return ExportFormat::json;
    }
    if (name == "dot") {
        return ExportFormat::dot;
    }
    throw error(errc::unknown_format, "unknown diagram format \"" + std::string(name) + "\"");
}

/// One line per level: "l=3/2  [3]:2 [2,1]:1 | 5".
inline std::string to_text(const BratteliDiagram& diagram)
{
    std::size_t width = 0;
    for (const auto& row : diagram.rows()) {
        width = std::max(width, to_string(row.level).size());
    }
    std::ostringstream out;
    for (const auto& row : diagram.rows()) {
        const std::string level = to_string(row.level);
        out << "l=" << level << std::string(width - level.size() + 2, ' ');
        for (const auto& v : row.vertices) {
            out << '[' << to_string(base_of(v.label)) << ']';
            if (const auto* alt = std::get_if<AltLabel>(&v.label); alt != nullptr && alt->is_split()) {
                out << (alt->sign() == Sign::plus ? '+' : '-');
            }
            out << ':' << v.count << ' ';
        }
        out << "| " << row.square_sum << '\n';
    }
    return out.str();
}

inline nlohmann::json to_json(const BratteliDiagram& diagram)
{
    nlohmann::json levels = nlohmann::json::array();
    const auto& rows = diagram.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Row& row = rows[r];
        nlohmann::json vertices = nlohmann::json::array();
        for (const auto& v : row.vertices) {
            vertices.push_back({{"label", to_string(v.label)}, {"count", v.count.str()}});
        }
        nlohmann::json edges = nlohmann::json::array();
        for (const auto& e : row.edges) {
            nlohmann::json edge = {{"from", to_string(rows[r - 1].vertices[e.from].label)},
                                   {"to", to_string(row.vertices[e.to].label)}};
            if (e.multiplicity != 1) {
                edge["multiplicity"] = e.multiplicity;
            }
            edges.push_back(std::move(edge));
        }
        levels.push_back({{"level", to_string(row.level)},
                          {"vertices", std::move(vertices)},
                          {"edges", std::move(edges)},
                          {"squareSum", row.square_sum.str()}});
    }
    return {{"pair", to_string(diagram.pair())}, {"module", to_string(diagram.module())}, {"levels", std::move(levels)}};
}

/// Graphviz digraph with one cluster per level; node ids are "v<2l>_<i>".
inline std::string to_dot(const BratteliDiagram& diagram)
{
    std::ostringstream out;
    const auto& rows = diagram.rows();
    auto id = [](std::size_t r, std::size_t i) { return "v" + std::to_string(r) + "_" + std::to_string(i); };
    out << "digraph bratteli {\n";
    out << "  label=\"" << to_string(diagram.pair()) << " " << to_string(diagram.module()) << "\";\n";
    out << "  node [shape=plaintext];\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out << "  subgraph cluster_" << r << " {\n";
        out << "    label=\"l=" << to_string(rows[r].level) << "\";\n";
        for (std::size_t i = 0; i < rows[r].vertices.size(); ++i) {
            const auto& v = rows[r].vertices[i];
            out << "    " << id(r, i) << " [label=\"" << to_string(v.label) << "\\n" << v.count << "\"];\n";
        }
        out << "  }\n";
    }
    for (std::size_t r = 1; r < rows.size(); ++r) {
        for (const auto& e : rows[r].edges) {
            out << "  " << id(r - 1, e.from) << " -> " << id(r, e.to);
            if (e.multiplicity != 1) {
                out << " [label=\"" << e.multiplicity << "\"]";
            }
            out << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

inline std::string export_diagram(const BratteliDiagram& diagram, ExportFormat format)
{
    switch (format) {
    case ExportFormat::text:
        return to_text(diagram);
    case ExportFormat::json:
        return to_json(diagram).dump(2) + "\n";
    case ExportFormat::dot:
        return to_dot(diagram);
    }
    throw error(errc::unknown_format, "unknown diagram format");
}

} // namespace centralizer
