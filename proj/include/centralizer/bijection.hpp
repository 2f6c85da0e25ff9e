#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "centralizer/bratteli.hpp"
#include "centralizer/error.hpp"
#include "centralizer/young.hpp"

namespace centralizer {

/// A set partition of {1,...,k}, blocks sorted internally and by minimum.
class SetPartition {
public:
    SetPartition() = default;

    explicit SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks))
    {
        std::vector<int> all;
        for (auto& block : blocks_) {
            if (block.empty()) {
                throw error(errc::domain_error, "set partition blocks must be nonempty");
            }
            std::sort(block.begin(), block.end());
            all.insert(all.end(), block.begin(), block.end());
        }
        std::sort(all.begin(), all.end());
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (all[i] != static_cast<int>(i) + 1) {
                throw error(errc::domain_error, "set partition blocks must cover 1..k exactly once");
            }
        }
        std::sort(blocks_.begin(), blocks_.end());
    }

    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
    int ground_size() const noexcept
    {
        int k = 0;
        for (const auto& block : blocks_) {
            k += static_cast<int>(block.size());
        }
        return k;
    }
    int block_count() const noexcept { return static_cast<int>(blocks_.size()); }

    /// Largest element of every block, ascending.
    std::vector<int> maxima() const
    {
        std::vector<int> out;
        for (const auto& block : blocks_) {
            out.push_back(block.back());
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool operator==(const SetPartition&) const = default;

private:
    std::vector<std::vector<int>> blocks_;
};

/// "1,3|2"; the partition of the empty set is "empty".
inline std::string to_string(const SetPartition& p)
{
    if (p.blocks().empty()) {
        return "empty";
    }
    std::string out;
    for (std::size_t b = 0; b < p.blocks().size(); ++b) {
        if (b > 0) {
            out += '|';
        }
        for (std::size_t i = 0; i < p.blocks()[b].size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += std::to_string(p.blocks()[b][i]);
        }
    }
    return out;
}

inline SetPartition parse_set_partition(std::string_view text)
{
    if (text == "empty" || text.empty()) {
        return {};
    }
    std::vector<std::vector<int>> blocks;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t bar = std::min(text.find('|', pos), text.size());
        blocks.push_back(detail::parse_int_list(text.substr(pos, bar - pos), "set partition"));
        pos = bar + 1;
    }
    try {
        return SetPartition(std::move(blocks));
    } catch (const error& e) {
        throw error(errc::parse_error, e.what());
    }
}

/// The shapes [n], [n-1], ..., lambda^(k) of a Bratteli path for (S_n, S_{n-1}).
class VacillatingTableau {
public:
    explicit VacillatingTableau(std::vector<Partition> shapes) : shapes_(std::move(shapes)) {}

    const std::vector<Partition>& shapes() const noexcept { return shapes_; }

    /// Number of completed integer steps.
    int k() const noexcept { return static_cast<int>(shapes_.size()) / 2; }

    const Partition& at_twice(int twice) const { return shapes_.at(static_cast<std::size_t>(twice)); }

    bool operator==(const VacillatingTableau&) const = default;

private:
    std::vector<Partition> shapes_;
};

namespace detail {

/// The single box of outer / inner when inner is outer minus one box.
inline std::optional<Box> removed_box(const Partition& outer, const Partition& inner)
{
    if (outer.size() != inner.size() + 1 || !contains(outer, inner)) {
        return std::nullopt;
    }
    for (int r = 0; r < outer.length(); ++r) {
        if (outer[r] != inner[r]) {
            return Box{r + 1, outer[r]};
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Checks the path conditions: starts [n], [n-1], alternately removes and
/// adds one box, ends on an integer level.
inline void validate(const VacillatingTableau& vt, int n)
{
    const auto& s = vt.shapes();
    auto fail = [](const std::string& why) { throw error(errc::malformed_path, why); };
    if (s.empty() || s.size() % 2 == 0) {
        fail("a path has 2k+1 shapes");
    }
    if (s[0] != row_partition(n)) {
        fail("a path starts at [" + std::to_string(n) + "]");
    }
    for (std::size_t i = 1; i < s.size(); ++i) {
        const bool removing = i % 2 == 1;
        const auto box = removing ? detail::removed_box(s[i - 1], s[i]) : detail::removed_box(s[i], s[i - 1]);
        if (!box) {
            fail("step " + std::to_string(i) + " from " + to_string(s[i - 1]) + " to " + to_string(s[i]) +
                 (removing ? " does not remove one box" : " does not add one box"));
        }
    }
}

/// RSK row insertion: b bumps the leftmost entry strictly greater than it.
inline std::pair<SemistandardTableau, Box> row_insert(const SemistandardTableau& tableau, int b)
{
    auto rows = tableau.rows();
    int value = b;
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({value});
            return {SemistandardTableau(std::move(rows)), Box{static_cast<int>(r) + 1, 1}};
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), value);
        if (it == row.end()) {
            row.push_back(value);
            return {SemistandardTableau(std::move(rows)), Box{static_cast<int>(r) + 1, static_cast<int>(row.size())}};
        }
        std::swap(*it, value);
    }
}

/// Inverse of row_insert through a removable corner: the corner's entry
/// reverse-bumps the rightmost strictly smaller entry of each row above.
inline std::pair<SemistandardTableau, int> row_uninsert(const SemistandardTableau& tableau, Box corner)
{
    auto rows = tableau.rows();
    const auto r0 = static_cast<std::size_t>(corner.row - 1);
    const bool removable = corner.row >= 1 && r0 < rows.size() && corner.col == static_cast<int>(rows[r0].size()) &&
                           (r0 + 1 == rows.size() || rows[r0 + 1].size() < rows[r0].size());
    if (!removable) {
        throw error(errc::not_a_corner, "(" + std::to_string(corner.row) + "," + std::to_string(corner.col) +
                                            ") is not a removable corner");
    }
    int value = rows[r0].back();
    rows[r0].pop_back();
    for (std::size_t r = r0; r-- > 0;) {
        auto& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), value);
        --it; // the first row entry is below value since columns strictly increase
        std::swap(*it, value);
    }
    return {SemistandardTableau(std::move(rows)), value};
}

struct PathPair {
    SetPartition partition;
    SemistandardTableau tableau;

    bool operator==(const PathPair&) const = default;
};

/// Bratteli path to (set partition of {1..k}, tableau with zeros and the
/// block maxima).
inline PathPair path_to_pair(const VacillatingTableau& vt, int n)
{
    validate(vt, n);
    SemistandardTableau tableau(std::vector<std::vector<int>>{std::vector<int>(static_cast<std::size_t>(n), 0)});
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= vt.k(); ++i) {
        const auto& before = vt.at_twice(2 * i - 2);
        const auto& middle = vt.at_twice(2 * i - 1);
        const auto& after = vt.at_twice(2 * i);
        auto [smaller, b] = row_uninsert(tableau, *detail::removed_box(before, middle));
        if (b == 0) {
            blocks.push_back({i});
        } else {
            auto block = std::find_if(blocks.begin(), blocks.end(), [&](const auto& bl) { return bl.back() == b; });
            block->push_back(i);
        }
        const Box added = *detail::removed_box(after, middle);
        auto rows = smaller.rows();
        if (added.row > static_cast<int>(rows.size())) {
            rows.emplace_back();
        }
        rows[static_cast<std::size_t>(added.row - 1)].push_back(i);
        tableau = SemistandardTableau(std::move(rows));
    }
    return {SetPartition(std::move(blocks)), std::move(tableau)};
}

/// Inverse of path_to_pair.
inline VacillatingTableau pair_to_path(const SetPartition& partition, const SemistandardTableau& tableau, int n)
{
    const int k = partition.ground_size();
    const int t = partition.block_count();
    const Partition shape = tableau.shape();
    if (shape.size() != n) {
        throw error(errc::incompatible_pair, "tableau has " + std::to_string(shape.size()) + " boxes, expected " +
                                                 std::to_string(n));
    }
    std::vector<int> positives;
    for (const auto& row : tableau.rows()) {
        for (int x : row) {
            if (x > 0) {
                positives.push_back(x);
            }
        }
    }
    std::sort(positives.begin(), positives.end());
    if (positives != partition.maxima() || tableau.count(0) != n - t) {
        throw error(errc::incompatible_pair, "tableau entries must be " + std::to_string(n - t) +
                                                 " zeros and the block maxima of " + to_string(partition));
    }

    std::vector<Partition> shapes{shape};
    auto blocks = partition.blocks();
    auto rows = tableau.rows();
    for (int i = k; i >= 1; --i) {
        // i is the largest entry, so it sits at the end of its row with
        // nothing below it.
        for (auto& row : rows) {
            if (!row.empty() && row.back() == i) {
                row.pop_back();
                break;
            }
        }
        while (!rows.empty() && rows.back().empty()) {
            rows.pop_back();
        }
        SemistandardTableau removed(rows);
        shapes.push_back(removed.shape());

        auto block = std::find_if(blocks.begin(), blocks.end(), [&](const auto& bl) { return bl.back() == i; });
        block->pop_back();
        const int b = block->empty() ? 0 : block->back();
        if (block->empty()) {
            blocks.erase(block);
        }
        auto inserted = row_insert(removed, b).first;
        shapes.push_back(inserted.shape());
        rows = inserted.rows();
    }
    std::reverse(shapes.begin(), shapes.end());
    VacillatingTableau vt(std::move(shapes));
    validate(vt, n);
    return vt;
}

inline VacillatingTableau pair_to_path(const PathPair& pair, int n)
{
    return pair_to_path(pair.partition, pair.tableau, n);
}

/// Bratteli paths of a symmetric-group diagram as vacillating tableaux.
inline std::vector<VacillatingTableau> enumerate_paths(const BratteliDiagram& diagram, HalfLevel level,
                                                       const Partition& target)
{
    if (diagram.pair().group != Group::sym) {
        throw error(errc::invalid_pair, "vacillating tableaux are defined for symmetric-group diagrams");
    }
    std::vector<VacillatingTableau> out;
    for (const auto& path : enumerate_label_paths(diagram, level, Label(target))) {
        std::vector<Partition> shapes;
        shapes.reserve(path.size());
        for (const auto& label : path) {
            shapes.push_back(std::get<Partition>(label));
        }
        out.emplace_back(std::move(shapes));
    }
    return out;
}

// ---- JSON -----------------------------------------------------------------

/// {"path": [[4],[3],[3,1],...]}
inline nlohmann::json path_to_json(const VacillatingTableau& vt)
{
    nlohmann::json shapes = nlohmann::json::array();
    for (const auto& shape : vt.shapes()) {
        shapes.push_back(shape.parts());
    }
    return {{"path", std::move(shapes)}};
}

/// {"setPartition": [[1,3],[2]], "tableau": [[0,0],[2,3]]}
inline nlohmann::json pair_to_json(const PathPair& pair)
{
    return {{"setPartition", pair.partition.blocks()}, {"tableau", pair.tableau.rows()}};
}

inline VacillatingTableau path_from_json(const nlohmann::json& doc)
{
    try {
        std::vector<Partition> shapes;
        for (const auto& shape : doc.at("path")) {
            shapes.emplace_back(shape.get<std::vector<int>>());
        }
        return VacillatingTableau(std::move(shapes));
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::parse_error, std::string("path JSON: ") + e.what());
    } catch (const error& e) {
        throw error(errc::malformed_path, e.what());
    }
}

inline PathPair pair_from_json(const nlohmann::json& doc)
{
    std::vector<std::vector<int>> blocks;
    std::vector<std::vector<int>> rows;
    try {
        blocks = doc.at("setPartition").get<std::vector<std::vector<int>>>();
        rows = doc.at("tableau").get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::parse_error, std::string("pair JSON: ") + e.what());
    }
    try {
        return {SetPartition(std::move(blocks)), SemistandardTableau(std::move(rows))};
    } catch (const error& e) {
        throw error(errc::incompatible_pair, e.what());
    }
}

} // namespace centralizer
