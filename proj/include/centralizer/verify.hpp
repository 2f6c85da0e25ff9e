#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "centralizer/bijection.hpp"
#include "centralizer/bratteli.hpp"
#include "centralizer/dims.hpp"
#include "centralizer/oracle.hpp"

namespace centralizer {

/// A reference Bratteli diagram: one "label:count ..." string per level
/// (0, 1/2, 1, ...) and the square sums of the rows.
struct ReferenceTable {
    const char* name;
    GroupPair pair;
    Module module;
    std::vector<std::string> rows;
    std::vector<long> totals;
};

inline const std::vector<ReferenceTable>& reference_tables()
{
    static const std::vector<ReferenceTable> tables = {
        {"S4 perm",
         {Group::sym, 4},
         Module::perm,
         {"4:1", "3:1", "4:1 3,1:1", "3:2 2,1:1", "4:2 3,1:3 2,2:1 2,1,1:1", "3:5 2,1:5 1,1,1:1",
          "4:5 3,1:10 2,2:5 2,1,1:6 1,1,1,1:1", "3:15 2,1:21 1,1,1:7", "4:15 3,1:36 2,2:21 2,1,1:28 1,1,1,1:7"},
         {1, 1, 2, 5, 15, 51, 187, 715, 2795}},
        {"A4 perm",
         {Group::alt, 4},
         Module::perm,
         {"4:1", "3:1", "4:1 3,1:1", "3:2 2,1+:1 2,1-:1", "4:2 3,1:4 2,2+:1 2,2-:1", "3:6 2,1+:5 2,1-:5",
          "4:6 3,1:16 2,2+:5 2,2-:5", "3:22 2,1+:21 2,1-:21"},
         {1, 1, 2, 6, 22, 86, 342, 1366}},
        {"S6 perm",
         {Group::sym, 6},
         Module::perm,
         {"6:1", "5:1", "6:1 5,1:1", "5:2 4,1:1", "6:2 5,1:3 4,2:1 4,1,1:1", "5:5 4,1:5 3,2:1 3,1,1:1",
          "6:5 5,1:10 4,2:6 4,1,1:6 3,3:1 3,2,1:2 3,1,1,1:1", "5:15 4,1:22 3,2:9 3,1,1:9 2,2,1:2 2,1,1,1:1",
          "6:15 5,1:37 4,2:31 4,1,1:31 3,3:9 3,2,1:20 3,1,1,1:10 2,2,2:2 2,2,1,1:3 2,1,1,1,1:1"},
         {1, 1, 2, 5, 15, 52, 203, 876, 4111}},
        {"S6 refl",
         {Group::sym, 6},
         Module::refl,
         {"6:1", "5:1", "6:0 5,1:1", "5:1 4,1:1", "6:1 5,1:1 4,2:1 4,1,1:1", "5:2 4,1:3 3,2:1 3,1,1:1",
          "6:1 5,1:4 4,2:3 4,1,1:3 3,3:1 3,2,1:2 3,1,1,1:1", "5:5 4,1:10 3,2:6 3,1,1:6 2,2,1:2 2,1,1,1:1",
          "6:4 5,1:11 4,2:13 4,1,1:13 3,3:5 3,2,1:12 3,1,1,1:6 2,2,2:2 2,2,1,1:3 2,1,1,1,1:1"},
         {1, 1, 1, 2, 4, 15, 41, 202, 694}},
        {"A6 perm",
         {Group::alt, 6},
         Module::perm,
         {"6:1", "5:1", "6:1 5,1:1", "5:2 4,1:1", "6:2 5,1:3 4,2:1 4,1,1:1", "5:5 4,1:5 3,2:1 3,1,1+:1 3,1,1-:1",
          "6:5 5,1:10 4,2:6 4,1,1:7 3,3:1 3,2,1+:2 3,2,1-:2", "5:15 4,1:23 3,2:11 3,1,1+:9 3,1,1-:9",
          "6:15 5,1:38 4,2:34 4,1,1:41 3,3:11 3,2,1+:20 3,2,1-:20"},
         {1, 1, 2, 5, 15, 53, 219, 1037, 5427}},
        {"A6 refl",
         {Group::alt, 6},
         Module::refl,
         {"6:1", "5:1", "6:0 5,1:1", "5:1 4,1:1", "6:1 5,1:1 4,2:1 4,1,1:1", "5:2 4,1:3 3,2:1 3,1,1+:1 3,1,1-:1",
          "6:1 5,1:4 4,2:3 4,1,1:4 3,3:1 3,2,1+:2 3,2,1-:2", "5:5 4,1:11 3,2:8 3,1,1+:6 3,1,1-:6",
          "6:4 5,1:12 4,2:16 4,1,1:19 3,3:7 3,2,1+:12 3,2,1-:12"},
         {1, 1, 1, 2, 4, 16, 51, 282, 1114}},
    };
    return tables;
}

/// The five paths to [2,2] at level 3 of the (S_4, S_3) diagram with their
/// (set partition, tableau) pairs.
struct ReferencePath {
    std::vector<Partition> shapes;
    const char* partition;
    std::vector<std::vector<int>> tableau;
};

inline const std::vector<ReferencePath>& reference_paths()
{
    static const std::vector<ReferencePath> paths = {
        {{{4}, {3}, {4}, {3}, {3, 1}, {2, 1}, {2, 2}}, "1,2|3", {{0, 0}, {2, 3}}},
        {{{4}, {3}, {3, 1}, {3}, {3, 1}, {2, 1}, {2, 2}}, "1,3|2", {{0, 0}, {2, 3}}},
        {{{4}, {3}, {3, 1}, {2, 1}, {3, 1}, {2, 1}, {2, 2}}, "1|2,3", {{0, 0}, {1, 3}}},
        {{{4}, {3}, {3, 1}, {2, 1}, {2, 2}, {2, 1}, {2, 2}}, "1|2|3", {{0, 2}, {1, 3}}},
        {{{4}, {3}, {3, 1}, {2, 1}, {2, 1, 1}, {2, 1}, {2, 2}}, "1|2|3", {{0, 1}, {2, 3}}},
    };
    return paths;
}

struct SuiteResult {
    explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what)
    {
        if (ok) {
            ++passed;
        } else {
            ++failed;
            failures.push_back(what);
        }
    }
};

struct Report {
    std::vector<SuiteResult> suites;

    bool ok() const
    {
        return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failed == 0; });
    }
};

inline std::string to_text(const Report& report)
{
    std::ostringstream out;
    for (const auto& s : report.suites) {
        out << (s.failed == 0 ? "PASS " : "FAIL ") << s.name << ": " << s.passed << " passed, " << s.failed
            << " failed\n";
        const std::size_t shown = std::min<std::size_t>(s.failures.size(), 20);
        for (std::size_t i = 0; i < shown; ++i) {
            out << "  " << s.failures[i] << '\n';
        }
        if (s.failures.size() > shown) {
            out << "  ... " << s.failures.size() - shown << " more\n";
        }
    }
    out << (report.ok() ? "all checks passed\n" : "verification FAILED\n");
    return out.str();
}

namespace detail {

inline std::string row_string(const Row& row)
{
    std::string out;
    for (const auto& v : row.vertices) {
        if (!out.empty()) {
            out += ' ';
        }
        out += to_string(v.label) + ":" + v.count.str();
    }
    return out;
}

/// Runs `body`, recording an exception as a failed check.
template <typename Body>
void guarded(SuiteResult& suite, const std::string& what, Body body)
{
    try {
        body();
    } catch (const std::exception& e) {
        suite.check(false, what + ": " + e.what());
    }
}

inline std::string describe(const Context& ctx)
{
    return std::string(ctx.group == Group::sym ? "S" : "A") + std::to_string(ctx.n) + " " + to_string(ctx.module) +
           " l=" + to_string(ctx.level);
}

} // namespace detail

inline SuiteResult verify_golden()
{
    SuiteResult suite{"golden"};
    for (const auto& table : reference_tables()) {
        detail::guarded(suite, table.name, [&] {
            const auto diagram =
                build_diagram(table.pair, table.module, HalfLevel(static_cast<int>(table.rows.size()) - 1));
            for (std::size_t r = 0; r < table.rows.size(); ++r) {
                const Row& row = diagram.rows()[r];
                const std::string where = std::string(table.name) + " l=" + to_string(row.level);
                const std::string got = detail::row_string(row);
                suite.check(got == table.rows[r], where + ": expected \"" + table.rows[r] + "\", got \"" + got + "\"");
                suite.check(row.square_sum == table.totals[r], where + ": expected total " +
                                                                   std::to_string(table.totals[r]) + ", got " +
                                                                   row.square_sum.str());
            }
        });
    }
    detail::guarded(suite, "worked bijection", [&] {
        const auto diagram = build_diagram({Group::sym, 4}, Module::perm, HalfLevel::integer(3));
        const auto paths = enumerate_paths(diagram, HalfLevel::integer(3), Partition{2, 2});
        suite.check(paths.size() == reference_paths().size(), "worked bijection: expected 5 paths to [2,2]");
        for (const auto& ref : reference_paths()) {
            const VacillatingTableau vt(ref.shapes);
            const PathPair expected{parse_set_partition(ref.partition), SemistandardTableau(ref.tableau)};
            const std::string where = std::string("worked bijection ") + ref.partition;
            suite.check(std::find(paths.begin(), paths.end(), vt) != paths.end(), where + ": path not enumerated");
            suite.check(path_to_pair(vt, 4) == expected, where + ": path maps to the wrong pair");
            suite.check(pair_to_path(expected, 4) == vt, where + ": pair maps to the wrong path");
        }
    });
    return suite;
}

/// Dimension formulas against class-function inner products, and the Kostka
/// sums against direct enumeration of pairs.
inline SuiteResult verify_oracle(int n_max, int k_max)
{
    SuiteResult suite{"oracle"};
    for (int n = 2; n <= n_max; ++n) {
        for (int twice = 0; twice <= 2 * k_max; ++twice) {
            for (Group group : {Group::sym, Group::alt}) {
                for (Module module : {Module::perm, Module::refl}) {
                    const Context ctx{group, n, module, HalfLevel(twice)};
                    if (group == Group::alt && ctx.label_size() < 2) {
                        continue;
                    }
                    for (const auto& label : labels_for(ctx)) {
                        const std::string where = detail::describe(ctx) + " " + to_string(label);
                        detail::guarded(suite, where, [&] {
                            const Nat formula = multiplicity(ctx, label);
                            const Nat oracle = multiplicity_oracle(ctx, label);
                            suite.check(formula == oracle,
                                        where + ": formula " + formula.str() + ", oracle " + oracle.str());
                        });
                    }
                }
            }
        }
    }
    for (int n = 1; n <= std::min(n_max, 5); ++n) {
        for (int k = 0; k <= k_max; ++k) {
            for (const auto& lambda : partitions_of(n)) {
                const std::string where = "pairs n=" + std::to_string(n) + " k=" + std::to_string(k) + " " +
                                          to_string(lambda);
                detail::guarded(suite, where, [&] {
                    const Nat formula = dim_z(n, k, lambda);
                    const Nat counted = pair_count_oracle(n, k, lambda);
                    suite.check(formula == counted, where + ": formula " + formula.str() + ", counted " + counted.str());
                });
            }
        }
    }
    return suite;
}

/// Diagram counts against the formulas, square sums against the algebra
/// dimension, the alternative closed forms, and path enumeration.
inline SuiteResult verify_properties(int n_max, int k_max)
{
    SuiteResult suite{"properties"};
    for (int n = 2; n <= n_max; ++n) {
        for (Group group : {Group::sym, Group::alt}) {
            if (group == Group::alt && n < 4) {
                continue;
            }
            for (Module module : {Module::perm, Module::refl}) {
                const GroupPair pair{group, n};
                detail::guarded(suite, to_string(pair) + " " + to_string(module), [&] {
                    const auto diagram = build_diagram(pair, module, HalfLevel::integer(k_max));
                    for (const auto& row : diagram.rows()) {
                        const Context ctx = diagram.context(row.level);
                        const std::string where = detail::describe(ctx);
                        suite.check(row.square_sum == dim_algebra(ctx), where + ": square sum differs from dim_algebra");
                        for (const auto& v : row.vertices) {
                            suite.check(v.count == multiplicity(ctx, v.label),
                                        where + " " + to_string(v.label) + ": count differs from the formula");
                            if (module == Module::perm && n <= 5 && row.level <= HalfLevel::integer(3)) {
                                const auto paths = enumerate_label_paths(diagram, row.level, v.label);
                                suite.check(v.count == paths.size(),
                                            where + " " + to_string(v.label) + ": path enumeration differs");
                            }
                        }
                    }
                });
            }
        }
        for (int k = 0; k <= k_max; ++k) {
            for (const auto& lambda : partitions_of(n)) {
                const std::string where = "forms n=" + std::to_string(n) + " k=" + std::to_string(k) + " " +
                                          to_string(lambda);
                detail::guarded(suite, where, [&] {
                    const Nat value = dim_z(n, k, lambda);
                    suite.check(value == forms::dim_z_kostka(n, k, lambda), where + ": Kostka form");
                    suite.check(value == forms::dim_z_skew(n, k, lambda), where + ": skew form");
                    suite.check(value == forms::dim_z_split(n, k, lambda), where + ": split form");
                    if (lambda[1] <= 2) {
                        suite.check(value == forms::dim_z_small_second_row(n, k, lambda), where + ": small-row form");
                    }
                });
            }
            for (const auto& mu : partitions_of(n - 1)) {
                const std::string where = "half forms n=" + std::to_string(n) + " k=" + std::to_string(k) + " " +
                                          to_string(mu);
                detail::guarded(suite, where, [&] {
                    const Nat value = dim_z_half(n, k, mu);
                    suite.check(value == forms::dim_z_half_kostka(n, k, mu), where + ": Kostka form");
                    suite.check(value == forms::dim_z_half_skew(n, k, mu), where + ": skew form");
                    suite.check(value == forms::dim_z_half_split(n, k, mu), where + ": split form");
                });
            }
        }
    }
    return suite;
}

/// Both directions of the path/pair correspondence on every path, and the
/// block-count refinement S(k,t) K_{lambda,[n-t,1^t]}.
inline SuiteResult verify_bijection(int n_max, int k_max)
{
    SuiteResult suite{"bijection"};
    for (int n = 2; n <= n_max; ++n) {
        const auto diagram = build_diagram({Group::sym, n}, Module::perm, HalfLevel::integer(k_max));
        for (int k = 0; k <= k_max; ++k) {
            const HalfLevel level = HalfLevel::integer(k);
            for (const auto& v : diagram.row(level).vertices) {
                const Partition& lambda = std::get<Partition>(v.label);
                const std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " " + to_string(lambda);
                detail::guarded(suite, where, [&] {
                    std::vector<Nat> by_blocks(static_cast<std::size_t>(n + 1), 0);
                    std::vector<PathPair> seen;
                    for (const auto& vt : enumerate_paths(diagram, level, lambda)) {
                        const PathPair pair = path_to_pair(vt, n);
                        suite.check(pair_to_path(pair, n) == vt, where + ": roundtrip fails");
                        suite.check(pair.tableau.shape() == lambda, where + ": pair shape differs from path end");
                        seen.push_back(pair);
                        ++by_blocks[static_cast<std::size_t>(pair.partition.block_count())];
                    }
                    for (std::size_t i = 0; i < seen.size(); ++i) {
                        for (std::size_t j = i + 1; j < seen.size(); ++j) {
                            suite.check(!(seen[i] == seen[j]), where + ": two paths give the same pair");
                        }
                    }
                    for (int t = 0; t <= n; ++t) {
                        suite.check(by_blocks[static_cast<std::size_t>(t)] ==
                                        stirling2(k, t) * kostka_hook_type(lambda, n, t),
                                    where + ": pairs with " + std::to_string(t) + " blocks");
                    }
                });
            }
        }
    }
    return suite;
}

enum class Scope { all, golden, oracle, properties, bijection };

inline Scope parse_scope(std::string_view name)
{
    if (name == "all") {
        return Scope::all;
    }
    if (name == "golden") {
        return Scope::golden;
    }
    if (name == "oracle") {
        return Scope::oracle;
    }
    if (name == "properties") {
        return Scope::properties;
    }
    if (name == "bijection") {
        return Scope::bijection;
    }
    throw error(errc::parse_error, "unknown verification scope \"" + std::string(name) + "\"");
}

inline Report verify(Scope scope, int n_max, int k_max)
{
    if (n_max < 2 || n_max > 10 || k_max < 0) {
        throw error(errc::domain_error, "verification needs 2 <= n-max <= 10 and k-max >= 0");
    }
    Report report;
    if (scope == Scope::all || scope == Scope::golden) {
        report.suites.push_back(verify_golden());
    }
    if (scope == Scope::all || scope == Scope::oracle) {
        report.suites.push_back(verify_oracle(n_max, k_max));
    }
    if (scope == Scope::all || scope == Scope::properties) {
        report.suites.push_back(verify_properties(n_max, k_max));
    }
    if (scope == Scope::all || scope == Scope::bijection) {
        report.suites.push_back(verify_bijection(n_max, k_max));
    }
    return report;
}

} // namespace centralizer
