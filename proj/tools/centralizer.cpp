#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "centralizer/centralizer.hpp"

namespace {

using namespace centralizer;

constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_semantic = 3;

Group parse_group(const std::string& text)
{
    if (text == "S" || text == "sym") {
        return Group::sym;
    }
    if (text == "A" || text == "alt") {
        return Group::alt;
    }
    throw error(errc::parse_error, "--group must be S or A");
}

Module parse_module(const std::string& text)
{
    if (text == "perm") {
        return Module::perm;
    }
    if (text == "refl") {
        return Module::refl;
    }
    throw error(errc::parse_error, "--module must be perm or refl");
}

Label parse_label(Group group, const std::string& text)
{
    if (group == Group::sym) {
        return parse_partition(text);
    }
    return parse_alt_label(text);
}

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) {
        throw error(errc::parse_error, "cannot read " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

nlohmann::json parse_json(const std::string& text)
{
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::parse_error, std::string("input is not JSON: ") + e.what());
    }
}

struct ContextFlags {
    std::string group = "S";
    std::string module = "perm";
    int n = 0;
    std::string level;

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--group", group, "S or A")->default_val("S");
        cmd->add_option("--module", module, "perm or refl")->default_val("perm");
        cmd->add_option("--n", n, "degree n")->required();
        cmd->add_option("--k", level, "level: 3, 7/2 or 3.5")->required();
    }

    Context context() const
    {
        const Context ctx{parse_group(group), n, parse_module(module), parse_level(level)};
        validate(ctx);
        return ctx;
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Centralizer algebras of symmetric and alternating groups on tensor powers"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "text, json, csv or dot")->default_val("text");

    ContextFlags dim_flags;
    std::string dim_label;
    auto* dim = app.add_subcommand("dim", "multiplicity of one irreducible (its centralizer-module dimension)");
    dim_flags.add_to(dim);
    dim->add_option("--lambda", dim_label, "label, e.g. 3,1 or 2,2+")->required();

    ContextFlags dec_flags;
    auto* dec = app.add_subcommand("decompose", "all irreducibles with their multiplicities");
    dec_flags.add_to(dec);

    std::string pair_text;
    std::string module_text = "perm";
    std::string levels_text;
    auto* brat = app.add_subcommand("bratteli", "restriction-induction Bratteli diagram");
    brat->add_option("--pair", pair_text, "S:<n> or A:<n>")->required();
    brat->add_option("--module", module_text, "perm or refl")->default_val("perm");
    brat->add_option("--levels", levels_text, "deepest level, e.g. 4 or 7/2")->required();

    std::string direction;
    int bij_n = 0;
    std::string input_path;
    auto* bij = app.add_subcommand("bijection", "vacillating tableau <-> (set partition, tableau)");
    bij->add_option("--direction", direction, "path-to-pair or pair-to-path")
        ->required()
        ->check(CLI::IsMember({"path-to-pair", "pair-to-path"}));
    bij->add_option("--n", bij_n, "degree n")->required();
    bij->add_option("--input", input_path, "JSON file; standard input if omitted");

    std::string scope_text = "all";
    int n_max = 6;
    int k_max = 4;
    auto* ver = app.add_subcommand("verify", "run the verification suites");
    ver->add_option("--scope", scope_text, "all, golden, oracle, properties or bijection")->default_val("all");
    ver->add_option("--n-max", n_max, "largest n")->default_val(6);
    ver->add_option("--k-max", k_max, "largest integer level")->default_val(4);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*dim) {
            const Context ctx = dim_flags.context();
            const Nat value = multiplicity(ctx, parse_label(ctx.group, dim_label));
            if (format == "json") {
                std::cout << nlohmann::json{{"dimension", value.str()}}.dump() << '\n';
            } else {
                std::cout << value << '\n';
            }
        } else if (*dec) {
            const Context ctx = dec_flags.context();
            const auto parts = decompose(ctx);
            if (format == "json") {
                nlohmann::json components = nlohmann::json::array();
                for (const auto& c : parts) {
                    components.push_back({{"label", to_string(c.label)}, {"multiplicity", c.multiplicity.str()}});
                }
                std::cout << nlohmann::json{{"level", to_string(ctx.level)}, {"components", components}}.dump(2)
                          << '\n';
            } else if (format == "csv") {
                std::cout << "label,multiplicity\n";
                for (const auto& c : parts) {
                    std::cout << '"' << to_string(c.label) << "\"," << c.multiplicity << '\n';
                }
            } else if (format == "text") {
                std::string line;
                for (const auto& c : parts) {
                    line += (line.empty() ? "" : "  ") + to_string(c.label) + ":" + c.multiplicity.str();
                }
                std::cout << line << '\n';
            } else {
                throw error(errc::unknown_format, "decompose supports text, json and csv");
            }
        } else if (*brat) {
            const auto kind = parse_export_format(format);
            const auto diagram = build_diagram(parse_group_pair(pair_text), parse_module(module_text),
                                               parse_level(levels_text));
            std::cout << export_diagram(diagram, kind);
        } else if (*bij) {
            const auto doc = parse_json(read_input(input_path));
            if (direction == "path-to-pair") {
                std::cout << pair_to_json(path_to_pair(path_from_json(doc), bij_n)).dump() << '\n';
            } else {
                std::cout << path_to_json(pair_to_path(pair_from_json(doc), bij_n)).dump() << '\n';
            }
        } else if (*ver) {
            const Report report = verify(parse_scope(scope_text), n_max, k_max);
            std::cout << to_text(report);
            return report.ok() ? 0 : exit_verify_failed;
        }
    } catch (const error& e) {
        std::cerr << e.what() << '\n';
        const bool usage = e.code() == errc::parse_error || e.code() == errc::unknown_format;
        return usage ? exit_usage : exit_semantic;
    }
    return 0;
}
