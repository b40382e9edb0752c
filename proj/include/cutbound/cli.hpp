#pragma once

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cutbound/graph_io.hpp"
#include "cutbound/suite.hpp"

namespace cutbound::cli {

enum ExitCode { ok = 0, verification_failed = 1, input_error = 2, internal_error = 3 };

enum class Format { table, jsonl };

struct RunConfig {
    std::string command;
    std::string input;
    std::vector<std::string> generator; // kind followed by its parameters
    std::uint64_t seed = 0;
    int trials = default_trials;
    std::optional<VertexId> root;
    bool best_roots = false;
    Format format = Format::table;
    VertexId max_n_override = 0;
};

namespace detail {

inline std::string fixed6(double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", value);
    return buffer;
}

inline WeightedGraph load_input(const RunConfig& config)
{
    const bool has_file = !config.input.empty(), has_generator = !config.generator.empty();
    require(has_file != has_generator, Errc::invalid_parameter, "give exactly one of --input or --generate");
    if (has_file)
        return load_graph_file(config.input);
    std::vector<std::string> params(config.generator.begin() + 1, config.generator.end());
    return generate(config.generator.front(), params);
}

inline SuiteOptions suite_options(const RunConfig& config)
{
    SuiteOptions o;
    o.root = config.root;
    o.sweep_all_roots = config.best_roots;
    o.trials = config.trials;
    o.seed = config.seed;
    return o;
}

inline Details graph_summary(const WeightedGraph& g)
{
    GraphStats s = stats(g);
    return { { "n", g.vertex_count() }, { "m", g.edge_count() }, { "total_weight", s.total_weight }, { "max_degree", s.max_degree },
        { "girth", s.girth == unbounded_girth ? Details(nullptr) : Details(s.girth) }, { "triangle_free", s.triangle_free },
        { "connected", s.connected } };
}

inline void print_graph_line(std::ostream& out, const WeightedGraph& g)
{
    GraphStats s = stats(g);
    out << "graph: n=" << g.vertex_count() << " m=" << g.edge_count() << " w=" << cutbound::detail::format_double(s.total_weight)
        << " max_degree=" << s.max_degree << " girth=" << (s.girth == unbounded_girth ? std::string("inf") : std::to_string(s.girth))
        << " triangle_free=" << (s.triangle_free ? "yes" : "no") << " connected=" << (s.connected ? "yes" : "no") << '\n';
}

inline std::string pad(std::string text, std::size_t width)
{
    if (text.size() < width)
        text.append(width - text.size(), ' ');
    return text;
}

inline int cmd_bounds(const RunConfig& config, std::ostream& out)
{
    WeightedGraph g = load_input(config);
    auto entries = run_bound_suite(g, suite_options(config));
    if (config.format == Format::jsonl) {
        out << Details { { "graph", graph_summary(g) } }.dump() << '\n';
        for (const SuiteEntry& e : entries) {
            Details line = { { "bound", e.name } };
            if (e.report) {
                line["status"] = "ok";
                line["bound_value"] = e.report->bound_value;
                line["cut_weight"] = e.report->cut.weight;
                line["mode"] = mode_name(e.report->mode);
                line["cut"] = e.report->cut.bitstring();
                line["details"] = e.report->details;
            } else {
                line["status"] = "inapplicable";
                line["reason"] = e.reason;
            }
            out << line.dump() << '\n';
        }
        return ok;
    }
    print_graph_line(out, g);
    out << pad("bound", 17) << pad("bound_value", 16) << pad("cut_weight", 16) << pad("mode", 15) << "status\n";
    for (const SuiteEntry& e : entries) {
        if (e.report)
            out << pad(e.name, 17) << pad(fixed6(e.report->bound_value), 16) << pad(fixed6(e.report->cut.weight), 16)
                << pad(std::string(mode_name(e.report->mode)), 15) << "ok\n";
        else
            out << pad(e.name, 17) << pad("-", 16) << pad("-", 16) << pad("-", 15) << "inapplicable (" << e.reason << ")\n";
    }
    return ok;
}

inline std::string edge_list(const WeightedGraph& g, const std::vector<EdgeId>& ids)
{
    std::string text;
    for (EdgeId id : ids) {
        if (!text.empty())
            text += ' ';
        text += std::to_string(g.edge(id).u) + "-" + std::to_string(g.edge(id).v);
    }
    return text.empty() ? "(none)" : text;
}

inline int cmd_oracle(const RunConfig& config, const std::string& quantity, std::ostream& out)
{
    static const std::vector<std::string> all = { "mac", "r_max", "max_dfs_weight", "five_cycle_cover" };
    require(quantity == "all" || std::find(all.begin(), all.end(), quantity) != all.end(), Errc::invalid_parameter,
        "unknown oracle quantity '" + quantity + "'");
    WeightedGraph g = load_input(config);
    if (config.format == Format::table)
        print_graph_line(out, g);
    for (const std::string& q : all) {
        if (quantity != "all" && quantity != q)
            continue;
        Details line = { { "quantity", q } };
        std::string text;
        try {
            OracleResult r;
            if (q == "mac")
                r = exact_max_cut(g, config.max_n_override);
            else if (q == "r_max")
                r = max_b_subgraph(g, config.max_n_override);
            else if (q == "max_dfs_weight")
                r = max_dfs_tree_weight(g, config.max_n_override);
            else
                r = five_cycle_cover(g, config.max_n_override);
            line["status"] = "ok";
            if (q == "five_cycle_cover") {
                line["found"] = r.found;
                line["edges"] = Details::array();
                for (EdgeId id : r.edge_witness)
                    line["edges"].push_back({ g.edge(id).u, g.edge(id).v });
                text = r.found ? "E' = " + edge_list(g, r.edge_witness) : "no edge set meets every 5-cycle exactly once";
            } else {
                line["value"] = r.value;
                if (q == "mac") {
                    line["cut"] = Cut::from_sides(g, r.cut_witness).bitstring();
                    text = fixed6(r.value) + "  cut " + line["cut"].get<std::string>();
                } else {
                    line["edges"] = Details::array();
                    for (EdgeId id : r.edge_witness)
                        line["edges"].push_back({ g.edge(id).u, g.edge(id).v });
                    text = fixed6(r.value) + "  edges " + edge_list(g, r.edge_witness);
                }
            }
        } catch (const Error& e) {
            if (e.code() == Errc::internal_assertion)
                throw;
            line["status"] = "skipped";
            line["reason"] = e.what();
            text = std::string("skipped: ") + e.what();
        }
        if (config.format == Format::jsonl)
            out << line.dump() << '\n';
        else
            out << pad(q, 18) << text << '\n';
    }
    return ok;
}

inline int cmd_verify(const RunConfig& config, int random_count, int max_n, std::ostream& out)
{
    SuiteOptions options = suite_options(config);
    int instances = 0, checks = 0, failed = 0;
    auto check = [&](const WeightedGraph& g, const std::string& label) {
        VerifyOutcome v = verify_graph(g, options, std::max(config.max_n_override, max_cut_vertex_limit));
        ++instances;
        checks += v.checks;
        for (const std::string& f : v.failures) {
            ++failed;
            out << "FAIL " << label << ": " << f << '\n';
        }
    };
    if (random_count > 0) {
        require(config.input.empty() && config.generator.empty(), Errc::invalid_parameter, "--random excludes --input and --generate");
        for (int i = 0; i < random_count; ++i) {
            auto [kind, params] = random_instance_spec(config.seed, i, max_n);
            std::string label = kind;
            for (const auto& p : params)
                label += " " + p;
            check(generate(kind, params), label);
        }
    } else {
        WeightedGraph g = load_input(config);
        check(g, config.input.empty() ? config.generator.front() : config.input);
    }
    out << "verify: " << instances << " instances, " << checks << " bound checks, " << failed << " failures\n";
    return failed == 0 ? ok : verification_failed;
}

inline int cmd_generate(const std::string& kind, const std::vector<std::string>& params, const std::string& output, std::ostream& out)
{
    WeightedGraph g = generate(kind, params);
    const std::string text = "c " + kind + (params.empty() ? "" : " ") + [&] {
        std::string joined;
        for (std::size_t i = 0; i < params.size(); ++i)
            joined += (i ? " " : "") + params[i];
        return joined;
    }() + "\n" + save_graph(g);
    if (output.empty()) {
        out << text;
    } else {
        std::ofstream file(output);
        require(static_cast<bool>(file), Errc::invalid_parameter, "cannot write " + output);
        file << text;
    }
    return ok;
}

inline int cmd_conjecture(const RunConfig& config, const std::vector<EdgeId>& matching, std::ostream& out)
{
    WeightedGraph g = load_input(config);
    ConjectureReport r = conjecture_report(g, matching, config.seed, std::max(config.max_n_override, max_cut_vertex_limit));
    auto optional_number = [](const std::optional<double>& v) { return v ? Details(*v) : Details(nullptr); };
    if (config.format == Format::jsonl) {
        out << Details { { "graph", graph_summary(g) }, { "mac", r.mac }, { "mac_ratio", r.mac_ratio },
            { "theta_instance_ratio", optional_number(r.theta_ratio) }, { "c_instance_ratio", optional_number(r.c_ratio) },
            { "five_cycle_cover", r.has_five_cycle_cover }, { "flags", r.flags } }
                   .dump()
            << '\n';
        return ok;
    }
    auto show = [](const std::optional<double>& v) { return v ? fixed6(*v) : std::string("n/a"); };
    print_graph_line(out, g);
    out << "mac                          " << fixed6(r.mac) << '\n';
    out << "mac / w                      " << fixed6(r.mac_ratio) << '\n';
    out << "theta instance ratio         " << show(r.theta_ratio) << "  (upper evidence)\n";
    out << "c instance ratio             " << show(r.c_ratio) << "  (upper evidence)\n";
    if (r.triangle_free && r.subcubic)
        out << "five-cycle cover             " << (r.has_five_cycle_cover ? "found" : "none") << '\n';
    if (r.flags.empty())
        out << "flags                        none\n";
    for (const std::string& f : r.flags)
        out << "flag                         " << f << '\n';
    return ok;
}

inline std::vector<EdgeId> parse_edge_ids(const std::string& text)
{
    std::vector<EdgeId> ids;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        EdgeId id = 0;
        require(cutbound::detail::parse_number(std::string_view(item), id), Errc::invalid_parameter, "bad edge id '" + item + "'");
        ids.push_back(id);
    }
    return ids;
}

} // namespace detail

/// Parses `args` (without the program name), runs the command and returns
/// the exit code: 0 ok, 1 verification failure, 2 input error, 3 internal
/// assertion.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app { "Certified lower bounds on the maximum weighted cut", "cutbound" };
    app.require_subcommand(1);
    RunConfig config;
    std::string format = "table";
    std::optional<long long> root;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", config.input, "graph file");
        sub->add_option("--generate", config.generator, "generator kind followed by its parameters")->expected(1, 16);
        sub->add_option("--seed", config.seed, "seed for sampled bounds");
        sub->add_option("--trials", config.trials, "samples per Monte Carlo bound")->check(CLI::PositiveNumber);
        sub->add_option("--root", root, "DFS root");
        sub->add_flag("--best-roots", config.best_roots, "sweep every DFS root");
        sub->add_option("--format", format, "table or jsonl")->check(CLI::IsMember({ "table", "jsonl" }));
        sub->add_option("--max-n-override", config.max_n_override, "raise the oracle size guards");
    };
    CLI::App* bounds = app.add_subcommand("bounds", "run every applicable bound");
    add_common(bounds);
    std::string quantity = "all";
    CLI::App* oracle = app.add_subcommand("oracle", "exact desk-scale quantities");
    oracle->add_option("quantity", quantity, "mac, r_max, max_dfs_weight, five_cycle_cover or all");
    add_common(oracle);
    int random_count = 0, max_n = 14;
    CLI::App* verify = app.add_subcommand("verify", "check every bound against the exact oracle");
    add_common(verify);
    verify->add_option("--random", random_count, "number of random corpus instances")->check(CLI::NonNegativeNumber);
    verify->add_option("--max-n", max_n, "largest random instance")->check(CLI::Range(10, 30));
    std::string kind, output;
    std::vector<std::string> params;
    CLI::App* gen = app.add_subcommand("generate", "write a generated graph");
    gen->add_option("kind", kind, "generator kind")->required();
    gen->add_option("params", params, "generator parameters");
    gen->add_option("--output", output, "file to write instead of stdout");
    std::string matching;
    CLI::App* conjecture = app.add_subcommand("conjecture", "instance evidence for the conjectured constants");
    add_common(conjecture);
    conjecture->add_option("--matching", matching, "comma separated edge ids of a matching");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    config.format = format == "jsonl" ? Format::jsonl : Format::table;
    if (root) {
        if (*root < 0 || *root > std::numeric_limits<VertexId>::max()) {
            err << "error: --root out of range\n";
            return input_error;
        }
        config.root = static_cast<VertexId>(*root);
    }

    try {
        if (bounds->parsed())
            return detail::cmd_bounds(config, out);
        if (oracle->parsed())
            return detail::cmd_oracle(config, quantity, out);
        if (verify->parsed())
            return detail::cmd_verify(config, random_count, max_n, out);
        if (gen->parsed())
            return detail::cmd_generate(kind, params, output, out);
        return detail::cmd_conjecture(config, matching.empty() ? std::vector<EdgeId> {} : detail::parse_edge_ids(matching), out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        if (e.code() == Errc::internal_assertion)
            return internal_error;
        return input_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    }
}

} // namespace cutbound::cli
