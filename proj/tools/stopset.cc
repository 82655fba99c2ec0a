/* Command-line front end: every subcommand writes one JSON document to stdout
 * (gen without -o writes the graph itself), diagnostics to stderr.
 * Exit codes: 0 success, 1 verification failure, 2 input error. */

#include <stopset/decoder.hh>
#include <stopset/errors.hh>
#include <stopset/generate.hh>
#include <stopset/graphs.hh>
#include <stopset/json.hh>
#include <stopset/oracles.hh>
#include <stopset/reduction.hh>
#include <stopset/stopping.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

using namespace stopset;


using std::cerr;
using std::cout;
using std::optional;
using std::string;

namespace
{
    constexpr int exit_fail = 1;
    constexpr int exit_input = 2;

    auto read_input(const string & path) -> string
    {
        if (path == "-")
            return string(std::istreambuf_iterator<char>(std::cin), { });
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw InputError("cannot open '" + path + "'");
        return string(std::istreambuf_iterator<char>(in), { });
    }

    auto write_output(const string & path, const string & content) -> void
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw InputError("cannot write '" + path + "'");
        out << content;
    }

    auto load_graph(const string & path) -> Graph
    {
        auto g = parse_graph(read_input(path));
        if (g.collapsed_duplicates() > 0)
            cerr << "warning: " << g.collapsed_duplicates() << " duplicate edge(s) collapsed in '" << path << "'\n";
        return g;
    }

    auto load_tanner(const string & path, const string & format) -> TannerGraph
    {
        auto text = read_input(path);
        return tanner_from_matrix(format == "dense" ? parse_dense(text) : parse_alist(text));
    }

    auto emit_matrix(const TannerGraph & t, const string & format) -> string
    {
        auto h = matrix_from_tanner(t);
        return format == "dense" ? emit_dense(h) : emit_alist(h);
    }

    auto print(const Json & j) -> void
    {
        cout << j.dump(2) << '\n';
    }

    struct Options
    {
        string input;
        string output;
        string labels;
        string format = "alist";
        string set;
        optional<std::size_t> budget;
        optional<std::uint64_t> node_limit;
        optional<std::size_t> size;
        std::size_t vertices = 0;
        std::size_t edges = 0;
        std::uint64_t seed = 0;
        std::uint64_t trials = 10000;
        double epsilon = 0.0;
        unsigned shards = 1;
        unsigned workers = 1;
        bool connected = false;
        bool canonical = false;
    };

    auto add_format(CLI::App * sub, Options & o) -> void
    {
        sub->add_option("--format", o.format, "Matrix file format")
            ->check(CLI::IsMember({ "alist", "dense" }))
            ->capture_default_str();
    }

    auto add_workers(CLI::App * sub, Options & o) -> void
    {
        sub->add_option("--workers", o.workers, "Worker threads; 1 runs fully serial")
            ->check(CLI::Range(1u, 1024u))
            ->capture_default_str();
    }

    auto search_options(const Options & o) -> SearchOptions
    {
        SearchOptions options;
        options.max_size = o.budget;
        options.node_limit = o.node_limit;
        options.canonical = o.canonical;
        options.workers = o.workers;
        return options;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Stopping-set analysis for Tanner graphs" };
    app.require_subcommand(1);
    Options o;

    auto gen = app.add_subcommand("gen", "Generate a seeded random graph as an edge list");
    gen->add_option("--vertices,-n", o.vertices, "Vertex count")->required();
    gen->add_option("--edges,-m", o.edges, "Edge count")->required();
    gen->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
    gen->add_flag("--connected", o.connected, "Draw a spanning tree first so the graph is connected");
    gen->add_option("-o,--output", o.output, "Write the graph here and print a JSON summary instead");

    auto reduce = app.add_subcommand("reduce", "Build the vertex-cover gadget graph G'' of a connected graph");
    reduce->add_option("graph", o.input, "Edge-list file, or - for stdin")->required();
    reduce->add_option("-o,--output", o.output, "Write the parity-check matrix of G'' here");
    reduce->add_option("--labels", o.labels, "Write the label sidecar here (default: <output>.labels.json)");
    add_format(reduce, o);

    auto incidence = app.add_subcommand("incidence", "Vertex-edge incidence graph of a graph, as a parity-check matrix");
    incidence->add_option("graph", o.input, "Edge-list file, or - for stdin")->required();
    incidence->add_option("-o,--output", o.output, "Write the matrix here");
    add_format(incidence, o);

    auto distance = app.add_subcommand("distance", "Exact stopping distance of a Tanner graph");
    distance->add_option("tanner", o.input, "Matrix file, or - for stdin")->required();
    distance->add_option("--budget", o.budget, "Only consider stopping sets up to this size");
    distance->add_option("--node-limit", o.node_limit, "Give up after this many search nodes");
    distance->add_flag("--canonical", o.canonical, "Report the lexicographically smallest optimal witness");
    add_format(distance, o);
    add_workers(distance, o);

    auto exact = app.add_subcommand("stopping-set", "Decide whether a stopping set of exactly --size members exists");
    exact->add_option("tanner", o.input, "Matrix file, or - for stdin")->required();
    exact->add_option("--size", o.size, "Required size")->required();
    exact->add_option("--node-limit", o.node_limit, "Give up after this many search nodes");
    exact->add_flag("--canonical", o.canonical, "Report the lexicographically smallest witness");
    add_format(exact, o);
    add_workers(exact, o);

    auto enumerate = app.add_subcommand("enumerate", "List every nonempty stopping set up to --max-size (small graphs only)");
    enumerate->add_option("tanner", o.input, "Matrix file, or - for stdin")->required();
    enumerate->add_option("--max-size", o.size, "Largest size listed (default: all)");
    add_format(enumerate, o);

    auto check_ss = app.add_subcommand("check-ss", "Check whether a variable set is a stopping set");
    check_ss->add_option("tanner", o.input, "Matrix file, or - for stdin")->required();
    check_ss->add_option("--set", o.set, "Comma-separated variable indices")->required();
    add_format(check_ss, o);

    auto vc = app.add_subcommand("vc", "Minimum vertex cover, or an exact-size cover with --size");
    vc->add_option("graph", o.input, "Edge-list file, or - for stdin")->required();
    vc->add_option("--size", o.size, "Required cover size");
    vc->add_flag("--canonical", o.canonical, "Report the lexicographically smallest minimum cover");

    auto verify = app.add_subcommand("verify", "Check the vertex-cover/stopping-set correspondence on a graph");
    verify->add_option("graph", o.input, "Edge-list file, or - for stdin")->required();
    add_workers(verify, o);

    auto peel_cmd = app.add_subcommand("peel", "Run the erasure peeling decoder");
    peel_cmd->add_option("tanner", o.input, "Matrix file, or - for stdin")->required();
    peel_cmd->add_option("--erased", o.set, "Comma-separated erased positions")->required();
    add_format(peel_cmd, o);

    auto mc = app.add_subcommand("mc", "Monte Carlo peeling failure rate");
    mc->add_option("tanner", o.input, "Matrix file, or - for stdin")->required();
    mc->add_option("--epsilon", o.epsilon, "Erasure probability")->required();
    mc->add_option("--trials", o.trials, "Number of trials")->capture_default_str();
    mc->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
    mc->add_option("--shards", o.shards, "Independent generator streams; the result depends on this")
        ->check(CLI::Range(1u, 4096u))
        ->capture_default_str();
    add_format(mc, o);
    add_workers(mc, o);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? 0 : exit_input;
    }

    try {
        if (gen->parsed()) {
            auto generated = random_graph(o.vertices, o.edges, o.seed, o.connected);
            auto text = "# gen n=" + std::to_string(o.vertices) + " m=" + std::to_string(o.edges) + " seed=" + std::to_string(o.seed)
                + " method=" + generated.method + "\n" + emit_graph(generated.graph);
            if (o.output.empty())
                cout << text;
            else {
                write_output(o.output, text);
                print({ { "path", o.output }, { "n", o.vertices }, { "m", o.edges }, { "seed", o.seed },
                        { "connected", is_connected(generated.graph) }, { "method", generated.method } });
            }
        }
        else if (reduce->parsed()) {
            auto inst = build_reduction(load_graph(o.input));
            auto & t = inst.product();
            auto report = reduction_sidecar(inst);
            auto matrix = emit_matrix(t, o.format);
            if (! o.output.empty()) {
                write_output(o.output, matrix);
                write_output(o.labels.empty() ? o.output + ".labels.json" : o.labels, report.dump(2) + "\n");
            }
            else if (! o.labels.empty())
                write_output(o.labels, report.dump(2) + "\n");

            Json summary = {
                { "n", inst.n() }, { "m", inst.m() },
                { "variables", t.var_count() }, { "checks", t.check_count() }, { "tanner_edges", t.edge_count() },
                { "size_map", "t*(m+1)+m" }
            };
            if (o.output.empty())
                summary["matrix"] = matrix;
            else
                summary["matrix_path"] = o.output;
            if (o.output.empty() && o.labels.empty())
                summary["labels"] = report["labels"];
            print(summary);
        }
        else if (incidence->parsed()) {
            auto t = incidence_graph(load_graph(o.input));
            auto matrix = emit_matrix(t, o.format);
            Json summary = { { "variables", t.var_count() }, { "checks", t.check_count() }, { "tanner_edges", t.edge_count() } };
            if (o.output.empty())
                summary["matrix"] = matrix;
            else {
                write_output(o.output, matrix);
                summary["matrix_path"] = o.output;
            }
            print(summary);
        }
        else if (distance->parsed()) {
            print(stopping_distance(load_tanner(o.input, o.format), search_options(o)));
        }
        else if (exact->parsed()) {
            print(has_stopping_set_of_size(load_tanner(o.input, o.format), *o.size, search_options(o)));
        }
        else if (enumerate->parsed()) {
            auto t = load_tanner(o.input, o.format);
            Json sets = Json::array();
            for_each_stopping_set(t, o.size.value_or(t.var_count()), [&] (const VarSet & s) { sets.push_back(s.to_string()); });
            print({ { "count", sets.size() }, { "stopping_sets", sets } });
        }
        else if (check_ss->parsed()) {
            auto t = load_tanner(o.input, o.format);
            auto s = VarSet::parse(o.set, t.var_count());
            print({ { "set", s.to_string() }, { "size", s.size() }, { "is_stopping_set", is_stopping_set(t, s) },
                    { "neighborhood", neighborhood(t, s).to_string() } });
        }
        else if (vc->parsed()) {
            auto g = load_graph(o.input);
            print(o.size ? has_vertex_cover_of_size(g, *o.size) : min_vertex_cover(g, o.canonical));
        }
        else if (verify->parsed()) {
            auto report = verify_corollaries(load_graph(o.input), o.workers);
            print(report);
            return report.pass ? 0 : exit_fail;
        }
        else if (peel_cmd->parsed()) {
            auto t = load_tanner(o.input, o.format);
            print(peel(t, VarSet::parse(o.set, t.var_count())));
        }
        else if (mc->parsed()) {
            auto t = load_tanner(o.input, o.format);
            Json report = mc_failure_rate(t, o.epsilon, o.trials, o.seed, o.shards, o.workers);
            report["epsilon"] = o.epsilon;
            report["seed"] = o.seed;
            print(report);
        }
    }
    catch (const InputError & e) {
        cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    catch (const InvariantViolation & e) {
        cerr << "internal error: " << e.what() << '\n';
        return exit_fail;
    }

    return 0;
}
