/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "cli.hh"

#include <homcompat/compat.hh>
#include <homcompat/errors.hh>
#include <homcompat/generators.hh>
#include <homcompat/graph_io.hh>
#include <homcompat/hom_poset.hh>
#include <homcompat/report.hh>
#include <homcompat/solvers.hh>
#include <homcompat/tucker.hh>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

using nlohmann::json;
using std::optional;
using std::ostream;
using std::string;
using std::uint64_t;
using std::vector;

using namespace homcompat;
using namespace homcompat::cli;

namespace
{
    auto config_value_text(const json & v) -> string
    {
        if (v.is_string())
            return v.get<string>();
        if (v.is_number_integer())
            return std::to_string(v.get<long long>());
        if (v.is_number_unsigned())
            return std::to_string(v.get<unsigned long long>());
        if (v.is_number())
            return v.dump();
        throw InvalidInput("config values must be strings, numbers, booleans or arrays of those");
    }

    auto load_config_flags(const string & filename) -> vector<string>
    {
        std::ifstream infile{ filename };
        if (! infile)
            throw InvalidInput("cannot open config file '" + filename + "'");
        json config;
        try {
            config = json::parse(infile);
        }
        catch (const json::exception & e) {
            throw ParseError("config file '" + filename + "': " + e.what(), 0);
        }
        if (! config.is_object())
            throw InvalidInput("config file '" + filename + "' must hold a JSON object");

        vector<string> flags;
        for (auto & [key, value] : config.items()) {
            string flag = "--" + key;
            if (value.is_boolean()) {
                if (value.get<bool>())
                    flags.push_back(flag);
            }
            else if (value.is_array()) {
                flags.push_back(flag);
                for (auto & item : value)
                    flags.push_back(config_value_text(item));
            }
            else {
                flags.push_back(flag);
                flags.push_back(config_value_text(value));
            }
        }
        return flags;
    }

    /// Where a host graph comes from: --kneser N K or --host FILE.
    struct HostOptions
    {
        vector<int> kneser;
        string host_file;

        auto add_to(CLI::App * app) -> void
        {
            app->add_option("--kneser", kneser, "Use KG(N, K) as the host")->expected(2)->type_name("N K");
            app->add_option("--host", host_file, "Read the host graph from a DIMACS or graph6 file");
        }

        auto is_kneser() const -> bool
        {
            return ! kneser.empty();
        }

        auto load() const -> Graph
        {
            if (is_kneser() == ! host_file.empty())
                throw InvalidInput("give exactly one of --kneser N K and --host FILE");
            if (is_kneser())
                return kneser_graph(kneser[0], kneser[1]);
            return read_graph_file(host_file);
        }
    };

    auto emit(ostream & out, const json & report) -> void
    {
        out << report.dump(2) << '\n';
    }

    auto enumeration_options(uint64_t cap) -> HomEnumerationOptions
    {
        if (cap == 0)
            throw InvalidInput("--cap must be positive");
        return HomEnumerationOptions{ cap };
    }

    struct GenOptions
    {
        string kind;
        optional<int> n, k, m;
        string input;
        int iterations = 1;
        string out_prefix;
    };

    auto cmd_gen(const GenOptions & o, ostream & out) -> int
    {
        auto need = [&] (const optional<int> & v, const string & name) -> int {
            if (! v)
                throw InvalidInput("gen " + o.kind + " needs --" + name);
            return *v;
        };

        Graph g;
        if (o.kind == "kneser")
            g = kneser_graph(need(o.n, "n"), need(o.k, "k"));
        else if (o.kind == "complete")
            g = complete_graph(need(o.m, "m"));
        else if (o.kind == "cycle")
            g = cycle_graph(need(o.m, "m"));
        else {
            if (o.input.empty())
                throw InvalidInput("gen mycielski needs --input FILE");
            if (o.iterations < 0)
                throw InvalidInput("--iterations must be non-negative");
            g = read_graph_file(o.input);
            for (int i = 0 ; i < o.iterations ; ++i)
                g = mycielskian(g);
        }

        json report{ { "command", "gen" }, { "kind", o.kind }, { "graph", graph_summary_json(g) } };
        json files = json::array();
        if (! o.out_prefix.empty()) {
            write_graph_files(g, o.out_prefix);
            files.push_back(o.out_prefix + ".col");
            files.push_back(o.out_prefix + ".g6");
            if (g.has_labels())
                files.push_back(o.out_prefix + ".labels.json");
        }
        report["files"] = files;
        emit(out, report);
        return exit_ok;
    }

    struct CompatOptions
    {
        HostOptions host;
        int r = 2;
        uint64_t cap = HomEnumerationOptions{}.cap;
        string out_prefix;
    };

    auto cmd_compat(const CompatOptions & o, ostream & out, ostream & err) -> int
    {
        auto host = o.host.load();
        auto poset = enumerate_hom(host, o.r, enumeration_options(o.cap));
        auto cg = build_compat(poset);
        if (poset->size() == 0)
            err << "warning: Hom(K_" << o.r << ", H) is empty, so the compatibility graph has no vertices" << std::endl;

        json report{
            { "command", "compat" },
            { "host", graph_summary_json(host) },
            { "r", o.r },
            { "poset_size", poset->size() },
            { "vertex_count", cg.graph.size() },
            { "edge_count", cg.graph.edge_count() },
            { "support_histogram", poset_statistics_json(*poset)["support_histogram"] }
        };

        json files = json::array();
        if (! o.out_prefix.empty()) {
            write_graph_files(cg.graph, o.out_prefix);
            files.push_back(o.out_prefix + ".col");
            files.push_back(o.out_prefix + ".g6");
            if (cg.graph.has_labels())
                files.push_back(o.out_prefix + ".labels.json");
            string poset_file = o.out_prefix + ".poset.json";
            std::ofstream poset_out{ poset_file };
            if (! (poset_out << poset_json(*poset).dump(2) << '\n'))
                throw InvalidInput("cannot write '" + poset_file + "'");
            files.push_back(poset_file);
        }
        report["files"] = files;
        emit(out, report);
        return exit_ok;
    }

    struct VerifyOptions
    {
        HostOptions host;
        optional<int> r;
        uint64_t cap = HomEnumerationOptions{}.cap;
        optional<int> expect_chi, expect_clique;
        string expect_girth;
        bool chi = false;
        uint64_t budget = ChromaticOptions{}.node_budget;
        uint64_t progress_interval = ChromaticOptions{}.progress_interval;
        bool timing = false;
    };

    /// A check outcome: pass, fail, or undecided within the budget.
    enum class Outcome
    {
        Pass,
        Fail,
        Inconclusive
    };

    auto outcome_json(Outcome o) -> json
    {
        switch (o) {
            case Outcome::Pass:         return "pass";
            case Outcome::Fail:         return "fail";
            case Outcome::Inconclusive: return "inconclusive";
        }
        throw InternalError("bad Outcome");
    }

    auto chromatic_json(const ChromaticResult & c) -> json
    {
        json result{
            { "status", c.status == ChromaticStatus::Exact ? "exact" : "inconclusive" },
            { "lower", c.lower },
            { "upper", c.upper },
            { "nodes", c.nodes }
        };
        if (c.status == ChromaticStatus::Exact)
            result["value"] = c.lower;
        return result;
    }

    auto cmd_verify(const VerifyOptions & o, ostream & out, ostream & err) -> int
    {
        using clock = std::chrono::steady_clock;
        auto started = clock::now();

        auto host = o.host.load();
        json report{ { "command", "verify" }, { "host", graph_summary_json(host) } };

        Graph target = host;
        optional<CompatGraph> cg;
        if (o.r) {
            auto poset = enumerate_hom(host, *o.r, enumeration_options(o.cap));
            cg = build_compat(poset);
            target = cg->graph;
            report["r"] = *o.r;
            report["poset_size"] = poset->size();
            if (poset->size() == 0)
                err << "warning: Hom(K_" << *o.r << ", H) is empty, so the compatibility graph has no vertices" << std::endl;
        }
        report["target"] = graph_summary_json(target);

        ChromaticOptions chromatic_options;
        chromatic_options.node_budget = o.budget;
        chromatic_options.progress_interval = o.progress_interval;
        chromatic_options.progress = [&] (const SolverProgress & p) {
            err << "progress: trying " << p.colours_tried << " colours, " << p.nodes << " nodes" << std::endl;
        };

        json checks = json::array();
        vector<Outcome> outcomes;
        auto record = [&] (const string & name, Outcome outcome, json details) {
            details["check"] = name;
            details["result"] = outcome_json(outcome);
            checks.push_back(std::move(details));
            outcomes.push_back(outcome);
        };
        auto pass_if = [] (bool b) { return b ? Outcome::Pass : Outcome::Fail; };

        auto clique = clique_number(target);
        report["clique_number"] = clique.size;
        if (o.r)
            record("clique_at_most_r", pass_if(clique.size <= *o.r), json{ { "value", clique.size }, { "bound", *o.r } });
        if (o.expect_clique)
            record("clique_number", pass_if(clique.size == *o.expect_clique),
                    json{ { "value", clique.size }, { "expected", *o.expect_clique } });

        auto girth_value = girth(target);
        report["girth"] = girth_value.to_string();
        if (! o.expect_girth.empty())
            record("girth", pass_if(girth_value.to_string() == o.expect_girth),
                    json{ { "value", girth_value.to_string() }, { "expected", o.expect_girth } });

        optional<Coloring> pullback;
        if (cg) {
            // Colour the host: the canonical colouring for Kneser hosts, an
            // exact one otherwise.
            optional<Coloring> host_colouring;
            json details;
            if (o.host.is_kneser()) {
                host_colouring = kneser_canonical_coloring(o.host.kneser[0], o.host.kneser[1]);
                details["host_colouring"] = "kneser canonical";
            }
            else {
                auto host_chi = exact_chromatic_number(host, chromatic_options);
                details["host_colouring"] = "exact";
                details["host_chromatic"] = chromatic_json(host_chi);
                if (host_chi.status == ChromaticStatus::Exact)
                    host_colouring = host_chi.witness;
            }

            if (! host_colouring)
                record("pullback_proper", Outcome::Inconclusive, details);
            else {
                pullback = pullback_coloring(*cg, *host_colouring);
                details["colour_count"] = pullback->colour_count;
                record("pullback_proper", pass_if(is_proper(target, *pullback)), details);
            }
        }

        if (o.expect_chi || o.chi) {
            auto chi = exact_chromatic_number(target, chromatic_options);
            report["chromatic_number"] = chromatic_json(chi);
            if (o.expect_chi) {
                json details = chromatic_json(chi);
                details["expected"] = *o.expect_chi;
                Outcome outcome = Outcome::Inconclusive;
                if (chi.status == ChromaticStatus::Exact)
                    outcome = pass_if(chi.lower == *o.expect_chi);
                else if (*o.expect_chi < chi.lower || *o.expect_chi > chi.upper)
                    outcome = Outcome::Fail;
                record("chromatic_number", outcome, details);
            }
            if (chi.status == ChromaticStatus::Exact && pullback && is_proper(target, *pullback))
                record("chromatic_at_most_pullback", pass_if(chi.lower <= pullback->colour_count),
                        json{ { "value", chi.lower }, { "bound", pullback->colour_count } });
        }

        report["checks"] = checks;
        Outcome overall = Outcome::Pass;
        if (std::count(outcomes.begin(), outcomes.end(), Outcome::Fail))
            overall = Outcome::Fail;
        else if (std::count(outcomes.begin(), outcomes.end(), Outcome::Inconclusive))
            overall = Outcome::Inconclusive;
        report["result"] = outcome_json(overall);

        if (o.timing)
            report["seconds"] = std::chrono::duration<double>(clock::now() - started).count();

        emit(out, report);
        switch (overall) {
            case Outcome::Pass:         return exit_ok;
            case Outcome::Fail:         return exit_verification_failed;
            case Outcome::Inconclusive: return exit_inconclusive;
        }
        return exit_ok;
    }

    struct TuckerOptions
    {
        string mode;
        optional<int> n, k;
        int r = 2;
        string coloring = "pullback";
        uint64_t seed = 0;
        optional<int> max_level;
        int trials = 1000;
        string tie_break = "lex";
        uint64_t sweep_cap = 10'000'000;
        uint64_t cap = HomEnumerationOptions{}.cap;
    };

    auto tucker_params(const TuckerOptions & o) -> TuckerParams
    {
        if (! o.n || ! o.k)
            throw InvalidInput("tucker " + o.mode + " needs --n and --k");
        int n = *o.n, k = *o.k, r = o.r;

        // Check the sweep size before building the compatibility graph it would label.
        TuckerDomain(n, r, o.sweep_cap);

        if (o.coloring == "pullback")
            return pullback_tucker_params(n, k, r, enumeration_options(o.cap));

        auto compat = tucker_compat(n, k, r, enumeration_options(o.cap));
        if (o.coloring.rfind("random:", 0) == 0) {
            int colours = 0;
            try {
                std::size_t used = 0;
                colours = std::stoi(o.coloring.substr(7), &used);
                if (used != o.coloring.size() - 7)
                    throw std::invalid_argument("trailing text");
            }
            catch (const std::logic_error &) {
                throw InvalidInput("bad colour count in --coloring " + o.coloring);
            }
            auto coloring = random_coloring(compat->graph.size(), colours, o.seed);
            return make_tucker_params(n, k, r, compat, std::move(coloring));
        }
        if (o.coloring.rfind("file:", 0) == 0) {
            string filename = o.coloring.substr(5);
            std::ifstream infile{ filename };
            if (! infile)
                throw InvalidInput("cannot open colouring file '" + filename + "'");
            json j;
            try {
                j = json::parse(infile);
            }
            catch (const json::exception & e) {
                throw ParseError("colouring file '" + filename + "': " + e.what(), 0);
            }
            return make_tucker_params(n, k, r, compat, parse_coloring_json(j));
        }
        throw InvalidInput("--coloring must be pullback, random:C or file:PATH, got " + o.coloring);
    }

    auto tie_break_of(const string & s) -> TieBreak
    {
        if (s == "lex")
            return TieBreak::EquivariantLex;
        if (s == "smallest-shift")
            return TieBreak::SmallestShift;
        throw InvalidInput("--tie-break must be lex or smallest-shift, got " + s);
    }

    auto cmd_tucker(const TuckerOptions & o, ostream & out) -> int
    {
        if (o.mode == "refute") {
            auto p = tucker_params(o);
            auto verdict = refute_or_certify(p, o.sweep_cap);
            json report = verdict_json(verdict, &p.compat->source->host());
            report["command"] = "tucker refute";
            report["coloring"] = json{
                { "source", o.coloring },
                { "seed", o.seed },
                { "proper", is_proper(p.compat->graph, p.coloring) }
            };
            emit(out, report);
            return exit_ok;
        }

        if (o.mode == "equivariance") {
            auto p = tucker_params(o);
            auto violation = check_equivariance(p, tie_break_of(o.tie_break), o.sweep_cap);
            json report{
                { "command", "tucker equivariance" },
                { "parameters", json{ { "n", p.n }, { "k", p.k }, { "r", p.r }, { "colour_count", p.colour_count() } } },
                { "tie_break", o.tie_break },
                { "equivariant", ! violation },
                { "violation", nullptr }
            };
            if (violation)
                report["violation"] = json{
                    { "x", signed_vector_json(violation->x) },
                    { "x_text", violation->x.to_string() },
                    { "shift", violation->shift }
                };
            emit(out, report);
            return violation ? exit_verification_failed : exit_ok;
        }

        // stress
        if (! o.n)
            throw InvalidInput("tucker stress needs --n");
        if (o.trials < 1)
            throw InvalidInput("--trials must be positive");
        int n = *o.n, r = o.r;
        int max_level = o.max_level.value_or(n - 1);

        // One generator, seeded from the command line, hands out a seed per trial.
        std::mt19937_64 rng(o.seed);
        int found = 0;
        json misses = json::array();
        for (int t = 0 ; t < o.trials ; ++t) {
            uint64_t trial_seed = rng();
            auto labeling = random_equivariant_labeling(n, r, max_level, trial_seed);
            if (find_bad_pair(labeling))
                ++found;
            else if (misses.size() < 10)
                misses.push_back(trial_seed);
        }

        auto control = support_count_labeling(n, r);
        bool control_evades = ! find_bad_pair(control);

        json report{
            { "command", "tucker stress" },
            { "parameters", json{ { "n", n }, { "r", r }, { "max_level", max_level } } },
            { "seed", o.seed },
            { "trials", o.trials },
            { "bad_pairs", found },
            { "missed_trial_seeds", misses },
            { "control_labeling", json{ { "max_level", control.max_level() }, { "bad_pair", ! control_evades } } }
        };

        // Below level n every equivariant labelling must have a bad pair, and
        // the support-count labelling must never have one.
        bool guaranteed = max_level <= n - 1;
        bool ok = control_evades && (! guaranteed || found == o.trials);
        report["result"] = ok ? "pass" : "fail";
        emit(out, report);
        return ok ? exit_ok : exit_verification_failed;
    }
}

auto homcompat::cli::expand_config(const vector<string> & args) -> vector<string>
{
    vector<string> result;
    for (std::size_t i = 0 ; i < args.size() ; ++i) {
        string filename;
        if (args[i] == "--config") {
            if (i + 1 == args.size())
                throw InvalidInput("--config needs a file name");
            filename = args[++i];
        }
        else if (args[i].rfind("--config=", 0) == 0)
            filename = args[i].substr(9);
        else {
            result.push_back(args[i]);
            continue;
        }
        auto flags = load_config_flags(filename);
        result.insert(result.end(), flags.begin(), flags.end());
    }
    return result;
}

auto homcompat::cli::run_cli(const vector<string> & raw_args, ostream & out, ostream & err) -> int
{
    CLI::App app{ "Compatibility graphs of Hom posets, exact colouring and Tucker-type labellings" };
    app.name("homcompat");
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    GenOptions gen;
    auto gen_cmd = app.add_subcommand("gen", "Generate a graph and optionally write it as DIMACS, graph6 and labels");
    gen_cmd->add_option("kind", gen.kind, "kneser, complete, cycle or mycielski")->required()
        ->check(CLI::IsMember({ "kneser", "complete", "cycle", "mycielski" }));
    gen_cmd->add_option("--n", gen.n, "Ground set size for kneser");
    gen_cmd->add_option("--k", gen.k, "Subset size for kneser");
    gen_cmd->add_option("--m", gen.m, "Vertex count for complete and cycle");
    gen_cmd->add_option("--input", gen.input, "Input graph file for mycielski");
    gen_cmd->add_option("--iterations", gen.iterations, "Number of Mycielski steps")->capture_default_str();
    gen_cmd->add_option("--out", gen.out_prefix, "Write PREFIX.col, PREFIX.g6 and PREFIX.labels.json");

    CompatOptions compat;
    auto compat_cmd = app.add_subcommand("compat", "Build the compatibility graph of Hom(K_r, H)");
    compat.host.add_to(compat_cmd);
    compat_cmd->add_option("--r", compat.r, "Number of parts r")->required();
    compat_cmd->add_option("--cap", compat.cap, "Poset element cap")->capture_default_str();
    compat_cmd->add_option("--out", compat.out_prefix, "Write the graph files and PREFIX.poset.json");

    VerifyOptions verify;
    auto verify_cmd = app.add_subcommand("verify", "Check clique, chromatic, pullback and girth claims");
    verify.host.add_to(verify_cmd);
    verify_cmd->add_option("--r", verify.r, "Verify the compatibility graph of Hom(K_r, H) instead of H");
    verify_cmd->add_option("--cap", verify.cap, "Poset element cap")->capture_default_str();
    verify_cmd->add_option("--expect-chi", verify.expect_chi, "Expected exact chromatic number");
    verify_cmd->add_option("--expect-clique", verify.expect_clique, "Expected exact clique number");
    verify_cmd->add_option("--expect-girth", verify.expect_girth, "Expected girth, or 'acyclic'");
    verify_cmd->add_flag("--chi", verify.chi, "Compute the chromatic number even without --expect-chi");
    verify_cmd->add_option("--budget", verify.budget, "Search node budget for each chromatic computation")->capture_default_str();
    verify_cmd->add_option("--progress-interval", verify.progress_interval, "Nodes between progress lines, 0 for none")->capture_default_str();
    verify_cmd->add_flag("--timing", verify.timing, "Add wall-clock seconds to the report");

    TuckerOptions tucker;
    auto tucker_cmd = app.add_subcommand("tucker", "Tucker-type labelling experiments");
    tucker_cmd->add_option("mode", tucker.mode, "refute, stress or equivariance")->required()
        ->check(CLI::IsMember({ "refute", "stress", "equivariance" }));
    tucker_cmd->add_option("--n", tucker.n, "Ground set size");
    tucker_cmd->add_option("--k", tucker.k, "Subset size");
    tucker_cmd->add_option("--r", tucker.r, "Group order r")->capture_default_str();
    tucker_cmd->add_option("--coloring", tucker.coloring, "pullback, random:C or file:PATH")->capture_default_str();
    tucker_cmd->add_option("--seed", tucker.seed, "Seed for every random choice")->capture_default_str();
    tucker_cmd->add_option("--max-level", tucker.max_level, "Largest level for stress labellings, default n - 1");
    tucker_cmd->add_option("--trials", tucker.trials, "Number of stress labellings")->capture_default_str();
    tucker_cmd->add_option("--tie-break", tucker.tie_break, "lex or smallest-shift")->capture_default_str();
    tucker_cmd->add_option("--sweep-cap", tucker.sweep_cap, "Cap on the number of signed vectors")->capture_default_str();
    tucker_cmd->add_option("--cap", tucker.cap, "Poset element cap")->capture_default_str();

    try {
        auto args = expand_config(raw_args);
        std::reverse(args.begin(), args.end());
        try {
            app.parse(args);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_invalid_input;
        }

        if (gen_cmd->parsed())
            return cmd_gen(gen, out);
        if (compat_cmd->parsed())
            return cmd_compat(compat, out, err);
        if (verify_cmd->parsed())
            return cmd_verify(verify, out, err);
        return cmd_tucker(tucker, out);
    }
    catch (const CapExceeded & e) {
        err << "cap exceeded: " << e.what() << std::endl;
        return exit_cap_exceeded;
    }
    catch (const InvalidInput & e) {
        err << "invalid input: " << e.what() << std::endl;
        return exit_invalid_input;
    }
    catch (const InternalError & e) {
        err << "internal error: " << e.what() << std::endl;
        return exit_verification_failed;
    }
}
