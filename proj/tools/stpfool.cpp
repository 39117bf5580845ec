// Command-line front end: enumerate, search, verify, audit-lemmas.
//
// Exit codes: 0 ok, 1 invalid input object, 2 usage/scale/parse error,
// 3 audit violation.

#include <stpfool/audit.hpp>
#include <stpfool/fooling.hpp>
#include <stpfool/io.hpp>
#include <stpfool/tree.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace stpfool;

namespace
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_invalid_input = 1,
        exit_usage = 2,
        exit_audit_violation = 3,
    };

    struct RunConfig
    {
        int n = 0;
        bool exact = false;
        bool heuristic = false;
        double time_limit = 60.0;
        std::uint64_t seed = 0;
        int restarts = 200;
        std::uint64_t samples = 100000;
        std::string input;
        std::string output;
        bool deterministic = false;
        bool force_large = false;
        bool dump_support = false;
        bool timing = false;
        bool table = false;
    };

    auto render_table(const Json & report) -> std::string
    {
        std::ostringstream out;
        for (auto & [key, value] : report.items()) {
            if (value.is_structured())
                continue;
            out << key << std::string(key.size() < 24 ? 24 - key.size() : 1, ' ')
                << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
        return out.str();
    }

    auto emit(const RunConfig & cfg, const Json & report) -> void
    {
        std::string text = cfg.table ? render_table(report) : report.dump(2) + "\n";
        if (cfg.output.empty())
            std::cout << text << std::flush;
        else {
            std::ofstream file(cfg.output, std::ios::binary);
            if (! file)
                throw std::runtime_error("cannot open output file " + cfg.output);
            file << text;
        }
    }

    auto cmd_enumerate(const RunConfig & cfg) -> int
    {
        check_node_count(cfg.n);
        check_enumerable(cfg.n);
        const auto subsets = enumerate_subsets(cfg.n);

        std::uint64_t trees = 0, f1_pairs = 0;
        Json nonzeros = Json::array();
        for (auto t : enumerate_trees(cfg.n)) {
            ++trees;
            for (std::size_t s = 0 ; s < subsets.size() ; ++s)
                if (support(subsets[s], t)) {
                    ++f1_pairs;
                    if (cfg.dump_support)
                        nonzeros.push_back({s + 1, trees});
                }
        }

        Json report{
            {"n", cfg.n},
            {"trees", trees},
            {"subsets", subsets.size()},
            {"f1_pairs", f1_pairs},
        };
        if (cfg.dump_support) {
            std::sort(nonzeros.begin(), nonzeros.end());
            report["row_order"] = "subsets by increasing bitmask (node v is bit v-1)";
            report["column_order"] = "trees by lexicographic Prüfer code";
            report["support_nonzeros"] = std::move(nonzeros);
        }
        emit(cfg, report);
        return exit_ok;
    }

    auto cmd_search(const RunConfig & cfg) -> int
    {
        if (cfg.exact == cfg.heuristic)
            throw CLI::ValidationError("search", "exactly one of --exact or --heuristic is required");

        SearchOptions options;
        options.mode = cfg.exact ? SearchMode::exact : SearchMode::heuristic;
        options.time_limit = std::chrono::duration<double>(cfg.time_limit);
        options.seed = cfg.seed;
        options.restarts = cfg.restarts;
        options.threads = cfg.deterministic ? 1 : default_threads();
        options.allow_large = cfg.force_large;

        auto result = search_max_fooling_set(cfg.n, options);
        auto report = to_json(result, cfg.timing);
        emit(cfg, report);
        std::cerr << "search n=" << cfg.n << " size=" << result.size
                  << (result.proven_optimal ? " (optimal)" : "") << " in " << result.wall_time.count() << " ms\n";
        return exit_ok;
    }

    auto cmd_verify(const RunConfig & cfg) -> int
    {
        std::ifstream file(cfg.input, std::ios::binary);
        if (! file)
            throw std::runtime_error("cannot open input file " + cfg.input);

        Json input;
        try {
            input = Json::parse(file);
        }
        catch (const Json::parse_error & e) {
            throw FormatError(std::string("malformed JSON: ") + e.what());
        }
        auto fs = fooling_set_from_json(input);

        auto verification = verify_fooling_set(fs);
        Json report{
            {"n", fs.n()},
            {"r", fs.size()},
            {"valid", verification.valid},
            {"verification", to_json(verification)},
            {"H", to_json(build_h(fs))},
        };
        if (! verification.valid) {
            emit(cfg, report);
            return exit_invalid_input;
        }

        Json witnesses = Json::array();
        for (auto & p : fs.pairs())
            witnesses.push_back(to_json(*find_witness(p.s, p.t)));
        report["witnesses"] = std::move(witnesses);

        auto audit = audit_fooling_set(fs);
        report["max_z_size"] = audit.max_z_size;
        report["max_column_zeros"] = audit.max_column_zeros;
        report["audit_ok"] = audit.ok();
        report["audit"] = to_json(audit);
        emit(cfg, report);

        if (! audit.ok()) {
            std::cerr << "AUDIT VIOLATION: the counting argument failed on a valid fooling set; "
                         "this indicates an implementation bug\n";
            return exit_audit_violation;
        }
        return exit_ok;
    }

    auto cmd_audit_lemmas(const RunConfig & cfg) -> int
    {
        check_node_count(cfg.n);
        LemmaAuditReport report;
        if (cfg.n <= exact_search_cap)
            report = audit_lemmas_exhaustive(cfg.n);
        else if (cfg.force_large)
            report = audit_lemmas_sampled(cfg.n, cfg.samples, cfg.seed);
        else
            throw ScaleError("exhaustive lemma audit refused for n=" + std::to_string(cfg.n)
                    + "; pass --force-large for seeded sampling");

        emit(cfg, to_json(report));
        if (! report.ok()) {
            std::cerr << "AUDIT VIOLATION: a lemma check failed; this indicates an implementation bug\n";
            return exit_audit_violation;
        }
        return exit_ok;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Fooling sets for the spanning tree polytope: enumeration, search, verification, lemma audits"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_n = [&] (CLI::App * sub) {
        sub->add_option("--n", cfg.n, "Number of nodes")->required()->check(CLI::Range(2, max_nodes));
    };
    auto add_common = [&] (CLI::App * sub) {
        sub->add_option("--output", cfg.output, "Write the report here instead of stdout");
        sub->add_flag("--table", cfg.table, "Print scalar fields as a plain table instead of JSON");
    };

    auto enumerate = app.add_subcommand("enumerate", "Count trees, subsets, and pairs with f=1");
    add_n(enumerate);
    add_common(enumerate);
    enumerate->add_flag("--dump-support", cfg.dump_support, "Include the nonzeros of the support matrix");

    auto search = app.add_subcommand("search", "Search for a maximum fooling set");
    add_n(search);
    add_common(search);
    search->add_flag("--exact", cfg.exact, "Branch and bound maximum clique");
    search->add_flag("--heuristic", cfg.heuristic, "Best of seeded random maximal cliques");
    search->add_option("--time-limit", cfg.time_limit, "Seconds")->check(CLI::PositiveNumber);
    search->add_option("--seed", cfg.seed, "Seed for all randomness");
    search->add_option("--restarts", cfg.restarts, "Random maximal cliques to try")->check(CLI::NonNegativeNumber);
    search->add_flag("--deterministic", cfg.deterministic, "Single worker throughout");
    search->add_flag("--force-large", cfg.force_large, "Allow exact search for n >= 6");
    search->add_flag("--timing", cfg.timing, "Include wall_time_ms in the report");

    auto verify = app.add_subcommand("verify", "Verify and audit a fooling set given as JSON");
    verify->add_option("--input", cfg.input, "Fooling set JSON file")->required();
    add_common(verify);

    auto audit = app.add_subcommand("audit-lemmas", "Check the triangle and tree-witness lemmas on every case");
    add_n(audit);
    add_common(audit);
    audit->add_flag("--force-large", cfg.force_large, "Allow n >= 6 by seeded sampling");
    audit->add_option("--samples", cfg.samples, "Samples for n >= 6");
    audit->add_option("--seed", cfg.seed, "Sampling seed");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*enumerate)
            return cmd_enumerate(cfg);
        if (*search)
            return cmd_search(cfg);
        if (*verify)
            return cmd_verify(cfg);
        return cmd_audit_lemmas(cfg);
    }
    catch (const CLI::ValidationError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const ScaleError & e) {
        std::cerr << "refused: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const FormatError & e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const InputError & e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return exit_invalid_input;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
