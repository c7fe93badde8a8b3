#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "check_suites.hpp"
#include "pwords/analysis.hpp"
#include "pwords/graycode.hpp"
#include "pwords/graphs.hpp"
#include "pwords/words.hpp"

// Exit codes: 0 ok, 1 property failure, 2 usage, 3 budget exhausted,
// 4 degenerate data.

namespace {

namespace fs = std::filesystem;
using namespace pwords;

struct RunConfig {
    int d = 1;
    int n = 1;
    int k = 3;
    bool include_zero = true;
    bool count_only = false;
    long long budget_ms = 10000;
    std::uint64_t seed = 0;
    int threads = 1;
    std::string cache_dir;
    std::string out;
    std::string format = "words";
    bool report = false;
    std::string source = "degrees";
    std::string suite = "all";
    int max_n = 12;
};

std::chrono::milliseconds budget_of(const RunConfig &cfg) {
    return std::chrono::milliseconds(cfg.budget_ms);
}

// Cache files are advisory: anything that fails strict re-validation is
// regenerated and rewritten.
WordSet load_words(const RunConfig &cfg) {
    if (cfg.cache_dir.empty())
        return enumerate_words(cfg.d, cfg.n, budget_of(cfg));
    const fs::path dir(cfg.cache_dir);
    fs::create_directories(dir);
    const fs::path file =
        dir / ("pwords_d" + std::to_string(cfg.d) + "_n" + std::to_string(cfg.n) + ".txt");
    if (fs::exists(file)) {
        std::ifstream is(file);
        if (auto ws = read_words(is, cfg.d, cfg.n))
            return std::move(*ws);
    }
    WordSet ws = enumerate_words(cfg.d, cfg.n, budget_of(cfg));
    std::ofstream os(file);
    write_words(os, ws);
    return ws;
}

void emit(const RunConfig &cfg, const std::string &content) {
    if (cfg.out.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream os(cfg.out);
    if (!os)
        throw ContractError("cannot open output path: " + cfg.out);
    os << content;
}

int cmd_enumerate(const RunConfig &cfg) {
    WordSet ws = load_words(cfg);
    if (cfg.count_only) {
        std::cout << ws.count() << "\n";
        return 0;
    }
    if (cfg.format != "words")
        throw ContractError("enumerate writes the word format; use the graph command for " +
                            cfg.format);
    std::ostringstream os;
    write_words(os, ws);
    emit(cfg, os.str());
    return 0;
}

int cmd_graph(const RunConfig &cfg) {
    PartitionGraph g = build_graph(load_words(cfg), cfg.include_zero, budget_of(cfg));
    std::ostringstream os;
    if (cfg.report || cfg.format == "json") {
        os << structure_report_json(structure_report(g, cfg.threads));
    } else if (cfg.format == "dot") {
        write_dot(os, g);
    } else if (cfg.format == "csv") {
        write_edge_csv(os, g);
    } else {
        throw ContractError("graph formats are dot, csv, or json");
    }
    emit(cfg, os.str());
    return 0;
}

int cmd_gray(const RunConfig &cfg) {
    if (cfg.k != 2 && cfg.k != 3)
        throw ContractError("--k must be 2 or 3");
    if (cfg.k == 2 && cfg.d != 1)
        throw ContractError("2-gray codes are defined for --d 1");
    GrayCode code = cfg.k == 2 ? gray2(cfg.n, budget_of(cfg), cfg.seed) : gray3(cfg.d, cfg.n);
    PartitionGraph g = build_graph(cfg.d, cfg.n, /*include_zero=*/cfg.k == 3);
    if (!verify(code, g)) {
        std::cerr << "constructed code failed verification\n";
        return 1;
    }
    std::ostringstream os;
    write_graycode(os, code);
    emit(cfg, os.str());
    return 0;
}

int cmd_fit(const RunConfig &cfg) {
    Histogram hist;
    if (cfg.source == "degrees") {
        PartitionGraph g = build_graph(load_words(cfg), cfg.include_zero, budget_of(cfg));
        for (const auto &[degree, count] : degree_histogram(g))
            hist.bins[degree] = static_cast<long long>(count);
    } else if (cfg.source == "parts") {
        if (cfg.d != 1)
            throw ContractError("--source parts is defined for --d 1");
        hist = parts_histogram(cfg.n);
    } else {
        throw ContractError("--source must be degrees or parts");
    }
    auto samples = histogram_to_samples(hist);
    auto fits = compare(samples);

    std::ostringstream csv;
    write_histogram_csv(csv, hist);
    const std::string json = fit_report_json(fits);
    if (cfg.out.empty()) {
        std::cout << csv.str() << "\n" << json;
    } else {
        std::ofstream cs(cfg.out + ".csv");
        std::ofstream js(cfg.out + ".json");
        if (!cs || !js)
            throw ContractError("cannot open output paths at base: " + cfg.out);
        cs << csv.str();
        js << json;
    }
    return 0;
}

int cmd_check(const RunConfig &cfg) {
    auto results = checks::run_suite(cfg.suite, cfg.max_n, cfg.threads);
    std::size_t failures = 0;
    for (const auto &r : results) {
        if (r.pass) {
            std::cout << "PASS " << r.name << "\n";
        } else {
            ++failures;
            std::cout << "FAIL " << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
        }
    }
    std::cout << "SUMMARY suite=" << cfg.suite << " checks=" << results.size()
              << " failures=" << failures << "\n";
    return failures == 0 ? 0 : 1;
}

void add_common(CLI::App *cmd, RunConfig &cfg, bool needs_n) {
    cmd->add_option("--d", cfg.d, "dimension (1-9)")->capture_default_str();
    auto *n_opt = cmd->add_option("--n", cfg.n, "encoded total (words have length n-1)");
    if (needs_n)
        n_opt->required();
    cmd->add_option("--out", cfg.out, "output path (stdout when omitted)");
    cmd->add_option("--budget-ms", cfg.budget_ms, "time budget for long searches")
        ->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "seed for randomized search orderings")
        ->capture_default_str();
    cmd->add_option("--threads", cfg.threads, "internal parallelism; output-invariant")
        ->capture_default_str();
    cmd->add_option("--cache-dir", cfg.cache_dir, "enumeration cache directory");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"partition words, their flip graphs, gray codes, and distribution fits"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto *c_enum = app.add_subcommand("enumerate", "list all words for (d, n)");
    add_common(c_enum, cfg, true);
    c_enum->add_flag("--count-only", cfg.count_only, "print the count instead of the words");
    c_enum->add_option("--format", cfg.format, "output format (words)");

    auto *c_graph = app.add_subcommand("graph", "build the flip graph and export or survey it");
    add_common(c_graph, cfg, true);
    c_graph->add_flag("--include-zero,!--exclude-zero", cfg.include_zero,
                      "keep or drop the all-zeros word");
    c_graph->add_option("--format", cfg.format, "dot, csv, or json")->default_str("json");
    c_graph->add_flag("--report", cfg.report, "emit the structure report (same as json)");

    auto *c_gray = app.add_subcommand("gray", "construct and verify a gray code");
    add_common(c_gray, cfg, true);
    c_gray->add_option("--k", cfg.k, "flip bound: 2 or 3")->required();

    auto *c_fit = app.add_subcommand("fit", "histogram + lognormal/normal comparison");
    add_common(c_fit, cfg, true);
    c_fit->add_flag("--include-zero,!--exclude-zero", cfg.include_zero,
                    "keep or drop the all-zeros word");
    c_fit->add_option("--source", cfg.source, "degrees or parts")->capture_default_str();

    auto *c_check = app.add_subcommand("check", "run an invariant suite");
    add_common(c_check, cfg, false);
    c_check->add_option("--suite", cfg.suite, "tables, words, graphs, gray, analysis, all")
        ->capture_default_str();
    c_check->add_option("--max-n", cfg.max_n, "size ceiling for the suite")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (c_graph->parsed() && cfg.format == "words")
            cfg.format = "json"; // graph's default artifact is the report
        if (c_enum->parsed())
            return cmd_enumerate(cfg);
        if (c_graph->parsed())
            return cmd_graph(cfg);
        if (c_gray->parsed())
            return cmd_gray(cfg);
        if (c_fit->parsed())
            return cmd_fit(cfg);
        if (c_check->parsed())
            return cmd_check(cfg);
    } catch (const BudgetExceededError &e) {
        std::cerr << "budget exhausted: " << e.what() << " (partial count " << e.partial_count
                  << ")\n";
        return 3;
    } catch (const DegenerateSampleError &e) {
        std::cerr << "degenerate data: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error &e) {
        std::cerr << "degenerate data: " << e.what() << "\n";
        return 4;
    } catch (const ContractError &e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const InvalidAlphabetError &e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
