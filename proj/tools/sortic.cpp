// Command-line front end: analyze instance files, run generated corpora, and
// emit the bundled fixtures.
//
// Exit codes: 0 success, 2 parse error, 3 precondition violation, 4 internal
// invariant breach.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sortic/corpus.hpp"
#include "sortic/report.hpp"

namespace {

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw sortic::PreconditionError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string stem_of(const std::string& path) {
    if (path == "-") return "stdin";
    return std::filesystem::path(path).stem().string();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with sortable simplicial complexes and "
                 "their toric rings"};
    app.require_subcommand(1);

    std::string analyze_path;
    std::string select = "all";
    CLI::App* analyze = app.add_subcommand("analyze", "analyze one instance file");
    analyze->add_option("file", analyze_path, "instance file ('-' for stdin)")
        ->required();
    analyze->add_option("--select", select,
                        "comma-separated sections: recognize,sortable,cone,"
                        "divisor,conjecture,groebner,vd,cm,all");

    std::uint64_t seed = 0;
    int count = 25;
    std::string mode = "partition";
    int nmax = 9;
    std::string out_dir = "counterexamples";
    CLI::App* corpus = app.add_subcommand("corpus", "run a generated corpus");
    corpus->add_option("--seed", seed, "generator seed");
    corpus->add_option("--count", count, "instance count")->check(CLI::PositiveNumber);
    corpus->add_option("--mode", mode, "partition or overlap")
        ->check(CLI::IsMember({"partition", "overlap"}));
    corpus->add_option("--nmax", nmax, "max ground set size")->check(CLI::Range(3, 9));
    corpus->add_option("--out", out_dir, "directory for counterexample files");

    std::string fixtures_dir;
    CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "emit bundled fixtures");
    fixtures_cmd->add_option("--dir", fixtures_dir, "write files here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            std::string text = read_file(analyze_path);
            sortic::ParsedInstance inst =
                sortic::parse_instance(text, stem_of(analyze_path));
            sortic::Report report =
                sortic::run_analysis(inst, sortic::parse_selectors(select));
            std::cout << report.str();
            return 0;
        }
        if (corpus->parsed()) {
            sortic::CorpusParams params;
            params.seed = seed;
            params.count = count;
            params.mode = mode == "partition" ? sortic::CorpusMode::partition
                                              : sortic::CorpusMode::overlap;
            params.nmax = nmax;
            sortic::CorpusOutcome outcome = sortic::corpus_run(params);
            std::cout << outcome.report.str();
            if (!outcome.counterexamples.empty()) {
                std::filesystem::create_directories(out_dir);
                for (const auto& [name, body] : outcome.counterexamples) {
                    std::ofstream out(std::filesystem::path(out_dir) / name);
                    out << body;
                    std::cout << "counterexample.file = " << out_dir << "/" << name
                              << "\n";
                }
            }
            return 0;
        }
        if (fixtures_cmd->parsed()) {
            if (fixtures_dir.empty()) {
                for (const sortic::Fixture& f : sortic::fixtures())
                    std::cout << f.text;
            } else {
                std::filesystem::create_directories(fixtures_dir);
                for (const sortic::Fixture& f : sortic::fixtures()) {
                    std::ofstream out(std::filesystem::path(fixtures_dir) /
                                      (f.name + ".txt"));
                    out << f.text;
                    std::cout << "fixture.file = " << fixtures_dir << "/" << f.name
                              << ".txt\n";
                }
            }
            return 0;
        }
    } catch (const sortic::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const sortic::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const sortic::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
