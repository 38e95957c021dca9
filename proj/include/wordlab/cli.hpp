#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wordlab/generators.hpp"
#include "wordlab/serialize.hpp"
#include "wordlab/theorem_lab.hpp"
#include "wordlab/word.hpp"

namespace wordlab::cli {

enum ExitCode : int {
    success = 0,
    counterexample_found = 1,
    usage_error = 2,
    budget_refused = 3,
};

enum class Format { json, csv, text };

struct CliConfig {
    std::string command;
    std::string word;
    std::string claim;
    std::string predicate;
    std::string alphabet;
    std::size_t max_len = 0;
    std::size_t length = 0;
    std::size_t max_denominator = 0;
    std::size_t max_factor_len = 0;
    Format format = Format::json;
    bool format_given = false;
    std::size_t parallel = 0;  // 0 means all available cores
    bool sequential = false;
    std::uint64_t budget = RunOptions::default_budget;
};

inline RunOptions run_options(const CliConfig& cfg) {
    RunOptions opt;
    opt.sequential = cfg.sequential;
    opt.budget = cfg.budget;
    if (cfg.parallel > 0) opt.workers = cfg.parallel;
    return opt;
}

inline int run_analyze(const CliConfig& cfg, std::ostream& out) {
    const Word w(cfg.word);
    if (distinct_symbols(w).size() > Alphabet::max_size) throw std::invalid_argument("more than 26 distinct symbols");
    const Json j = analysis_json(w);
    switch (cfg.format) {
        case Format::json: out << j.dump() << "\n"; break;
        case Format::csv:
            out << "field,value\n";
            for (const auto& [key, value] : j.items()) {
                out << key << "," << csv_field(value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
            break;
        case Format::text:
            for (const auto& [key, value] : j.items()) out << key << ": " << value.dump() << "\n";
            break;
    }
    return success;
}

inline int run_verify(const CliConfig& cfg, std::ostream& out) {
    const Claim claim = parse_claim(cfg.claim);
    const auto report = verify_claim(claim, Alphabet(cfg.alphabet), cfg.max_len, run_options(cfg));
    switch (cfg.format) {
        case Format::json: out << to_json(report).dump() << "\n"; break;
        case Format::csv: out << counterexamples_csv(report); break;
        case Format::text: {
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count();
            out << claim_name(report.claim) << " over {" << report.alphabet.symbols() << "} up to length "
                << report.max_len << ": " << report.words_checked << " words, "
                << report.counterexamples.size() << " counterexamples (" << ms << " ms)\n";
            for (const auto& c : report.counterexamples) out << "  \"" << c.word.str() << "\": " << c.diagnostic << "\n";
            break;
        }
    }
    return report.verified() ? success : counterexample_found;
}

inline int run_enumerate(const CliConfig& cfg, std::ostream& out) {
    const auto words = find_class_members(cfg.predicate, Alphabet(cfg.alphabet), cfg.length);
    switch (cfg.format) {
        case Format::json: {
            Json j;
            j["schema_version"] = schema_version;
            j["predicate"] = cfg.predicate;
            j["alphabet"] = cfg.alphabet;
            j["length"] = cfg.length;
            j["words"] = Json::array();
            for (const auto& w : words) j["words"].push_back(w.str());
            out << j.dump() << "\n";
            break;
        }
        case Format::csv:
            out << "word\n";
            for (const auto& w : words) out << csv_field(w.str()) << "\n";
            break;
        case Format::text:
            for (const auto& w : words) out << w.str() << "\n";
            break;
    }
    return success;
}

inline int run_census(const CliConfig& cfg, std::ostream& out) {
    const auto table = census(Alphabet(cfg.alphabet), cfg.max_len, run_options(cfg));
    if (cfg.format == Format::json) {
        out << to_json(table).dump() << "\n";
    } else {
        out << census_csv(table);
    }
    return success;
}

inline int run_corpus(const CliConfig& cfg, std::ostream& out) {
    if (cfg.max_denominator == 0 || cfg.max_factor_len == 0) throw std::invalid_argument("bounds must be positive");
    const auto corpus = sturmian_corpus(cfg.max_denominator, cfg.max_factor_len);
    if (cfg.format == Format::json) {
        Json j;
        j["schema_version"] = schema_version;
        j["max_denominator"] = cfg.max_denominator;
        j["max_factor_len"] = cfg.max_factor_len;
        j["words"] = Json::array();
        for (const auto& w : corpus) j["words"].push_back(w.str());
        out << j.dump() << "\n";
    } else {
        for (const auto& w : corpus) out << w.str() << "\n";
    }
    return success;
}

/// Parses argv and runs one command. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Complexity invariants and class checks for finite words", "wordlab"};
    app.require_subcommand(1);
    CliConfig cfg;

    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format: json, csv or text")
            ->transform(CLI::CheckedTransformer(formats))
            ->each([&](const std::string&) { cfg.format_given = true; });
    };
    auto add_parallel = [&](CLI::App* sub) {
        auto* par = sub->add_option("--parallel", cfg.parallel, "Worker threads (default: all cores)")
                        ->check(CLI::PositiveNumber);
        auto* seq = sub->add_flag("--sequential", cfg.sequential, "Single-threaded run");
        par->excludes(seq);
        sub->add_option("--budget", cfg.budget, "Maximum number of words to enumerate");
    };

    auto* analyze = app.add_subcommand("analyze", "Profiles, indices and class verdicts for one word");
    analyze->add_option("word", cfg.word, "The word (empty string for the empty word)")->required();
    add_format(analyze);

    auto* verify = app.add_subcommand("verify", "Exhaustively check a claim over all words up to a length");
    verify->add_option("claim", cfg.claim, "PROP1, PROP2, THM_FGC, THM_MAIN, PAL_BOUND, PERIOD_INEQ, BINARY_TRAP, PROFILE_EQUIV")
        ->required();
    verify->add_option("--alphabet", cfg.alphabet, "Alphabet symbols in order")->required();
    verify->add_option("--max-len", cfg.max_len, "Maximum word length")->required();
    add_parallel(verify);
    add_format(verify);

    auto* enumerate = app.add_subcommand("enumerate", "List all words of one length in a class");
    enumerate->add_option("predicate", cfg.predicate, "Conjunction such as rich&!trapezoidal")->required();
    enumerate->add_option("--alphabet", cfg.alphabet, "Alphabet symbols in order")->required();
    enumerate->add_option("--len", cfg.length, "Word length")->required();
    add_format(enumerate);

    auto* census_cmd = app.add_subcommand("census", "Per-length class counts");
    census_cmd->add_option("--alphabet", cfg.alphabet, "Alphabet symbols in order")->required();
    census_cmd->add_option("--max-len", cfg.max_len, "Maximum word length")->required();
    add_parallel(census_cmd);
    add_format(census_cmd);

    auto* corpus = app.add_subcommand("corpus", "Factors of periodic Christoffel words");
    corpus->add_option("--max-denominator", cfg.max_denominator, "Bound on p + q")->required();
    corpus->add_option("--max-factor-len", cfg.max_factor_len, "Bound on factor length")->required();
    add_format(corpus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }

    try {
        if (*analyze) return run_analyze(cfg, out);
        if (*verify) return run_verify(cfg, out);
        if (*enumerate) {
            if (!cfg.format_given) cfg.format = Format::text;
            return run_enumerate(cfg, out);
        }
        if (*census_cmd) {
            if (!cfg.format_given) cfg.format = Format::csv;
            return run_census(cfg, out);
        }
        if (*corpus) {
            if (!cfg.format_given) cfg.format = Format::text;
            return run_corpus(cfg, out);
        }
    } catch (const budget_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return budget_refused;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    return usage_error;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"wordlab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace wordlab::cli
