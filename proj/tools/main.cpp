#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mwsearch/bench.hpp"
#include "mwsearch/core.hpp"
#include "mwsearch/engines.hpp"
#include "mwsearch/shift_tables.hpp"

namespace {

using mwsearch::Byte;

std::vector<Byte> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mwsearch::Error("cannot open file: " + path);
    std::vector<Byte> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw mwsearch::Error("read failed: " + path);
    return data;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw mwsearch::Error("cannot open file for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw mwsearch::Error("write failed: " + path);
}

std::vector<Byte> pattern_bytes_from(const std::string& inline_pattern,
                                     const std::string& pattern_file) {
    if (!pattern_file.empty()) return read_file(pattern_file);
    return std::vector<Byte>(inline_pattern.begin(), inline_pattern.end());
}

std::vector<std::size_t> parse_m_list(const std::string& arg) {
    std::vector<std::size_t> out;
    std::size_t start = 0;
    while (start <= arg.size()) {
        std::size_t comma = arg.find(',', start);
        std::string token = arg.substr(start, comma == std::string::npos ? comma : comma - start);
        if (token.empty()) throw mwsearch::ConfigError("empty entry in pattern length list");
        std::size_t dots = token.find("..");
        try {
            if (dots != std::string::npos) {
                std::size_t lo = std::stoull(token.substr(0, dots));
                std::size_t hi = std::stoull(token.substr(dots + 2));
                if (lo > hi) throw mwsearch::ConfigError("descending range: " + token);
                for (std::size_t m = lo; m <= hi; ++m) out.push_back(m);
            } else {
                out.push_back(std::stoull(token));
            }
        } catch (const std::invalid_argument&) {
            throw mwsearch::ConfigError("bad pattern length: " + token);
        } catch (const std::out_of_range&) {
            throw mwsearch::ConfigError("bad pattern length: " + token);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    for (std::size_t m : out)
        if (m < 1) throw mwsearch::ConfigError("pattern length must be >= 1");
    return out;
}

std::vector<mwsearch::EngineSpec> parse_alg_list(const std::string& arg) {
    std::vector<mwsearch::EngineSpec> out;
    std::size_t start = 0;
    while (start <= arg.size()) {
        std::size_t comma = arg.find(',', start);
        std::string token = arg.substr(start, comma == std::string::npos ? comma : comma - start);
        if (!token.empty()) out.push_back(mwsearch::parse_engine_name(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw mwsearch::ConfigError("no algorithms given");
    return out;
}

struct SearchArgs {
    std::string text_file;
    std::string pattern;
    std::string pattern_file;
    std::string alg = "mw";
    unsigned windows = 2;
    unsigned sigma = 256;
    bool unrolled = false;
    bool metrics = false;
    bool count_only = false;
    bool windows_given = false;
};

int run_search(const SearchArgs& args) {
    mwsearch::EngineSpec spec = mwsearch::parse_engine_name(args.alg);
    if (args.windows_given) {
        if (spec.kind != mwsearch::EngineKind::MultiWindow)
            throw mwsearch::InvalidSpec("--windows applies to --alg mw only");
        spec.windows = args.windows;
    }
    if (args.unrolled) spec.unrolled = true;
    spec.instrumented = args.metrics;

    const std::vector<Byte> text = read_file(args.text_file);
    const std::vector<Byte> pattern = pattern_bytes_from(args.pattern, args.pattern_file);
    const mwsearch::Alphabet alphabet(args.sigma);

    mwsearch::EngineResult result = mwsearch::run_engine(spec, text, pattern, alphabet);

    if (args.count_only) {
        std::cout << result.matches.size() << "\n";
    } else {
        for (std::size_t offset : result.matches) std::cout << offset << "\n";
    }
    if (result.metrics) std::cerr << result.metrics->summary();
    return result.matches.empty() ? 1 : 0;
}

struct GenArgs {
    unsigned sigma = 0;
    std::size_t size = 0;
    std::uint64_t seed = 1;
    std::string out;
};

int run_gen(const GenArgs& args) {
    const std::vector<Byte> text = mwsearch::gen_random_text(args.sigma, args.size, args.seed);
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw mwsearch::Error("cannot open file for writing: " + args.out);
    out.write(reinterpret_cast<const char*>(text.data()), static_cast<std::streamsize>(text.size()));
    if (!out) throw mwsearch::Error("write failed: " + args.out);
    return 0;
}

struct BenchArgs {
    unsigned sigma = 0;
    std::size_t size = 1 << 20;
    std::string m_list;
    std::string algs;
    unsigned reps = 100;
    unsigned patterns = 10;
    std::uint64_t seed = 1;
    unsigned warmup = 1;
    std::string format = "table";
    std::string out;
};

int run_bench_cmd(const BenchArgs& args) {
    mwsearch::BenchConfig config;
    config.sigma = args.sigma;
    config.text_size = args.size;
    config.m_list = parse_m_list(args.m_list);
    config.algs = parse_alg_list(args.algs);
    config.reps = args.reps;
    config.patterns_per_cell = args.patterns;
    config.seed = args.seed;
    config.warmup = args.warmup;

    mwsearch::BenchReport report = mwsearch::run_bench(config);
    const auto format =
        args.format == "csv" ? mwsearch::ReportFormat::Csv : mwsearch::ReportFormat::Table;
    const std::string text = mwsearch::emit_report(report, format);
    if (args.out.empty())
        std::cout << text;
    else
        write_file(args.out, text);
    return 0;
}

struct DumpArgs {
    std::string pattern;
    std::string pattern_file;
    unsigned sigma = 0;
    unsigned windows = 2;
    std::string format = "text";
};

int run_dump_table(const DumpArgs& args) {
    const mwsearch::Alphabet alphabet(args.sigma);
    const std::vector<Byte> bytes = pattern_bytes_from(args.pattern, args.pattern_file);
    const mwsearch::Pattern pattern(bytes, alphabet);
    const mwsearch::MultiShiftTable table =
        mwsearch::build_multi_table_naive(pattern, alphabet, args.windows);

    if (args.format == "binary") {
        table.dump(std::cout);
        return 0;
    }

    std::vector<unsigned> probes(args.windows, 0);
    for (std::size_t flat = 0; flat < table.entry_count(); ++flat) {
        std::size_t rest = flat;
        for (unsigned k = args.windows; k >= 1; --k) {
            probes[k - 1] = static_cast<unsigned>(rest % args.sigma);
            rest /= args.sigma;
        }
        for (unsigned k = 0; k < args.windows; ++k) {
            if (k > 0) std::cout << ",";
            std::cout << probes[k];
        }
        std::cout << ": " << table.at(flat) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-window exact byte search: search, corpus generation, benchmarks"};
    app.require_subcommand(1);

    SearchArgs search_args;
    CLI::App* search = app.add_subcommand("search", "find all pattern occurrences in a file");
    search->add_option("--text", search_args.text_file, "text file (read as raw bytes)")
        ->required();
    auto* pat_opt = search->add_option("--pattern", search_args.pattern, "pattern (bytes verbatim)");
    auto* pat_file_opt =
        search->add_option("--pattern-file", search_args.pattern_file, "pattern file (raw bytes)");
    pat_opt->excludes(pat_file_opt);
    search->add_option("--alg", search_args.alg, "engine: sf, bmh, qs or mw")
        ->check(CLI::IsMember({"sf", "bmh", "qs", "mw"}));
    auto* windows_opt =
        search->add_option("--windows", search_args.windows, "adjacent windows per iteration (mw)");
    search->add_option("--sigma", search_args.sigma, "alphabet size (default 256: any byte)");
    search->add_flag("--unrolled", search_args.unrolled, "unrolled search loop (mw)");
    search->add_flag("--metrics", search_args.metrics, "print event counters to stderr");
    search->add_flag("--count-only", search_args.count_only, "print the match count only");

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "write a seeded uniform random corpus");
    gen->add_option("--sigma", gen_args.sigma, "alphabet size")->required();
    gen->add_option("--size", gen_args.size, "output size in bytes")->required();
    gen->add_option("--seed", gen_args.seed, "64-bit seed");
    gen->add_option("--out", gen_args.out, "output file")->required();

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "time engines on a seeded random corpus");
    bench->add_option("--sigma", bench_args.sigma, "alphabet size")->required();
    bench->add_option("--size", bench_args.size, "text size in bytes");
    bench->add_option("--m", bench_args.m_list, "pattern lengths, e.g. 2..12 or 2,4,8")->required();
    bench->add_option("--algs", bench_args.algs, "engines, e.g. bmh,qs,mw2,mw3u")->required();
    bench->add_option("--reps", bench_args.reps, "timed repetitions per cell");
    bench->add_option("--patterns", bench_args.patterns, "random patterns per cell");
    bench->add_option("--seed", bench_args.seed, "64-bit seed");
    bench->add_option("--warmup", bench_args.warmup, "untimed repetitions per pattern");
    bench->add_option("--format", bench_args.format, "report format")
        ->check(CLI::IsMember({"csv", "table"}));
    bench->add_option("--out", bench_args.out, "write the report to a file");

    DumpArgs dump_args;
    CLI::App* dump = app.add_subcommand("dump-table", "print a multi-window shift table");
    auto* dpat = dump->add_option("--pattern", dump_args.pattern, "pattern (bytes verbatim)");
    auto* dpat_file =
        dump->add_option("--pattern-file", dump_args.pattern_file, "pattern file (raw bytes)");
    dpat->excludes(dpat_file);
    dump->add_option("--sigma", dump_args.sigma, "alphabet size")->required();
    dump->add_option("--windows", dump_args.windows, "window count");
    dump->add_option("--format", dump_args.format, "text or binary")
        ->check(CLI::IsMember({"text", "binary"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (search->parsed()) {
            if (pat_opt->count() == 0 && pat_file_opt->count() == 0)
                throw mwsearch::ConfigError("one of --pattern or --pattern-file is required");
            search_args.windows_given = windows_opt->count() > 0;
            return run_search(search_args);
        }
        if (gen->parsed()) return run_gen(gen_args);
        if (bench->parsed()) return run_bench_cmd(bench_args);
        if (dump->parsed()) {
            if (dpat->count() == 0 && dpat_file->count() == 0)
                throw mwsearch::ConfigError("one of --pattern or --pattern-file is required");
            return run_dump_table(dump_args);
        }
    } catch (const mwsearch::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
