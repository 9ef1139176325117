#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "mwsearch/bench.hpp"
#include "mwsearch/engines.hpp"
#include "mwsearch/errors.hpp"
#include "mwsearch/metrics.hpp"
#include "mwsearch/shift_tables.hpp"

namespace py = pybind11;
using namespace mwsearch;

namespace {

std::vector<Byte> to_bytes(const py::bytes& b) {
    const std::string s = b;
    return {s.begin(), s.end()};
}

EngineSpec make_spec(const std::string& alg, unsigned windows, bool unrolled, bool instrumented) {
    EngineSpec spec = parse_engine_name(alg);
    if (spec.kind == EngineKind::MultiWindow && alg == "mw") spec.windows = windows;
    if (unrolled) spec.unrolled = true;
    spec.instrumented = instrumented;
    return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Multi-window exact byte search";

    auto err = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", err);
    py::register_exception<SymbolOutOfAlphabet>(m, "SymbolOutOfAlphabet", err);
    py::register_exception<TableTooLarge>(m, "TableTooLarge", err);
    py::register_exception<InvalidSpec>(m, "InvalidSpec", err);
    py::register_exception<ConfigError>(m, "ConfigError", err);

    py::class_<Metrics>(m, "Metrics")
        .def_readonly("iterations", &Metrics::iterations)
        .def_readonly("text_reads", &Metrics::text_reads)
        .def_readonly("table_reads", &Metrics::table_reads)
        .def_readonly("verifications", &Metrics::verifications)
        .def_readonly("verify_symbol_compares", &Metrics::verify_symbol_compares)
        .def_readonly("total_shift", &Metrics::total_shift)
        .def_readonly("shift_histogram", &Metrics::shift_histogram)
        .def("mean_shift", &Metrics::mean_shift)
        .def("summary", &Metrics::summary)
        .def("__repr__", [](const Metrics& mt) {
            std::ostringstream out;
            out << "Metrics(iterations=" << mt.iterations << ", total_shift=" << mt.total_shift
                << ")";
            return out.str();
        });

    py::class_<OpCounts>(m, "OpCounts")
        .def_readonly("comparisons", &OpCounts::comparisons)
        .def_readonly("assignments", &OpCounts::assignments)
        .def_readonly("memory_reads", &OpCounts::memory_reads)
        .def_readonly("additions", &OpCounts::additions)
        .def_readonly("multiplications", &OpCounts::multiplications)
        .def("total", &OpCounts::total);

    py::enum_<CostCase>(m, "CostCase")
        .value("BMH_TWO_ITERATIONS_MAX_SHIFT", CostCase::BmhTwoIterationsMaxShift)
        .value("DW_ONE_ITERATION_MAX_SHIFT", CostCase::DwOneIterationMaxShift);

    m.def("cost_model", &cost_model, py::arg("case"),
          "Static per-iteration operation counts for the two modeled loops");

    m.def(
        "find_all",
        [](const py::bytes& text, const py::bytes& pattern, const std::string& alg,
           unsigned windows, bool unrolled, unsigned sigma) {
            const auto t = to_bytes(text);
            const auto p = to_bytes(pattern);
            py::gil_scoped_release release;
            return run_engine(make_spec(alg, windows, unrolled, false), t, p, Alphabet(sigma))
                .matches;
        },
        py::arg("text"), py::arg("pattern"), py::arg("alg") = "mw", py::arg("windows") = 2,
        py::arg("unrolled") = false, py::arg("sigma") = 256,
        "All occurrence offsets of pattern in text, ascending");

    m.def(
        "find_all_with_metrics",
        [](const py::bytes& text, const py::bytes& pattern, const std::string& alg,
           unsigned windows, bool unrolled, unsigned sigma) {
            const auto t = to_bytes(text);
            const auto p = to_bytes(pattern);
            EngineResult result;
            {
                py::gil_scoped_release release;
                result =
                    run_engine(make_spec(alg, windows, unrolled, true), t, p, Alphabet(sigma));
            }
            return py::make_tuple(result.matches, *result.metrics);
        },
        py::arg("text"), py::arg("pattern"), py::arg("alg") = "mw", py::arg("windows") = 2,
        py::arg("unrolled") = false, py::arg("sigma") = 256,
        "(offsets, Metrics) for an instrumented run");

    m.def(
        "gen_random_text",
        [](unsigned sigma, std::size_t size, std::uint64_t seed) {
            const auto text = gen_random_text(sigma, size, seed);
            return py::bytes(reinterpret_cast<const char*>(text.data()), text.size());
        },
        py::arg("sigma"), py::arg("size"), py::arg("seed") = 1,
        "Seeded uniform random byte sequence over symbols 0..sigma-1");

    m.def("table_bytes", &table_bytes, py::arg("sigma"), py::arg("windows"), py::arg("m"),
          "Memory footprint of the windows-dimensional shift table");

    m.def(
        "table_entries",
        [](const py::bytes& pattern, unsigned sigma, unsigned windows) {
            const Alphabet alphabet(sigma);
            const Pattern p(to_bytes(pattern), alphabet);
            const auto table = build_multi_table_blockfill(p, alphabet, windows);
            std::vector<std::uint32_t> out(table.entry_count());
            for (std::size_t i = 0; i < out.size(); ++i) out[i] = table.at(i);
            return out;
        },
        py::arg("pattern"), py::arg("sigma"), py::arg("windows") = 2,
        "Flat shift-table entries in row-major probe order");

    m.def(
        "bench",
        [](unsigned sigma, std::size_t text_size, const std::vector<std::size_t>& m_list,
           const std::vector<std::string>& algs, unsigned reps, unsigned patterns_per_cell,
           std::uint64_t seed, unsigned warmup) {
            BenchConfig config;
            config.sigma = sigma;
            config.text_size = text_size;
            config.m_list = m_list;
            for (const auto& a : algs) config.algs.push_back(parse_engine_name(a));
            config.reps = reps;
            config.patterns_per_cell = patterns_per_cell;
            config.seed = seed;
            config.warmup = warmup;
            BenchReport report;
            {
                py::gil_scoped_release release;
                report = run_bench(config);
            }
            py::list rows;
            for (const auto& r : report.rows) {
                py::dict d;
                d["alg"] = r.alg;
                d["sigma"] = r.sigma;
                d["m"] = r.m;
                d["n"] = r.n;
                d["reps"] = r.reps;
                d["total_seconds"] = r.total_seconds;
                d["seconds_per_rep"] = r.seconds_per_rep;
                d["match_count"] = r.match_count;
                d["mean_shift"] = r.mean_shift;
                d["table_build_seconds"] = r.table_build_seconds;
                rows.append(d);
            }
            return rows;
        },
        py::arg("sigma"), py::arg("text_size"), py::arg("m_list"), py::arg("algs"),
        py::arg("reps") = 10, py::arg("patterns_per_cell") = 10, py::arg("seed") = 1,
        py::arg("warmup") = 1, "Timing rows for each (pattern length, engine) cell");
}
