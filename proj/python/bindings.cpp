#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "menagerie/algorithms.hpp"
#include "menagerie/benchmarks.hpp"
#include "menagerie/harness.hpp"
#include "menagerie/taxonomy.hpp"
#include "menagerie/version.hpp"

namespace py = pybind11;
using namespace menagerie;

namespace {
AlgorithmParams params_from_dict(const py::dict& overrides) {
    AlgorithmParams params;
    for (const auto& item : overrides) {
        const auto key = item.first.cast<std::string>();
        if (key == "population_size")
            params.population_size = item.second.cast<std::size_t>();
        else
            params.named[key] = item.second.cast<double>();
    }
    return params;
}

py::dict trace_to_dict(const RunTrace& trace) {
    py::list records;
    for (const auto& r : trace.records)
        records.append(py::make_tuple(r.iteration, r.evals, r.best, r.mean, r.spread));
    py::dict out;
    out["columns"] = py::make_tuple("iteration", "evals", "best", "mean", "spread");
    out["records"] = records;
    out["best"] = trace.final_best();
    out["evals"] = trace.total_evals();
    return out;
}
}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "component-based nature-inspired optimizer collection";
    m.attr("__version__") = kVersion;

    m.def("list_algorithms", [] {
        std::vector<std::string> out;
        for (AlgorithmId id : all_algorithm_ids()) out.push_back(to_string(id));
        return out;
    });

    m.def("list_benchmarks", [] {
        std::vector<std::string> out;
        for (const auto& b : bench::all_benchmarks()) out.push_back(b.name);
        return out;
    });

    m.def(
        "default_params",
        [](const std::string& algo) {
            const auto params = default_params(algorithm_id_from_string(algo));
            py::dict out;
            out["population_size"] = params.population_size.value();
            for (const auto& [k, v] : params.named) out[k.c_str()] = v;
            return out;
        },
        py::arg("algo"));

    m.def(
        "run",
        [](const std::string& algo, const std::string& benchmark, std::size_t dims,
           std::uint64_t budget, std::uint64_t seed, const py::dict& params) {
            harness::ExperimentConfig config;
            config.algorithm = algo;
            config.benchmark = benchmark;
            config.dims = dims;
            config.budget = budget;
            config.params = params_from_dict(params);
            return trace_to_dict(harness::run_experiment(config, seed));
        },
        py::arg("algo"), py::arg("benchmark") = "sphere", py::arg("dims") = 2,
        py::arg("budget") = 5000, py::arg("seed") = 0, py::arg("params") = py::dict(),
        "Run one seeded experiment and return its trace.");

    m.def(
        "random_search",
        [](const std::string& benchmark, std::size_t dims, std::uint64_t budget,
           std::uint64_t seed) {
            const auto& b = bench::benchmark(benchmark);
            RngStream rng(seed);
            const auto space = b.space(dims);
            const auto objective = b.objective();
            return trace_to_dict(bench::random_search(objective, space, budget, rng));
        },
        py::arg("benchmark") = "sphere", py::arg("dims") = 2, py::arg("budget") = 5000,
        py::arg("seed") = 0, "Uniform-sampling oracle baseline.");

    m.def(
        "evaluate_benchmark",
        [](const std::string& name, const std::vector<double>& x) {
            return bench::evaluate_benchmark(name, x);
        },
        py::arg("name"), py::arg("x"));

    m.def(
        "manifest",
        [](const std::string& algo) {
            const auto& man = tax::manifest_of(algorithm_id_from_string(algo));
            std::vector<std::string> concepts, features;
            for (auto t : man.concepts) concepts.push_back(tax::to_string(t));
            for (auto t : man.features) features.push_back(tax::to_string(t));
            py::dict out;
            out["acronym"] = algo;
            out["concepts"] = concepts;
            out["features"] = features;
            return out;
        },
        py::arg("algo"));

    m.def(
        "algorithms_with",
        [](const std::string& tag) {
            std::vector<std::string> out;
            for (AlgorithmId id : tax::algorithms_with(tag)) out.push_back(to_string(id));
            return out;
        },
        py::arg("tag"));

    m.def(
        "similarity",
        [](const std::string& a, const std::string& b) {
            return tax::similarity(algorithm_id_from_string(a), algorithm_id_from_string(b));
        },
        py::arg("a"), py::arg("b"));

    m.def("metadata", [] {
        py::list out;
        for (const auto& r : tax::export_metadata()) {
            py::dict row;
            row["acronym"] = r.acronym;
            row["name"] = r.name;
            row["year"] = r.year;
            row["citations"] = r.citations;
            out.append(row);
        }
        return out;
    });
}
