#include "menagerie/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "menagerie/benchmarks.hpp"
#include "menagerie/taxonomy.hpp"
#include "menagerie/version.hpp"

namespace menagerie::harness {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const char* summary_of(AlgorithmId id) {
    switch (id) {
        case AlgorithmId::GA: return "selection, pairwise recombination, jittered moves, worst-replacement";
        case AlgorithmId::PSO: return "velocity updates blending personal and informant bests";
        case AlgorithmId::ALO: return "weak members restart inside shrinking balls around elites, then walk";
        case AlgorithmId::ABC: return "fitness-apportioned trial moves, greedy acceptance, stagnation restarts";
        case AlgorithmId::BFO: return "directional runs with tumbles, crowding-adjusted values, reseeding";
        case AlgorithmId::BA: return "randomized moves toward the best; improvement-tuned jumps and acceptance";
        case AlgorithmId::BeA: return "sampling in shrinking balls around elites, greedy, plus scouts";
        case AlgorithmId::BB_BC: return "Gaussian resampling around the fitness-weighted centroid, decaying width";
        case AlgorithmId::BBO: return "rank-driven coordinate copying from fit donors, mutation of the weak";
        case AlgorithmId::BSO: return "k-means clusters, cluster-best-biased challengers, pairwise keep-best";
        case AlgorithmId::CSO: return "per-member local best-of-samples search or tracing the population best";
        case AlgorithmId::CSS: return "velocity-bearing inverse-square attraction, scheduled coefficients";
        case AlgorithmId::CRO: return "local search switching to disruptive recombination on stagnation";
        case AlgorithmId::COA: return "local ball sampling, clustering, migration toward the best cluster";
        case AlgorithmId::CS: return "worst member replaced by a uniform restart or a heavy-tailed hop";
        case AlgorithmId::FA: return "all-pairs moves weighted by fitness over squared distance";
        case AlgorithmId::FWA: return "Gaussian sparks around elites with value-scaled amplitudes, greedy";
        case AlgorithmId::FPA: return "heavy-tailed hops toward the best or moves toward random members";
        case AlgorithmId::FOA: return "jittered moves toward the population best (minimal mechanism)";
        case AlgorithmId::GwSO: return "progress-weighted neighbour chasing inside crowding-adaptive radii";
        case AlgorithmId::GSA: return "velocity-bearing inverse-square attraction, fixed coefficients";
        case AlgorithmId::GWO: return "edge-of-cube sampling around targets in the three-best simplex";
        case AlgorithmId::GSO: return "cone-limited producer scanning, scrounging, ranger random walks";
        case AlgorithmId::HS: return "one coordinate-wise challenger per iteration, replaces the worst if better";
        case AlgorithmId::ICA: return "fitness-sized sub-populations, colony moves, empire competition";
        case AlgorithmId::IWO: return "fitness-proportional offspring with nonlinearly decaying spread, capped";
        case AlgorithmId::KH: return "blended moves toward best, own best, centroid and signed neighbours";
        case AlgorithmId::MBO: return "elite random walks with recombination, success-adaptive local search";
        case AlgorithmId::MFO: return "spiral moves toward a shrinking sorted archive of historical bests";
        case AlgorithmId::SFLA: return "interleaved memeplexes improving sub-sample worst toward local bests";
        case AlgorithmId::SCA: return "clustered moves toward per-cluster elites, then elites toward the best";
        case AlgorithmId::TLBO: return "teacher shift by (best - mean), then pairwise learner moves, greedy";
        case AlgorithmId::WCA: return "elites chase the best, streams chase assigned elites, jitter moves";
        case AlgorithmId::WOA: return "shrinking-cube or spiral moves toward random-then-best targets";
    }
    return "";
}

std::string valid_ids() {
    std::string out;
    for (AlgorithmId id : all_algorithm_ids()) {
        if (!out.empty()) out += ",";
        out += to_string(id);
    }
    return out;
}

std::string out_directory(const ExperimentConfig& config) {
    if (!config.out_dir.empty()) return config.out_dir;
    if (const char* env = std::getenv("MENAGERIE_OUT_DIR"); env && *env) return env;
    return ".";
}

void write_config_kv(std::ostream& os, const ExperimentConfig& config, std::uint64_t seed,
                     const char* prefix, const char* sep) {
    const auto resolved =
        resolve_params(algorithm_id_from_string(config.algorithm), config.params);
    os << prefix << "version=" << kVersion << sep;
    os << prefix << "algo=" << config.algorithm << sep;
    os << prefix << "benchmark=" << config.benchmark << sep;
    os << prefix << "dims=" << config.dims << sep;
    os << prefix << "budget=" << config.budget << sep;
    os << prefix << "seed=" << seed << sep;
    os << prefix << "population=" << resolved.population_size << sep;
    for (const auto& [k, v] : resolved.named) os << prefix << "param." << k << "=" << fmt17(v) << sep;
}

struct SummaryRow {
    std::string algorithm;
    double median;
    double q25;
    double q75;
};

double quantile(std::vector<double> sorted, double q) {
    const double pos = q * (static_cast<double>(sorted.size()) - 1.0);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

SummaryRow summarize(const std::string& name, std::vector<double> finals) {
    std::sort(finals.begin(), finals.end());
    return {name, quantile(finals, 0.5), quantile(finals, 0.25), quantile(finals, 0.75)};
}

int cmd_list(std::ostream& out) {
    for (AlgorithmId id : all_algorithm_ids()) {
        const auto& meta = tax::metadata_of(id);
        out << std::left << std::setw(6) << meta.acronym << std::setw(38) << meta.name << "("
            << meta.year << ", " << meta.citations << ")\n      " << summary_of(id) << "\n";
    }
    return kExitOk;
}

int cmd_run(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
    const std::filesystem::path dir = out_directory(config);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    for (std::uint64_t seed : config.seeds) {
        const RunTrace trace = run_experiment(config, seed);
        const auto path = dir / trace_file_name(config, seed);
        std::ofstream os(path);
        if (!os) {
            err << "error: cannot write " << path.string() << "\n";
            return kExitRuntime;
        }
        if (config.format == "json")
            write_trace_json(os, config, seed, trace);
        else
            write_trace_csv(os, config, seed, trace);
        os.flush();
        if (!os) {
            err << "error: failed while writing " << path.string() << "\n";
            return kExitRuntime;
        }
        out << path.string() << "\n";
    }
    return kExitOk;
}

int cmd_compare(const std::vector<std::string>& algorithms, const ExperimentConfig& shared,
                std::ostream& out) {
    std::vector<SummaryRow> rows;
    for (const auto& algo : algorithms) {
        ExperimentConfig config = shared;
        config.algorithm = algo;
        std::vector<double> finals;
        for (std::uint64_t seed : config.seeds)
            finals.push_back(run_experiment(config, seed).final_best());
        rows.push_back(summarize(algo, std::move(finals)));
    }
    {
        const auto& b = bench::benchmark(shared.benchmark);
        const auto space = b.space(shared.dims);
        const auto objective = b.objective();
        std::vector<double> finals;
        for (std::uint64_t seed : shared.seeds) {
            RngStream rng(seed);
            finals.push_back(
                bench::random_search(objective, space, shared.budget, rng).final_best());
        }
        rows.push_back(summarize("random-search", std::move(finals)));
    }

    if (shared.format == "csv") {
        out << "algorithm,median,q25,q75,benchmark,dims,budget,seeds\n";
        for (const auto& r : rows)
            out << r.algorithm << ',' << fmt17(r.median) << ',' << fmt17(r.q25) << ','
                << fmt17(r.q75) << ',' << shared.benchmark << ',' << shared.dims << ','
                << shared.budget << ',' << shared.seeds.size() << "\n";
    } else {
        out << "benchmark=" << shared.benchmark << " dims=" << shared.dims
            << " budget=" << shared.budget << " seeds=" << shared.seeds.size() << "\n";
        out << std::left << std::setw(16) << "algorithm" << std::setw(26) << "median"
            << std::setw(26) << "q25" << std::setw(26) << "q75" << "\n";
        for (const auto& r : rows)
            out << std::left << std::setw(16) << r.algorithm << std::setw(26) << fmt17(r.median)
                << std::setw(26) << fmt17(r.q25) << std::setw(26) << fmt17(r.q75) << "\n";
    }
    return kExitOk;
}

void manifest_text(std::ostream& out, AlgorithmId id) {
    const auto& meta = tax::metadata_of(id);
    const auto& m = tax::manifest_of(id);
    out << meta.acronym << "  " << meta.name << " (" << meta.year << ", " << meta.citations
        << ")\n  concepts: ";
    for (std::size_t i = 0; i < m.concepts.size(); ++i)
        out << (i ? "," : "") << tax::to_string(m.concepts[i]);
    out << "\n  features: ";
    for (std::size_t i = 0; i < m.features.size(); ++i)
        out << (i ? "," : "") << tax::to_string(m.features[i]);
    out << "\n";
}

void tag_index_text(std::ostream& out) {
    auto line = [&](const std::string& tag, const std::vector<AlgorithmId>& ids) {
        out << tag << ": ";
        for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? "," : "") << to_string(ids[i]);
        out << "\n";
    };
    for (tax::ConceptTag t : tax::all_concept_tags()) line(tax::to_string(t), tax::algorithms_with(t));
    for (tax::FeatureTag t : tax::all_feature_tags()) line(tax::to_string(t), tax::algorithms_with(t));
}

int cmd_manifest(const std::string& which, const std::string& format, std::ostream& out,
                 std::ostream& err) {
    if (which != "all" && !is_algorithm_id(which)) {
        err << "error: unknown algorithm '" << which << "' (valid: " << valid_ids() << ",all)\n";
        return kExitUsage;
    }
    if (which == "all") {
        if (format == "csv") {
            out << tax::manifest_csv() << "\n" << tax::tag_index_csv();
        } else if (format == "json") {
            nlohmann::json doc;
            doc["algorithms"] = nlohmann::json::parse(tax::manifest_json());
            nlohmann::json tags = nlohmann::json::object();
            auto add = [&](const std::string& tag, const std::vector<AlgorithmId>& ids) {
                nlohmann::json arr = nlohmann::json::array();
                for (AlgorithmId id : ids) arr.push_back(to_string(id));
                tags[tag] = arr;
            };
            for (tax::ConceptTag t : tax::all_concept_tags())
                add(tax::to_string(t), tax::algorithms_with(t));
            for (tax::FeatureTag t : tax::all_feature_tags())
                add(tax::to_string(t), tax::algorithms_with(t));
            doc["tags"] = tags;
            out << doc.dump(2) << "\n";
        } else {
            for (AlgorithmId id : all_algorithm_ids()) manifest_text(out, id);
            out << "\ntag membership:\n";
            tag_index_text(out);
        }
        return kExitOk;
    }

    const AlgorithmId id = algorithm_id_from_string(which);
    if (format == "csv") {
        std::istringstream all(tax::manifest_csv());
        std::string line;
        std::getline(all, line);
        out << line << "\n";
        while (std::getline(all, line))
            if (line.rfind(which + ",", 0) == 0) out << line << "\n";
    } else if (format == "json") {
        const auto arr = nlohmann::json::parse(tax::manifest_json());
        for (const auto& item : arr)
            if (item["acronym"] == which) out << item.dump(2) << "\n";
    } else {
        manifest_text(out, id);
    }
    return kExitOk;
}

int cmd_metadata(const std::string& format, std::ostream& out) {
    if (format == "csv") {
        out << tax::metadata_csv();
    } else if (format == "json") {
        out << tax::metadata_json();
    } else {
        for (const auto& m : tax::export_metadata())
            out << std::left << std::setw(6) << m.acronym << std::setw(38) << m.name
                << std::setw(6) << m.year << m.citations << "\n";
    }
    return kExitOk;
}

}  // namespace

std::vector<std::uint64_t> parse_seeds(const std::string& spec) {
    std::vector<std::uint64_t> seeds;
    const auto range_at = spec.find("..");
    if (range_at != std::string::npos) {
        const std::uint64_t lo = std::stoull(spec.substr(0, range_at));
        const std::uint64_t hi = std::stoull(spec.substr(range_at + 2));
        if (hi <= lo) throw std::invalid_argument("empty seed range: " + spec);
        for (std::uint64_t s = lo; s < hi; ++s) seeds.push_back(s);
        return seeds;
    }
    std::istringstream is(spec);
    std::string token;
    while (std::getline(is, token, ','))
        if (!token.empty()) seeds.push_back(std::stoull(token));
    if (seeds.empty()) throw std::invalid_argument("no seeds in: " + spec);
    return seeds;
}

RunTrace run_experiment(const ExperimentConfig& config, std::uint64_t seed) {
    const AlgorithmId id = algorithm_id_from_string(config.algorithm);
    const auto& b = bench::benchmark(config.benchmark);
    auto instance = make_algorithm(id, config.params);
    RngStream rng(seed);
    const auto space = b.space(config.dims);
    const auto objective = b.objective();
    return run(*instance, objective, space, config.budget, rng);
}

std::string trace_file_name(const ExperimentConfig& config, std::uint64_t seed) {
    std::ostringstream os;
    os << config.algorithm << "_" << config.benchmark << "_" << config.dims << "d_b"
       << config.budget << "_s" << seed << (config.format == "json" ? ".json" : ".csv");
    return os.str();
}

void write_trace_csv(std::ostream& os, const ExperimentConfig& config, std::uint64_t seed,
                     const RunTrace& trace) {
    write_config_kv(os, config, seed, "# ", "\n");
    os << "iteration,evals,best,mean,spread\n";
    for (const auto& r : trace.records)
        os << r.iteration << ',' << r.evals << ',' << fmt17(r.best) << ',' << fmt17(r.mean) << ','
           << fmt17(r.spread) << "\n";
}

void write_trace_json(std::ostream& os, const ExperimentConfig& config, std::uint64_t seed,
                      const RunTrace& trace) {
    nlohmann::json doc;
    const auto resolved =
        resolve_params(algorithm_id_from_string(config.algorithm), config.params);
    doc["config"] = {{"version", kVersion},
                     {"algo", config.algorithm},
                     {"benchmark", config.benchmark},
                     {"dims", config.dims},
                     {"budget", config.budget},
                     {"seed", seed},
                     {"population", resolved.population_size}};
    for (const auto& [k, v] : resolved.named) doc["config"]["params"][k] = v;
    doc["columns"] = {"iteration", "evals", "best", "mean", "spread"};
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : trace.records) {
        // numbers round-trip exactly: 17 significant digits
        records.push_back({r.iteration, r.evals, std::stod(fmt17(r.best)),
                           std::stod(fmt17(r.mean)), std::stod(fmt17(r.spread))});
    }
    doc["records"] = std::move(records);
    os << doc.dump(2) << "\n";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"component-based nature-inspired optimizer collection"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "list the algorithm roster");

    ExperimentConfig run_config;
    std::string run_seeds = "0";
    auto* run_cmd = app.add_subcommand("run", "run an algorithm on a benchmark, one trace per seed");
    std::vector<std::string> run_param_kv;
    run_cmd->add_option("--algo", run_config.algorithm, "algorithm id")->required();
    run_cmd->add_option("--benchmark", run_config.benchmark, "benchmark name");
    run_cmd->add_option("--dims", run_config.dims, "dimension count");
    run_cmd->add_option("--budget", run_config.budget, "evaluation budget");
    run_cmd->add_option("--seeds", run_seeds, "seed list 1,2,3 or half-open range a..b");
    run_cmd->add_option("--param", run_param_kv, "key=value parameter override (repeatable)");
    run_cmd->add_option("--out", run_config.out_dir, "output directory (default $MENAGERIE_OUT_DIR or .)");
    run_cmd->add_option("--format", run_config.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    ExperimentConfig cmp_config;
    std::string cmp_seeds = "0..30";
    std::vector<std::string> cmp_algos;
    std::vector<std::string> cmp_param_kv;
    auto* cmp_cmd =
        app.add_subcommand("compare", "median/IQR of final bests per algorithm plus the oracle");
    cmp_cmd->add_option("--algo", cmp_algos, "algorithm id (repeatable)")->required();
    cmp_cmd->add_option("--benchmark", cmp_config.benchmark, "benchmark name");
    cmp_cmd->add_option("--dims", cmp_config.dims, "dimension count");
    cmp_cmd->add_option("--budget", cmp_config.budget, "evaluation budget");
    cmp_cmd->add_option("--seeds", cmp_seeds, "shared seed list or range");
    cmp_cmd->add_option("--param", cmp_param_kv, "key=value parameter override (repeatable)");
    cmp_cmd->add_option("--format", cmp_config.format, "csv or text")
        ->check(CLI::IsMember({"csv", "text"}));
    cmp_config.format = "text";

    std::string manifest_which = "all";
    std::string manifest_format = "text";
    auto* man_cmd = app.add_subcommand("manifest", "concept/feature manifests and the tag index");
    man_cmd->add_option("id", manifest_which, "algorithm id or 'all'");
    man_cmd->add_option("--format", manifest_format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    std::string metadata_format = "text";
    auto* meta_cmd = app.add_subcommand("metadata", "acronym, name, year and citation band");
    meta_cmd->add_option("--format", metadata_format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    std::vector<const char*> argv;
    argv.push_back("menagerie");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    auto parse_params = [](const std::vector<std::string>& kvs, AlgorithmParams& params) {
        for (const auto& kv : kvs) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("--param expects key=value, got: " + kv);
            const std::string key = kv.substr(0, eq);
            const double value = std::stod(kv.substr(eq + 1));
            if (key == "population_size")
                params.population_size = static_cast<std::size_t>(value);
            else
                params.named[key] = value;
        }
    };

    try {
        if (list_cmd->parsed()) return cmd_list(out);
        if (run_cmd->parsed()) {
            if (!is_algorithm_id(run_config.algorithm)) {
                err << "error: unknown algorithm '" << run_config.algorithm
                    << "' (valid: " << valid_ids() << ")\n";
                return kExitUsage;
            }
            run_config.seeds = parse_seeds(run_seeds);
            parse_params(run_param_kv, run_config.params);
            return cmd_run(run_config, out, err);
        }
        if (cmp_cmd->parsed()) {
            if (cmp_algos.empty()) {
                err << "error: compare needs at least one --algo\n";
                return kExitUsage;
            }
            for (const auto& a : cmp_algos)
                if (!is_algorithm_id(a)) {
                    err << "error: unknown algorithm '" << a << "' (valid: " << valid_ids()
                        << ")\n";
                    return kExitUsage;
                }
            cmp_config.seeds = parse_seeds(cmp_seeds);
            parse_params(cmp_param_kv, cmp_config.params);
            return cmd_compare(cmp_algos, cmp_config, out);
        }
        if (man_cmd->parsed()) return cmd_manifest(manifest_which, manifest_format, out, err);
        if (meta_cmd->parsed()) return cmd_metadata(metadata_format, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace menagerie::harness
