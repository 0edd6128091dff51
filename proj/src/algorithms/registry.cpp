#include "common.hpp"

namespace menagerie {

namespace {
using detail::InstanceBase;

struct RosterRow {
    AlgorithmId id;
    const char* spelling;
    ParamSchema schema;
    std::unique_ptr<AlgorithmInstance> (*factory)(ResolvedParams);
};

// Every numeric default is documented with its rationale in docs/defaults.md.
// Fractions of space size refer to the mean box edge length; fractions of
// spread refer to the population's mean distance to its centroid.
const std::vector<RosterRow>& roster() {
    static const std::vector<RosterRow> rows = [] {
        std::vector<RosterRow> r;
        r.push_back({AlgorithmId::GA, "GA",
                     {4, 50,
                      {{"parent_fraction", 0.5, 0.1, 1.0},
                       {"mutation_sigma_start", 0.05, 1e-9, 1.0},
                       {"mutation_sigma_end", 1e-5, 1e-12, 1.0}}},
                     detail::make_ga});
        r.push_back({AlgorithmId::PSO, "PSO",
                     {2, 50,
                      {{"inertia", 0.7, 0.0, 2.0},
                       {"cognitive", 1.4, 0.0, 4.0},
                       {"social", 1.4, 0.0, 4.0},
                       {"velocity_init", 0.5, 0.0, 2.0}}},
                     detail::make_pso});
        r.push_back({AlgorithmId::ALO, "ALO",
                     {3, 50,
                      {{"elite_fraction", 0.2, 0.02, 0.9},
                       {"radius_start", 0.5, 1e-6, 2.0},
                       {"radius_end", 1e-4, 1e-12, 1.0},
                       {"walk_steps", 4, 0, 32},
                       {"walk_step_fraction", 0.3, 0.01, 2.0}}},
                     detail::make_alo});
        r.push_back({AlgorithmId::ABC, "ABC",
                     {5, 50,
                      {{"stagnation_limit", 20, 2, 1e6},
                       {"trial_cap", 10, 1, 1e6},
                       {"move_size_start", 1.0, 1e-6, 2.0},
                       {"move_size_end", 0.05, 1e-9, 2.0}}},
                     detail::make_abc});
        r.push_back({AlgorithmId::BFO, "BFO",
                     {4, 50,
                      {{"step_fraction", 0.05, 1e-6, 1.0},
                       {"step_shrink", 0.7, 0.1, 0.99},
                       {"reassign_period", 10, 1, 1e6},
                       {"reassign_fraction", 0.25, 0.0, 0.5},
                       {"crowd_attract", 0.1, 0.0, 10.0},
                       {"crowd_repel", 0.05, 0.0, 10.0},
                       {"crowd_scale", 0.25, 0.01, 2.0}}},
                     detail::make_bfo});
        r.push_back({AlgorithmId::BA, "BA",
                     {2, 50,
                      {{"move_fraction_max", 1.5, 0.1, 3.0},
                       {"jump_prob", 0.5, 0.0, 1.0},
                       {"jump_decay", 0.85, 0.01, 1.0},
                       {"jump_sigma", 0.1, 1e-6, 1.0},
                       {"accept_start", 0.1, 0.0, 1.0},
                       {"loudness_decay", 0.95, 0.01, 1.0}}},
                     detail::make_ba});
        r.push_back({AlgorithmId::BeA, "BeA",
                     {4, 50,
                      {{"elite_count", 10, 1, 1e6},
                       {"scout_fraction", 0.2, 0.0, 0.9},
                       {"radius_start", 0.3, 1e-6, 1.0},
                       {"radius_end", 1e-5, 1e-12, 1.0}}},
                     detail::make_bea});
        r.push_back({AlgorithmId::BB_BC, "BB-BC",
                     {2, 50,
                      {{"sigma_start", 0.5, 1e-6, 2.0}, {"sigma_end", 1e-6, 1e-12, 1.0}}},
                     detail::make_bbbc});
        r.push_back({AlgorithmId::BBO, "BBO",
                     {3, 50,
                      {{"copy_prob_max", 0.9, 0.01, 1.0},
                       {"mutation_prob_max", 0.3, 0.0, 1.0},
                       {"mutation_sigma", 0.5, 0.01, 2.0}}},
                     detail::make_bbo});
        r.push_back({AlgorithmId::BSO, "BSO",
                     {5, 50,
                      {{"clusters", 5, 1, 64},
                       {"p_random", 0.04, 0.0, 1.0},
                       {"p_single", 0.5, 0.0, 1.0},
                       {"p_cluster_best", 0.7, 0.0, 1.0},
                       {"jitter_scale", 0.4, 0.01, 2.0},
                       {"recombine_jitter", 0.1, 0.0, 2.0}}},
                     detail::make_bso});
        r.push_back({AlgorithmId::CSO, "CSO",
                     {2, 30,
                      {{"trace_prob", 0.3, 0.0, 1.0},
                       {"seek_samples", 3, 1, 16},
                       {"seek_radius", 0.4, 0.01, 2.0},
                       {"trace_fraction_max", 1.2, 0.1, 3.0}}},
                     detail::make_cso});
        r.push_back({AlgorithmId::CSS, "CSS",
                     {3, 40,
                      {{"velocity_coef_start", 0.5, 0.0, 2.0},
                       {"velocity_coef_end", 0.0, 0.0, 2.0},
                       {"attract_coef_start", 0.5, 0.0, 2.0},
                       {"attract_coef_end", 1.0, 0.0, 2.0}}},
                     detail::make_css});
        r.push_back({AlgorithmId::CRO, "CRO",
                     {3, 40,
                      {{"stagnation_threshold", 8, 1, 1e6},
                       {"accept_start", 0.3, 0.0, 1.0},
                       {"accept_decay", 0.7, 0.01, 1.0},
                       {"local_sigma", 0.3, 0.01, 2.0},
                       {"disrupt_jitter", 0.05, 0.0, 1.0}}},
                     detail::make_cro});
        r.push_back({AlgorithmId::COA, "COA",
                     {5, 30,
                      {{"samples_per_member", 2, 1, 8},
                       {"sample_radius", 0.5, 0.01, 2.0},
                       {"clusters", 4, 2, 64},
                       {"move_fraction", 0.6, 0.01, 2.0},
                       {"move_jitter", 0.05, 0.0, 1.0}}},
                     detail::make_coa});
        r.push_back({AlgorithmId::CS, "CS",
                     {2, 15,
                      {{"p_uniform_restart", 0.25, 0.0, 1.0},
                       {"levy_scale", 0.05, 1e-6, 1.0},
                       {"levy_tail", 1.5, 0.1, 1.9}}},
                     detail::make_cs});
        r.push_back({AlgorithmId::FA, "FA",
                     {2, 30, {{"attraction", 0.9, 0.01, 2.0}, {"jitter_scale", 0.15, 0.0, 1.0}}},
                     detail::make_fa});
        r.push_back({AlgorithmId::FWA, "FWA",
                     {3, 40,
                      {{"elite_count", 5, 1, 1e6},
                       {"amplitude", 1.2, 0.01, 4.0},
                       {"amplitude_floor", 0.02, 1e-6, 1.0}}},
                     detail::make_fwa});
        r.push_back({AlgorithmId::FPA, "FPA",
                     {2, 40,
                      {{"p_global", 0.8, 0.0, 1.0},
                       {"levy_scale", 0.4, 1e-6, 2.0},
                       {"levy_tail", 1.5, 0.1, 1.9}}},
                     detail::make_fpa});
        r.push_back({AlgorithmId::FOA, "FOA", {2, 40, {{"jitter_scale", 0.4, 0.0, 2.0}}},
                     detail::make_foa});
        r.push_back({AlgorithmId::GwSO, "GwSO",
                     {2, 50,
                      {{"progress_decay", 0.6, 0.01, 0.99},
                       {"progress_gain", 0.4, 0.01, 1.0},
                       {"radius_init", 0.4, 0.01, 1.0},
                       {"radius_min", 0.005, 1e-6, 1.0},
                       {"radius_max", 0.6, 0.01, 1.0},
                       {"radius_step", 0.1, 0.0, 1.0},
                       {"neighbor_target", 5, 1, 64},
                       {"move_fraction", 0.5, 0.01, 1.0},
                       {"jitter_scale", 0.1, 0.0, 1.0}}},
                     detail::make_gwso});
        r.push_back({AlgorithmId::GSA, "GSA", {2, 40, {{"grav", 0.8, 0.01, 4.0}}},
                     detail::make_gsa});
        r.push_back({AlgorithmId::GWO, "GWO",
                     {3, 40,
                      {{"halfwidth_start", 0.6, 0.01, 2.0},
                       {"halfwidth_end", 0.0, 0.0, 1.0},
                       {"jitter_scale", 0.1, 0.0, 1.0}}},
                     detail::make_gwo});
        r.push_back({AlgorithmId::GSO, "GSO",
                     {4, 48,
                      {{"producers", 2, 1, 8},
                       {"scrounger_fraction", 0.7, 0.0, 1.0},
                       {"cone_samples", 3, 1, 8},
                       {"max_turn", 0.7853981633974483, 0.01, 3.141592653589793},
                       {"producer_radius", 0.5, 0.01, 2.0},
                       {"ranger_steps", 3, 1, 16},
                       {"ranger_sigma", 0.3, 0.01, 2.0}}},
                     detail::make_gso});
        r.push_back({AlgorithmId::HS, "HS",
                     {2, 30,
                      {{"memory_rate", 0.9, 0.0, 1.0},
                       {"adjust_rate", 0.3, 0.0, 1.0},
                       {"bandwidth", 0.02, 1e-6, 1.0}}},
                     detail::make_hs});
        r.push_back({AlgorithmId::ICA, "ICA",
                     {8, 50,
                      {{"empires", 6, 2, 64},
                       {"move_fraction_max", 1.4, 0.1, 4.0},
                       {"jitter_fraction", 0.1, 0.0, 1.0},
                       {"blend", 0.05, 0.0, 1.0}}},
                     detail::make_ica});
        r.push_back({AlgorithmId::IWO, "IWO",
                     {2, 20,
                      {{"population_cap", 50, 2, 1e6},
                       {"seeds_min", 0, 0, 8},
                       {"seeds_max", 4, 1, 16},
                       {"sigma_start", 0.3, 1e-6, 2.0},
                       {"sigma_end", 5e-5, 1e-12, 1.0},
                       {"sigma_exponent", 3.0, 0.1, 10.0}}},
                     detail::make_iwo});
        r.push_back({AlgorithmId::KH, "KH",
                     {3, 40,
                      {{"w_best", 0.35, 0.0, 2.0},
                       {"w_historical", 0.25, 0.0, 2.0},
                       {"w_centroid", 0.2, 0.0, 2.0},
                       {"w_neighbor", 0.15, 0.0, 2.0},
                       {"random_start", 0.35, 0.0, 2.0},
                       {"random_end", 0.02, 0.0, 2.0},
                       {"step_scale", 0.6, 0.01, 2.0},
                       {"neighbor_radius", 1.0, 0.01, 4.0},
                       {"recombine_fraction", 0.2, 0.0, 1.0},
                       {"recombine_jitter", 0.05, 0.0, 1.0}}},
                     detail::make_kh});
        r.push_back({AlgorithmId::MBO, "MBO",
                     {4, 30,
                      {{"elite_count", 5, 1, 1e6},
                       {"walk_length", 7, 1, 32},
                       {"walk_sigma_start", 0.25, 1e-6, 2.0},
                       {"walk_sigma_end", 0.01, 1e-9, 1.0},
                       {"walk_decay", 0.85, 0.1, 1.0},
                       {"recombine_prob", 0.9, 0.0, 1.0},
                       {"recombine_decay", 0.8, 0.01, 1.0},
                       {"local_moves", 8, 1, 128},
                       {"local_small", 0.05, 1e-6, 1.0},
                       {"local_large", 0.3, 1e-6, 2.0}}},
                     detail::make_mbo});
        r.push_back({AlgorithmId::MFO, "MFO", {2, 40, {{"turns", 3.0, 0.1, 16.0}}},
                     detail::make_mfo});
        r.push_back({AlgorithmId::SFLA, "SFLA",
                     {10, 50,
                      {{"memeplexes", 5, 1, 64},
                       {"submoves", 3, 1, 32},
                       {"subsample", 5, 2, 64}}},
                     detail::make_sfla});
        r.push_back({AlgorithmId::SCA, "SCA",
                     {5, 50,
                      {{"clusters", 5, 1, 64},
                       {"elite_fraction", 0.25, 0.01, 1.0},
                       {"move_fraction_max", 0.9, 0.01, 2.0},
                       {"jitter_scale", 0.05, 0.0, 1.0}}},
                     detail::make_sca});
        r.push_back({AlgorithmId::TLBO, "TLBO", {3, 40, {}}, detail::make_tlbo});
        r.push_back({AlgorithmId::WCA, "WCA",
                     {6, 40,
                      {{"elite_count", 4, 2, 64},
                       {"move_fraction_max", 2.0, 0.1, 4.0},
                       {"jitter_prob", 0.1, 0.0, 1.0},
                       {"jitter_sigma", 0.2, 0.01, 2.0}}},
                     detail::make_wca});
        r.push_back({AlgorithmId::WOA, "WOA",
                     {2, 40,
                      {{"spiral_prob", 0.5, 0.0, 1.0},
                       {"turns", 3.0, 0.1, 16.0},
                       {"random_target_start", 1.0, 0.0, 1.0},
                       {"random_target_end", 0.0, 0.0, 1.0},
                       {"shrink_start", 1.0, 0.01, 2.0},
                       {"shrink_end", 0.0, 0.0, 1.0}}},
                     detail::make_woa});
        return r;
    }();
    return rows;
}

const RosterRow& row_of(AlgorithmId id) {
    for (const auto& r : roster())
        if (r.id == id) return r;
    throw std::invalid_argument("unknown algorithm id");
}
}  // namespace

const std::array<AlgorithmId, kAlgorithmCount>& all_algorithm_ids() {
    static const std::array<AlgorithmId, kAlgorithmCount> ids = [] {
        std::array<AlgorithmId, kAlgorithmCount> out{};
        std::size_t i = 0;
        for (const auto& r : roster()) out[i++] = r.id;
        return out;
    }();
    return ids;
}

std::string to_string(AlgorithmId id) { return row_of(id).spelling; }

AlgorithmId algorithm_id_from_string(const std::string& s) {
    for (const auto& r : roster())
        if (s == r.spelling) return r.id;
    throw std::invalid_argument("unknown algorithm id: " + s);
}

bool is_algorithm_id(const std::string& s) {
    for (const auto& r : roster())
        if (s == r.spelling) return true;
    return false;
}

const ParamSchema& param_schema(AlgorithmId id) { return row_of(id).schema; }

AlgorithmParams default_params(AlgorithmId id) {
    const auto& schema = param_schema(id);
    AlgorithmParams p;
    p.population_size = schema.default_population;
    for (const auto& spec : schema.params) p.named[spec.name] = spec.value;
    return p;
}

ResolvedParams resolve_params(AlgorithmId id, const AlgorithmParams& params) {
    const auto& schema = param_schema(id);
    ResolvedParams out;
    out.population_size =
        params.population_size.has_value() ? *params.population_size : schema.default_population;
    if (out.population_size < schema.min_population)
        throw std::invalid_argument(to_string(id) + " requires a population of at least " +
                                    std::to_string(schema.min_population));
    for (const auto& spec : schema.params) out.named[spec.name] = spec.value;
    for (const auto& [name, value] : params.named) {
        const auto spec = std::find_if(schema.params.begin(), schema.params.end(),
                                       [&](const ParamSpec& s) { return s.name == name; });
        if (spec == schema.params.end())
            throw std::invalid_argument(to_string(id) + " has no parameter named '" + name + "'");
        if (value < spec->min || value > spec->max)
            throw std::invalid_argument(to_string(id) + " parameter '" + name +
                                        "' outside its valid range");
        out.named[name] = value;
    }
    return out;
}

std::unique_ptr<AlgorithmInstance> make_algorithm(AlgorithmId id, AlgorithmParams params) {
    return row_of(id).factory(resolve_params(id, params));
}

}  // namespace menagerie
