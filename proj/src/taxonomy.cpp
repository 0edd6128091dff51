#include "menagerie/taxonomy.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace menagerie::tax {

namespace {
using Id = AlgorithmId;

const std::array<ConceptTag, kConceptTagCount> kConceptTags = {
    ConceptTag::hill_climbing,
    ConceptTag::accepting_negative_moves,
    ConceptTag::restarts,
    ConceptTag::adaptive_memory,
    ConceptTag::population_based,
    ConceptTag::intermediate_search,
    ConceptTag::directional_search,
    ConceptTag::variable_neighbourhood_search,
    ConceptTag::search_space_mapping,
};

const std::array<FeatureTag, kFeatureTagCount> kFeatureTags = {
    FeatureTag::uses_historical_bests,
    FeatureTag::uses_velocity,
    FeatureTag::time_dependent_move_size,
    FeatureTag::distance_dependent_move_size,
    FeatureTag::region_based_sampling,
    FeatureTag::local_search_hybrid,
    FeatureTag::random_restart_diversification,
    FeatureTag::random_walk_diversification,
    FeatureTag::spiral_trajectory,
    FeatureTag::inverse_square_attraction,
    FeatureTag::target_population_best_only,
    FeatureTag::target_fitness_informed,
    FeatureTag::target_all_others,
    FeatureTag::target_summarized,
    FeatureTag::target_time_varying,
    FeatureTag::pso_like,
    FeatureTag::es_like,
    FeatureTag::ea_like,
    FeatureTag::sa_like_acceptance,
};

const char* kConceptNames[kConceptTagCount] = {
    "hill-climbing",
    "accepting-negative-moves",
    "restarts",
    "adaptive-memory",
    "population-based",
    "intermediate-search",
    "directional-search",
    "variable-neighbourhood-search",
    "search-space-mapping",
};

const char* kFeatureNames[kFeatureTagCount] = {
    "uses-historical-bests",
    "uses-velocity",
    "time-dependent-move-size",
    "distance-dependent-move-size",
    "region-based-sampling",
    "local-search-hybrid",
    "random-restart-diversification",
    "random-walk-diversification",
    "spiral-trajectory",
    "inverse-square-attraction",
    "target-population-best-only",
    "target-fitness-informed",
    "target-all-others",
    "target-summarized",
    "target-time-varying",
    "pso-like",
    "es-like",
    "ea-like",
    "sa-like-acceptance",
};

struct MetadataRow {
    Id id;
    const char* acronym;
    const char* name;
    int year;
    const char* citations;
};

const MetadataRow kMetadata[kAlgorithmCount] = {
    {Id::GA, "GA", "Genetic Algorithm", 1975, ">60000 citations"},
    {Id::PSO, "PSO", "Particle Swarm Optimisation", 1995, ">50000 citations"},
    {Id::ALO, "ALO", "Ant Lion Optimizer", 2015, ">300 citations"},
    {Id::ABC, "ABC", "Artificial Bee Colony Algorithm", 2005, ">4500 citations"},
    {Id::BFO, "BFO", "Bacterial Foraging Optimization", 2002, ">2500 citations"},
    {Id::BA, "BA", "Bat Algorithm", 2012, ">600 citations"},
    {Id::BeA, "BeA", "Bees Algorithm", 2006, ">1000 citations"},
    {Id::BB_BC, "BB-BC", "Big Bang-Big Crunch", 2006, ">600 citations"},
    {Id::BBO, "BBO", "Biogeography-Based Optimizer", 2008, "~2000 citations"},
    {Id::BSO, "BSO", "Brain Storm Optimization", 2011, ">300 citations"},
    {Id::CSO, "CSO", "Cat Swarm Optimization", 2006, "~300 citations"},
    {Id::CSS, "CSS", "Charged System Search", 2010, "~600 citations"},
    {Id::CRO, "CRO", "Chemical Reaction Optimization", 2010, ">300 citations"},
    {Id::COA, "COA", "Cuckoo Optimization Algorithm", 2011, "~500 citations"},
    {Id::CS, "CS", "Cuckoo Search", 2009, "~3000 citations"},
    {Id::FA, "FA", "Firefly Algorithm", 2009, ">2000 citations"},
    {Id::FWA, "FWA", "Firework Algorithm", 2010, ">300 citations"},
    {Id::FPA, "FPA", "Flower Pollination Algorithm", 2012, ">500 citations"},
    {Id::FOA, "FOA", "Fruit Fly Optimization Algorithm", 2012, ">600 citations"},
    // GwSO band covers a follow-up reference as well as the seminal paper.
    {Id::GwSO, "GwSO", "Glowworm Swarm Optimization", 2005, ">600 citations"},
    {Id::GSA, "GSA", "Gravitational Search Algorithm", 2009, ">2500 citations"},
    {Id::GWO, "GWO", "Grey Wolf Optimizer", 2014, ">1000 citations"},
    {Id::GSO, "GSO", "Group Search Optimizer", 2009, ">500 citations"},
    {Id::HS, "HS", "Harmony Search", 2001, "~4000 citations"},
    {Id::ICA, "ICA", "Imperialist Competitive Algorithm", 2007, "~1500 citations"},
    {Id::IWO, "IWO", "Invasive Weed Optimization", 2006, ">750 citations"},
    {Id::KH, "KH", "Krill Herd", 2012, ">600 citations"},
    {Id::MBO, "MBO", "Marriage in Honey Bees Optimization", 2001, "~400 citations"},
    {Id::MFO, "MFO", "Moth-Flame Optimization", 2015, "~250 citations"},
    {Id::SFLA, "SFLA", "Shuffled Frog Leaping Algorithm", 2003, ">1000 citations"},
    {Id::SCA, "SCA", "Society and Civilisation Algorithm", 2003, ">300 citations"},
    {Id::TLBO, "TLBO", "Teacher-Learning Based Optimization", 2011, ">1000 citations"},
    {Id::WCA, "WCA", "Water Cycle Algorithm", 2009, "~250 citations"},
    {Id::WOA, "WOA", "Whale Optimization Algorithm", 2016, "~250 citations"},
};

// Curated tag membership. List order is part of the data contract and is
// preserved by algorithms_with for these lists.
const std::vector<Id> kRestarts = {Id::ABC, Id::BFO, Id::BeA, Id::CS, Id::SFLA};
const std::vector<Id> kSaLike = {Id::BA, Id::CRO};
const std::vector<Id> kRandomWalk = {Id::ALO, Id::BFO, Id::CS, Id::GSO, Id::KH, Id::MBO};
const std::vector<Id> kSpiral = {Id::GWO, Id::MFO, Id::WOA};
const std::vector<Id> kEsLike = {Id::BeA, Id::HS, Id::IWO};
const std::vector<Id> kEaLike = {Id::BBO, Id::BSO, Id::COA, Id::ICA, Id::SFLA, Id::SCA};
const std::vector<Id> kInverseSquare = {Id::CSS, Id::FA, Id::GSA};
const std::vector<Id> kHistoricalBests = {Id::PSO, Id::KH, Id::MFO};
const std::vector<Id> kTimeDependent = {Id::ABC, Id::ALO, Id::BB_BC, Id::CSS, Id::IWO, Id::MBO};
const std::vector<Id> kDistanceDependent = {Id::CSS, Id::FA, Id::GSA};
const std::vector<Id> kRegionBased = {Id::ALO, Id::BA,  Id::BeA, Id::BB_BC,
                                      Id::FWA, Id::GWO, Id::WOA};
const std::vector<Id> kLocalSearchHybrid = {Id::CSO, Id::CRO, Id::COA, Id::FWA,
                                            Id::IWO, Id::MBO, Id::WCA};
const std::vector<Id> kTargetBestOnly = {Id::BA, Id::CSO, Id::FOA};
const std::vector<Id> kTargetFitnessInformed = {Id::GwSO, Id::WCA, Id::GWO, Id::COA};
const std::vector<Id> kTargetSummarized = {Id::KH, Id::BB_BC};
const std::vector<Id> kTargetTimeVarying = {Id::MFO, Id::WOA};
const std::vector<Id> kPsoLike = {Id::ABC, Id::BeA, Id::BA,   Id::COA, Id::CSO, Id::CSS,
                                  Id::FA,  Id::FOA, Id::FPA,  Id::GSA, Id::GSO, Id::GWO,
                                  Id::GwSO, Id::KH, Id::MFO, Id::TLBO, Id::WCA, Id::WOA};
const std::vector<Id> kUsesVelocity = {Id::PSO, Id::CSS, Id::GSA};
// The underlying all-others list carries the token "GAO", which matches no
// roster acronym; GSA (the third all-pairs inverse-square algorithm) is stored.
const std::vector<Id> kTargetAllOthers = {Id::CSS, Id::FA, Id::GSA};

std::vector<Id> roster_vector() {
    const auto& ids = all_algorithm_ids();
    return {ids.begin(), ids.end()};
}

bool contains(const std::vector<Id>& v, Id id) {
    return std::find(v.begin(), v.end(), id) != v.end();
}

// Concept membership derived from the curated lists above plus the family
// analysis: intermediate search comes with PSO-like or EA-like composition
// (and with GA/PSO themselves), directional search with PSO-like movement
// (plus PSO and BFO's run-while-improving rule), and the spiral trio plus PSO
// count as variable neighbourhood search.
std::vector<Id> concept_members(ConceptTag tag) {
    const auto roster = roster_vector();
    std::vector<Id> out;
    switch (tag) {
        case ConceptTag::hill_climbing:
        case ConceptTag::adaptive_memory:
        case ConceptTag::population_based:
            return roster;
        case ConceptTag::restarts:
            return kRestarts;
        case ConceptTag::accepting_negative_moves: {
            out = kSaLike;
            for (Id id : kRandomWalk)
                if (!contains(out, id)) out.push_back(id);
            return out;
        }
        case ConceptTag::intermediate_search: {
            for (Id id : roster)
                if (id == Id::GA || id == Id::PSO || contains(kPsoLike, id) ||
                    contains(kEaLike, id))
                    out.push_back(id);
            return out;
        }
        case ConceptTag::directional_search: {
            for (Id id : roster)
                if (id == Id::PSO || id == Id::BFO || contains(kPsoLike, id)) out.push_back(id);
            return out;
        }
        case ConceptTag::variable_neighbourhood_search: {
            for (Id id : roster)
                if (id == Id::PSO || contains(kSpiral, id)) out.push_back(id);
            return out;
        }
        case ConceptTag::search_space_mapping:
            return {};
    }
    throw std::logic_error("unreachable concept tag");
}

const std::vector<Id>& feature_members(FeatureTag tag) {
    switch (tag) {
        case FeatureTag::uses_historical_bests: return kHistoricalBests;
        case FeatureTag::uses_velocity: return kUsesVelocity;
        case FeatureTag::time_dependent_move_size: return kTimeDependent;
        case FeatureTag::distance_dependent_move_size: return kDistanceDependent;
        case FeatureTag::region_based_sampling: return kRegionBased;
        case FeatureTag::local_search_hybrid: return kLocalSearchHybrid;
        case FeatureTag::random_restart_diversification: return kRestarts;
        case FeatureTag::random_walk_diversification: return kRandomWalk;
        case FeatureTag::spiral_trajectory: return kSpiral;
        case FeatureTag::inverse_square_attraction: return kInverseSquare;
        case FeatureTag::target_population_best_only: return kTargetBestOnly;
        case FeatureTag::target_fitness_informed: return kTargetFitnessInformed;
        case FeatureTag::target_all_others: return kTargetAllOthers;
        case FeatureTag::target_summarized: return kTargetSummarized;
        case FeatureTag::target_time_varying: return kTargetTimeVarying;
        case FeatureTag::pso_like: return kPsoLike;
        case FeatureTag::es_like: return kEsLike;
        case FeatureTag::ea_like: return kEaLike;
        case FeatureTag::sa_like_acceptance: return kSaLike;
    }
    throw std::logic_error("unreachable feature tag");
}

std::map<Id, ComponentManifest> build_manifests() {
    std::map<Id, ComponentManifest> manifests;
    for (Id id : all_algorithm_ids()) manifests[id].id = id;
    for (ConceptTag tag : kConceptTags)
        for (Id id : concept_members(tag)) manifests[id].concepts.push_back(tag);
    for (FeatureTag tag : kFeatureTags)
        for (Id id : feature_members(tag)) manifests[id].features.push_back(tag);
    // Tag order inside a manifest follows the enum order.
    for (auto& [id, m] : manifests) {
        std::stable_sort(m.concepts.begin(), m.concepts.end());
        std::stable_sort(m.features.begin(), m.features.end());
    }
    return manifests;
}

const std::map<Id, ComponentManifest>& manifests() {
    static const std::map<Id, ComponentManifest> m = build_manifests();
    return m;
}

std::bitset<kConceptTagCount + kFeatureTagCount> tag_bits(const ComponentManifest& m) {
    std::bitset<kConceptTagCount + kFeatureTagCount> bits;
    for (ConceptTag t : m.concepts) bits.set(static_cast<std::size_t>(t));
    for (FeatureTag t : m.features) bits.set(kConceptTagCount + static_cast<std::size_t>(t));
    return bits;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join_ids(const std::vector<Id>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ',';
        out += menagerie::to_string(ids[i]);
    }
    return out;
}
}  // namespace

const std::array<ConceptTag, kConceptTagCount>& all_concept_tags() { return kConceptTags; }
const std::array<FeatureTag, kFeatureTagCount>& all_feature_tags() { return kFeatureTags; }

std::string to_string(ConceptTag tag) { return kConceptNames[static_cast<std::size_t>(tag)]; }
std::string to_string(FeatureTag tag) { return kFeatureNames[static_cast<std::size_t>(tag)]; }

ConceptTag concept_tag_from_string(const std::string& s) {
    for (std::size_t i = 0; i < kConceptTagCount; ++i)
        if (s == kConceptNames[i]) return static_cast<ConceptTag>(i);
    throw std::invalid_argument("unknown concept tag: " + s);
}

FeatureTag feature_tag_from_string(const std::string& s) {
    for (std::size_t i = 0; i < kFeatureTagCount; ++i)
        if (s == kFeatureNames[i]) return static_cast<FeatureTag>(i);
    throw std::invalid_argument("unknown feature tag: " + s);
}

bool is_known_tag(const std::string& s) {
    for (const char* n : kConceptNames)
        if (s == n) return true;
    for (const char* n : kFeatureNames)
        if (s == n) return true;
    return false;
}

bool ComponentManifest::has(ConceptTag t) const {
    return std::find(concepts.begin(), concepts.end(), t) != concepts.end();
}

bool ComponentManifest::has(FeatureTag t) const {
    return std::find(features.begin(), features.end(), t) != features.end();
}

const ComponentManifest& manifest_of(AlgorithmId id) { return manifests().at(id); }

const AlgorithmMetadata& metadata_of(AlgorithmId id) {
    static const std::map<Id, AlgorithmMetadata> rows = [] {
        std::map<Id, AlgorithmMetadata> out;
        for (const auto& r : kMetadata) out[r.id] = {r.acronym, r.name, r.year, r.citations};
        return out;
    }();
    return rows.at(id);
}

std::vector<AlgorithmId> algorithms_with(ConceptTag tag) { return concept_members(tag); }

std::vector<AlgorithmId> algorithms_with(FeatureTag tag) { return feature_members(tag); }

std::vector<AlgorithmId> algorithms_with(const std::string& tag) {
    for (std::size_t i = 0; i < kConceptTagCount; ++i)
        if (tag == kConceptNames[i]) return algorithms_with(static_cast<ConceptTag>(i));
    for (std::size_t i = 0; i < kFeatureTagCount; ++i)
        if (tag == kFeatureNames[i]) return algorithms_with(static_cast<FeatureTag>(i));
    throw std::invalid_argument("unknown tag: " + tag);
}

double similarity(AlgorithmId a, AlgorithmId b) {
    const auto bits_a = tag_bits(manifest_of(a));
    const auto bits_b = tag_bits(manifest_of(b));
    const auto inter = (bits_a & bits_b).count();
    const auto uni = (bits_a | bits_b).count();
    return uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

std::vector<AlgorithmMetadata> export_metadata() {
    std::vector<AlgorithmMetadata> out;
    out.reserve(kAlgorithmCount);
    for (const auto& r : kMetadata) out.push_back({r.acronym, r.name, r.year, r.citations});
    return out;
}

std::string metadata_csv() {
    std::ostringstream os;
    os << "acronym,name,year,citations\n";
    for (const auto& m : export_metadata())
        os << csv_field(m.acronym) << ',' << csv_field(m.name) << ',' << m.year << ','
           << csv_field(m.citations) << '\n';
    return os.str();
}

std::string metadata_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : export_metadata())
        arr.push_back({{"acronym", m.acronym},
                       {"name", m.name},
                       {"year", m.year},
                       {"citations", m.citations}});
    return arr.dump(2) + "\n";
}

std::string manifest_csv() {
    std::ostringstream os;
    os << "acronym,name,year,citations,concepts,features\n";
    for (Id id : all_algorithm_ids()) {
        const auto& meta = metadata_of(id);
        const auto& m = manifest_of(id);
        std::string concepts, features;
        for (std::size_t i = 0; i < m.concepts.size(); ++i)
            concepts += (i ? "|" : "") + to_string(m.concepts[i]);
        for (std::size_t i = 0; i < m.features.size(); ++i)
            features += (i ? "|" : "") + to_string(m.features[i]);
        os << csv_field(meta.acronym) << ',' << csv_field(meta.name) << ',' << meta.year << ','
           << csv_field(meta.citations) << ',' << csv_field(concepts) << ','
           << csv_field(features) << '\n';
    }
    return os.str();
}

std::string manifest_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (Id id : all_algorithm_ids()) {
        const auto& meta = metadata_of(id);
        const auto& m = manifest_of(id);
        nlohmann::json concepts = nlohmann::json::array();
        for (ConceptTag t : m.concepts) concepts.push_back(to_string(t));
        nlohmann::json features = nlohmann::json::array();
        for (FeatureTag t : m.features) features.push_back(to_string(t));
        arr.push_back({{"acronym", meta.acronym},
                       {"name", meta.name},
                       {"year", meta.year},
                       {"citations", meta.citations},
                       {"concepts", concepts},
                       {"features", features}});
    }
    return arr.dump(2) + "\n";
}

std::string tag_index_csv() {
    std::ostringstream os;
    os << "tag,algorithms\n";
    for (ConceptTag t : kConceptTags)
        os << csv_field(to_string(t)) << ',' << csv_field(join_ids(algorithms_with(t))) << '\n';
    for (FeatureTag t : kFeatureTags)
        os << csv_field(to_string(t)) << ',' << csv_field(join_ids(algorithms_with(t))) << '\n';
    return os.str();
}

}  // namespace menagerie::tax
