#pragma once

#include <array>
#include <string>
#include <vector>

#include "menagerie/algorithms.hpp"

namespace menagerie::tax {

/// The nine recurring metaheuristic concepts.
enum class ConceptTag {
    hill_climbing,
    accepting_negative_moves,
    restarts,
    adaptive_memory,
    population_based,
    intermediate_search,
    directional_search,
    variable_neighbourhood_search,
    search_space_mapping,
};

/// Finer-grained mechanism and family features.
enum class FeatureTag {
    uses_historical_bests,
    uses_velocity,
    time_dependent_move_size,
    distance_dependent_move_size,
    region_based_sampling,
    local_search_hybrid,
    random_restart_diversification,
    random_walk_diversification,
    spiral_trajectory,
    inverse_square_attraction,
    target_population_best_only,
    target_fitness_informed,
    target_all_others,
    target_summarized,
    target_time_varying,
    pso_like,
    es_like,
    ea_like,
    sa_like_acceptance,
};

inline constexpr std::size_t kConceptTagCount = 9;
inline constexpr std::size_t kFeatureTagCount = 19;

const std::array<ConceptTag, kConceptTagCount>& all_concept_tags();
const std::array<FeatureTag, kFeatureTagCount>& all_feature_tags();

std::string to_string(ConceptTag tag);
std::string to_string(FeatureTag tag);
ConceptTag concept_tag_from_string(const std::string& s);
FeatureTag feature_tag_from_string(const std::string& s);
bool is_known_tag(const std::string& s);

/// Which concepts and features an algorithm implements.
struct ComponentManifest {
    AlgorithmId id;
    std::vector<ConceptTag> concepts;
    std::vector<FeatureTag> features;

    bool has(ConceptTag t) const;
    bool has(FeatureTag t) const;
};

struct AlgorithmMetadata {
    std::string acronym;
    std::string name;
    int year;
    std::string citations;  // verbatim band string, e.g. ">4500 citations"
};

const ComponentManifest& manifest_of(AlgorithmId id);
const AlgorithmMetadata& metadata_of(AlgorithmId id);

/// Ordered member list for a tag; curated lists keep their source order,
/// derived ones come back in roster order.
std::vector<AlgorithmId> algorithms_with(ConceptTag tag);
std::vector<AlgorithmId> algorithms_with(FeatureTag tag);
std::vector<AlgorithmId> algorithms_with(const std::string& tag);

/// Jaccard index of the two algorithms' combined concept+feature tag sets.
double similarity(AlgorithmId a, AlgorithmId b);

/// One record per algorithm in roster order.
std::vector<AlgorithmMetadata> export_metadata();

/// CSV with header acronym,name,year,citations.
std::string metadata_csv();
/// JSON array of {acronym, name, year, citations}.
std::string metadata_json();
/// CSV with header acronym,name,year,citations,concepts,features
/// (tag lists |-separated inside one field).
std::string manifest_csv();
/// JSON array of {acronym, name, year, citations, concepts, features}.
std::string manifest_json();
/// tag,algorithms rows for every tag (the inverted index).
std::string tag_index_csv();

}  // namespace menagerie::tax
