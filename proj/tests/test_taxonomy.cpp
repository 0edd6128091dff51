#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "menagerie/taxonomy.hpp"

using namespace menagerie;
using namespace menagerie::tax;

namespace {
std::string joined(const std::vector<AlgorithmId>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + to_string(ids[i]);
    return out;
}

// frozen golden classification lists, byte-exact including order
const std::map<std::string, std::string> kGolden = {
    {"restarts", "ABC,BFO,BeA,CS,SFLA"},
    {"sa-like-acceptance", "BA,CRO"},
    {"random-walk-diversification", "ALO,BFO,CS,GSO,KH,MBO"},
    {"spiral-trajectory", "GWO,MFO,WOA"},
    {"es-like", "BeA,HS,IWO"},
    {"ea-like", "BBO,BSO,COA,ICA,SFLA,SCA"},
    {"inverse-square-attraction", "CSS,FA,GSA"},
    {"uses-historical-bests", "PSO,KH,MFO"},
    {"time-dependent-move-size", "ABC,ALO,BB-BC,CSS,IWO,MBO"},
    {"distance-dependent-move-size", "CSS,FA,GSA"},
    {"region-based-sampling", "ALO,BA,BeA,BB-BC,FWA,GWO,WOA"},
    {"local-search-hybrid", "CSO,CRO,COA,FWA,IWO,MBO,WCA"},
    {"target-population-best-only", "BA,CSO,FOA"},
    {"target-fitness-informed", "GwSO,WCA,GWO,COA"},
    {"target-summarized", "KH,BB-BC"},
    {"target-time-varying", "MFO,WOA"},
    {"pso-like", "ABC,BeA,BA,COA,CSO,CSS,FA,FOA,FPA,GSA,GSO,GWO,GwSO,KH,MFO,TLBO,WCA,WOA"},
};
}  // namespace

TEST_SUITE_BEGIN("taxonomy");

TEST_CASE("all seventeen golden sets reproduce byte-exactly") {
    for (const auto& [tag, expected] : kGolden) {
        CAPTURE(tag);
        CHECK(joined(algorithms_with(tag)) == expected);
    }
}

TEST_CASE("universal tags appear in every manifest") {
    for (AlgorithmId id : all_algorithm_ids()) {
        const auto& m = manifest_of(id);
        CHECK(m.has(ConceptTag::hill_climbing));
        CHECK(m.has(ConceptTag::adaptive_memory));
        CHECK(m.has(ConceptTag::population_based));
    }
    CHECK(algorithms_with(ConceptTag::population_based).size() == 34);
}

TEST_CASE("search-space-mapping stays empty") {
    CHECK(algorithms_with(ConceptTag::search_space_mapping).empty());
}

TEST_CASE("manifest spot checks") {
    CHECK(manifest_of(AlgorithmId::FA).has(FeatureTag::inverse_square_attraction));
    CHECK(manifest_of(AlgorithmId::HS).has(FeatureTag::es_like));
    CHECK_FALSE(manifest_of(AlgorithmId::MBO).has(FeatureTag::ea_like));
    CHECK_FALSE(manifest_of(AlgorithmId::MBO).has(FeatureTag::pso_like));
    CHECK(joined(algorithms_with(FeatureTag::uses_velocity)) == "PSO,CSS,GSA");
    CHECK(joined(algorithms_with(FeatureTag::target_all_others)) == "CSS,FA,GSA");
}

TEST_CASE("tag vocabulary is closed and round-trips") {
    CHECK(all_concept_tags().size() == 9);
    CHECK(all_feature_tags().size() == 19);
    for (ConceptTag t : all_concept_tags()) CHECK(concept_tag_from_string(to_string(t)) == t);
    for (FeatureTag t : all_feature_tags()) CHECK(feature_tag_from_string(to_string(t)) == t);
    CHECK_THROWS_AS(algorithms_with("not-a-tag"), std::invalid_argument);
    CHECK(is_known_tag("restarts"));
    CHECK_FALSE(is_known_tag("restart"));
}

TEST_CASE("similarity is a Jaccard index over the combined tag sets") {
    for (AlgorithmId id : all_algorithm_ids()) CHECK(similarity(id, id) == 1.0);
    CHECK(similarity(AlgorithmId::FA, AlgorithmId::GSA) ==
          similarity(AlgorithmId::GSA, AlgorithmId::FA));
    CHECK(similarity(AlgorithmId::FA, AlgorithmId::GSA) >
          similarity(AlgorithmId::FA, AlgorithmId::GA));

    // recompute one pair independently from the manifests
    auto tag_set = [](AlgorithmId id) {
        std::set<std::string> s;
        for (ConceptTag t : manifest_of(id).concepts) s.insert(to_string(t));
        for (FeatureTag t : manifest_of(id).features) s.insert("f:" + to_string(t));
        return s;
    };
    const auto a = tag_set(AlgorithmId::FA), b = tag_set(AlgorithmId::GSA);
    std::size_t inter = 0;
    for (const auto& t : a) inter += b.count(t);
    const double expected =
        static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
    CHECK(similarity(AlgorithmId::FA, AlgorithmId::GSA) == doctest::Approx(expected));
}

TEST_CASE("metadata carries the verbatim citation bands") {
    const std::map<std::string, std::string> expected = {
        {"ABC", ">4500 citations"}, {"HS", "~4000 citations"}, {"CS", "~3000 citations"},
        {"GA", ">60000 citations"}, {"PSO", ">50000 citations"},
    };
    for (const auto& [acr, band] : expected)
        CHECK(metadata_of(algorithm_id_from_string(acr)).citations == band);

    const auto records = export_metadata();
    CHECK(records.size() == 34);
    for (const auto& r : records) {
        CHECK(!r.name.empty());
        CHECK(r.year >= 1975);
        CHECK(r.year <= 2016);
        CHECK(r.citations.find("citations") != std::string::npos);
    }
}

TEST_CASE("metadata and manifest exports are well-formed") {
    const auto csv = metadata_csv();
    CHECK(csv.rfind("acronym,name,year,citations\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 35);
    CHECK(csv.find("GA,Genetic Algorithm,1975,>60000 citations") != std::string::npos);

    const auto meta = nlohmann::json::parse(metadata_json());
    CHECK(meta.size() == 34);
    CHECK(meta[0]["acronym"] == "GA");
    CHECK(meta[0]["year"] == 1975);

    const auto man = nlohmann::json::parse(manifest_json());
    CHECK(man.size() == 34);
    for (const auto& item : man) {
        CHECK(item.contains("acronym"));
        CHECK(item.contains("name"));
        CHECK(item.contains("year"));
        CHECK(item.contains("citations"));
        CHECK(item.contains("concepts"));
        CHECK(item.contains("features"));
        for (const auto& t : item["concepts"]) CHECK(is_known_tag(t.get<std::string>()));
        for (const auto& t : item["features"]) CHECK(is_known_tag(t.get<std::string>()));
    }

    const auto index = tag_index_csv();
    CHECK(index.find("restarts,\"ABC,BFO,BeA,CS,SFLA\"") != std::string::npos);
}

TEST_SUITE_END();
