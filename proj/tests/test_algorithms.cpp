#include <cmath>
#include <set>

#include "doctest.h"
#include "menagerie/algorithms.hpp"
#include "menagerie/benchmarks.hpp"
#include "menagerie/components.hpp"
#include "oracles.hpp"

using namespace menagerie;

namespace {
double sphere(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

// named instance: RunContext keeps a reference to the objective it is given
const Objective kSphere = sphere;

/// Init a population and the instance state without running any steps.
struct Prepared {
    Population pop;
    SearchSpace space;
    std::unique_ptr<AlgorithmInstance> instance;
    RngStream rng;

    Prepared(AlgorithmId id, std::uint64_t seed, std::size_t dims = 2)
        : space(SearchSpace::box(dims, -5.0, 5.0)), rng(seed) {
        instance = make_algorithm(id);
        pop = init_population(space, instance->population_size(), kSphere, rng);
    }
};
}  // namespace

TEST_SUITE_BEGIN("algorithms");

TEST_CASE("roster spells exactly the 34 ids") {
    const auto& ids = all_algorithm_ids();
    CHECK(ids.size() == 34);
    const std::vector<std::string> expected = {
        "GA",  "PSO", "ALO", "ABC", "BFO",  "BA",  "BeA", "BB-BC", "BBO",  "BSO", "CSO", "CSS",
        "CRO", "COA", "CS",  "FA",  "FWA",  "FPA", "FOA", "GwSO",  "GSA",  "GWO", "GSO", "HS",
        "ICA", "IWO", "KH",  "MBO", "MFO",  "SFLA", "SCA", "TLBO", "WCA",  "WOA"};
    for (std::size_t i = 0; i < ids.size(); ++i) {
        CHECK(to_string(ids[i]) == expected[i]);
        CHECK(algorithm_id_from_string(expected[i]) == ids[i]);
    }
    CHECK_THROWS_AS(algorithm_id_from_string("XYZ"), std::invalid_argument);
}

TEST_CASE("construction validates population and parameters") {
    AlgorithmParams zero;
    zero.population_size = 0;
    CHECK_THROWS_AS(make_algorithm(AlgorithmId::GA, zero), std::invalid_argument);

    AlgorithmParams unknown;
    unknown.named["no_such_knob"] = 1.0;
    CHECK_THROWS_AS(make_algorithm(AlgorithmId::PSO, unknown), std::invalid_argument);

    AlgorithmParams out_of_range;
    out_of_range.named["inertia"] = 5.0;
    CHECK_THROWS_AS(make_algorithm(AlgorithmId::PSO, out_of_range), std::invalid_argument);

    AlgorithmParams ok;
    ok.named["inertia"] = 0.5;
    CHECK(make_algorithm(AlgorithmId::PSO, ok) != nullptr);
}

TEST_CASE("defaults: CS runs small, PSO runs canonical, GWO closes its schedule") {
    CHECK(default_params(AlgorithmId::CS).population_size.value() <= 25);
    const auto pso = default_params(AlgorithmId::PSO);
    CHECK(pso.named.at("inertia") == doctest::Approx(0.7));
    CHECK(pso.named.at("cognitive") == doctest::Approx(1.4));
    CHECK(pso.named.at("social") == doctest::Approx(1.4));
    CHECK(default_params(AlgorithmId::GWO).named.at("halfwidth_end") == 0.0);
}

TEST_CASE("state fields exist exactly where the manifest says") {
    const std::set<AlgorithmId> with_velocity = {AlgorithmId::PSO, AlgorithmId::CSS,
                                                 AlgorithmId::GSA};
    const std::set<AlgorithmId> with_hbest = {AlgorithmId::PSO, AlgorithmId::KH,
                                              AlgorithmId::MFO};
    for (AlgorithmId id : all_algorithm_ids()) {
        Prepared p(id, 5);
        RunContext ctx(kSphere, p.space, p.pop, 1000000);
        p.instance->init_state(ctx, p.rng);
        const auto& st = p.instance->state();
        CHECK(st.velocities.has_value() == (with_velocity.count(id) > 0));
        CHECK(st.historical_bests.has_value() == (with_hbest.count(id) > 0));
    }
}

TEST_CASE("every algorithm completes sphere runs with monotone best traces") {
    const auto space = SearchSpace::box(2, -5.12, 5.12);
    for (AlgorithmId id : all_algorithm_ids()) {
        CAPTURE(to_string(id));
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            auto instance = make_algorithm(id);
            RngStream rng(seed);
            const auto trace = run(*instance, sphere, space, 2000, rng);
            CHECK(trace.total_evals() <= 2000);
            // only ICA may stop before the budget is spent
            if (id != AlgorithmId::ICA) CHECK(trace.total_evals() == 2000);
            for (std::size_t i = 1; i < trace.records.size(); ++i) {
                CHECK(trace.records[i].best <= trace.records[i - 1].best);
                CHECK(trace.records[i].evals >= trace.records[i - 1].evals);
            }
        }
    }
}

TEST_CASE("reruns with the same seed are bitwise identical") {
    const auto space = SearchSpace::box(3, -5.12, 5.12);
    for (AlgorithmId id : all_algorithm_ids()) {
        CAPTURE(to_string(id));
        auto once = [&] {
            auto instance = make_algorithm(id);
            RngStream rng(7);
            return run(*instance, sphere, space, 800, rng);
        };
        const auto t1 = once(), t2 = once();
        REQUIRE(t1.records.size() == t2.records.size());
        for (std::size_t i = 0; i < t1.records.size(); ++i) {
            CHECK(t1.records[i].best == t2.records[i].best);
            CHECK(t1.records[i].mean == t2.records[i].mean);
            CHECK(t1.records[i].spread == t2.records[i].spread);
        }
    }
}

TEST_CASE("greedy algorithms never worsen a member in a fresh step") {
    for (AlgorithmId id :
         {AlgorithmId::ABC, AlgorithmId::BeA, AlgorithmId::FWA, AlgorithmId::TLBO}) {
        CAPTURE(to_string(id));
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            Prepared p(id, seed, 2 + seed % 3);
            RunContext ctx(kSphere, p.space, p.pop, 1000000);
            p.instance->init_state(ctx, p.rng);
            const auto before = p.pop.values();
            p.instance->step(ctx, p.rng);
            const auto after = p.pop.values();
            REQUIRE(after.size() == before.size());
            for (std::size_t i = 0; i < before.size(); ++i) CHECK(after[i] <= before[i]);
        }
    }
}

TEST_CASE("TLBO steps never raise the population best") {
    Prepared p(AlgorithmId::TLBO, 31);
    RunContext ctx(kSphere, p.space, p.pop, 1000000);
    p.instance->init_state(ctx, p.rng);
    for (int s = 0; s < 20; ++s) {
        const double before = p.pop.members[p.pop.best_index()].val();
        p.instance->step(ctx, p.rng);
        CHECK(p.pop.members[p.pop.best_index()].val() <= before);
    }
}

TEST_CASE("BB-BC collapses onto a degenerate centroid") {
    Prepared p(AlgorithmId::BB_BC, 13);
    const Vec point{1.5, -2.5};
    for (auto& m : p.pop.members) {
        m.position = point;
        m.value = sphere(point);
    }
    CHECK(ops::weighted_centroid(p.pop) == point);
    RunContext ctx(kSphere, p.space, p.pop, 1000000);
    p.instance->init_state(ctx, p.rng);
    p.instance->step(ctx, p.rng);  // resamples around the centroid without error
    for (const auto& m : p.pop.members) CHECK(m.evaluated());
}

TEST_CASE("ICA terminates once a single sub-population remains") {
    auto instance = make_algorithm(AlgorithmId::ICA);
    const auto space = SearchSpace::box(2, -5.12, 5.12);
    RngStream rng(3);
    const auto trace = run(*instance, sphere, space, 50000, rng);
    CHECK(instance->terminated());
    CHECK(trace.total_evals() < 50000);
}

TEST_CASE("IWO growth respects its population cap") {
    auto instance = make_algorithm(AlgorithmId::IWO);
    const auto space = SearchSpace::box(2, -5.12, 5.12);
    RngStream rng(4);
    Population pop = init_population(space, instance->population_size(), sphere, rng);
    RunContext ctx(kSphere, space, pop, 100000);
    instance->init_state(ctx, rng);
    const auto cap = static_cast<std::size_t>(
        default_params(AlgorithmId::IWO).named.at("population_cap"));
    for (int s = 0; s < 30; ++s) {
        instance->step(ctx, rng);
        CHECK(pop.size() <= cap);
    }
    CHECK(pop.size() == cap);  // saturated after enough seeding rounds
}

TEST_CASE("ragged budgets exhaust mid-step without breaking invariants") {
    // budgets that never align with per-iteration evaluation counts
    const auto space = SearchSpace::box(2, -5.12, 5.12);
    for (AlgorithmId id : all_algorithm_ids()) {
        CAPTURE(to_string(id));
        auto instance = make_algorithm(id);
        const std::uint64_t budget = instance->population_size() + 37;
        RngStream rng(19);
        const auto trace = run(*instance, sphere, space, budget, rng);
        CHECK(trace.total_evals() <= budget);
        if (id != AlgorithmId::ICA) CHECK(trace.total_evals() == budget);
        for (std::size_t i = 1; i < trace.records.size(); ++i)
            CHECK(trace.records[i].best <= trace.records[i - 1].best);
    }
}

TEST_CASE("the roster also runs in five dimensions") {
    const auto space = SearchSpace::box(5, -5.12, 5.12);
    for (AlgorithmId id : all_algorithm_ids()) {
        CAPTURE(to_string(id));
        auto instance = make_algorithm(id);
        RngStream rng(23);
        const auto trace = run(*instance, sphere, space, 1200, rng);
        CHECK(trace.total_evals() <= 1200);
        CHECK(trace.final_best() < trace.records.front().best);
    }
}

TEST_CASE("PSO beats the random-search oracle on the 2-D sphere") {
    const auto space = SearchSpace::box(2, -5.12, 5.12);
    std::vector<double> pso_finals, rs_finals;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto instance = make_algorithm(AlgorithmId::PSO);
        RngStream r1(seed);
        pso_finals.push_back(run(*instance, sphere, space, 5000, r1).final_best());
        RngStream r2(seed);
        rs_finals.push_back(bench::random_search(sphere, space, 5000, r2).final_best());
    }
    CHECK(test_oracles::median_of(pso_finals) < test_oracles::median_of(rs_finals));
}

TEST_SUITE_END();
