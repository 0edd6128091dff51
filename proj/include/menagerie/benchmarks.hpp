#pragma once

#include <string>
#include <vector>

#include "menagerie/core.hpp"

namespace menagerie::bench {

/// A standard continuous test function with its canonical box domain and
/// known optimum.
struct BenchmarkFunction {
    std::string name;
    double domain_lo;
    double domain_hi;
    /// Optimum position for the given dimension count.
    Vec optimum_position(std::size_t dims) const;
    double optimum_value;
    double (*eval)(std::span<const double>);

    SearchSpace space(std::size_t dims) const { return SearchSpace::box(dims, domain_lo, domain_hi); }
    Objective objective() const;
};

const std::vector<BenchmarkFunction>& all_benchmarks();
const BenchmarkFunction& benchmark(const std::string& name);

/// Standard textbook value of the named function at x.
/// Known names: sphere, rosenbrock, rastrigin, ackley, griewank.
double evaluate_benchmark(const std::string& name, std::span<const double> x);

/// Uniform i.i.d. sampling baseline: budget samples, best-so-far trace.
/// The universal fairness yardstick for every algorithm at equal budgets.
RunTrace random_search(const Objective& objective, const SearchSpace& space, std::uint64_t budget,
                       RngStream& rng);

}  // namespace menagerie::bench
